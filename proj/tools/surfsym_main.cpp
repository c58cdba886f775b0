#include "surfsym/classifier.hpp"
#include "surfsym/errors.hpp"
#include "surfsym/jsonio.hpp"
#include "surfsym/parse.hpp"
#include "surfsym/systems.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream f(path);
    if (!f) throw surfsym::Error("IoError", "cannot open input file " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

} // namespace

int main(int argc, char** argv) {
    using namespace surfsym;
    CLI::App app{"surfsym: exact involution symmetries of polynomially "
                 "parametrized surfaces"};
    std::string input_path = "-";
    unsigned seed = 0;
    int digits = 12;
    std::string only, case_filter, dump_dir;
    bool json_out = false, show_time = false;
    app.add_option("input", input_path,
                   "input file with lines x = ..., y = ..., z = ... ('-' = stdin)");
    app.add_option("--seed", seed, "reparametrization RNG seed (default 0)");
    app.add_option("--digits", digits, "display precision for algebraic data");
    app.add_option("--only", only, "restrict search: direct | opposite")
        ->check(CLI::IsMember({"direct", "opposite"}));
    app.add_option("--case", case_filter, "run a single case, e.g. A+, D2ii-");
    app.add_flag("--json", json_out, "machine-readable JSON report");
    app.add_option("--dump-systems", dump_dir,
                   "write per-case polynomial systems to this directory");
    app.add_flag("--time", show_time, "print per-stage wall times to stderr");
    CLI11_PARSE(app, argc, argv);

    try {
        InputSpec spec = parse_input(read_input(input_path));
        AnalyzeOptions opt;
        opt.seed = seed;
        opt.digits = digits;
        if (only == "direct") opt.only = AnalyzeOptions::Only::Direct;
        if (only == "opposite") opt.only = AnalyzeOptions::Only::Opposite;
        if (!case_filter.empty()) {
            auto id = CaseId::parse(case_filter);
            if (!id) {
                std::cerr << "error: unknown case '" << case_filter << "'\n";
                return 1;
            }
            opt.single_case = *id;
        }
        Parametrization raw = make_parametrization(spec.x, spec.y, spec.z);

        if (!dump_dir.empty()) {
            Parametrization P = prepare(raw, opt.seed);
            FundamentalForm ff = fundamental_form(P);
            std::filesystem::create_directories(dump_dir);
            for (const CaseId& id : CaseId::all()) {
                if (opt.single_case && !(id == *opt.single_case)) continue;
                CandidateFrame fr = build_frame(P, ff, id);
                PolySystem sys = assemble(P, fr, ff);
                std::ofstream out(std::filesystem::path(dump_dir) /
                                  ("case" + id.str() + ".txt"));
                out << dump_system(sys);
            }
        }

        auto t0 = std::chrono::steady_clock::now();
        SymmetryReport rep = analyze_surface(raw, opt);
        auto t1 = std::chrono::steady_clock::now();

        if (show_time) {
            for (const CaseOutcome& oc : rep.outcomes)
                std::cerr << "time case " << oc.id.str() << ": " << oc.millis
                          << " ms\n";
            std::cerr << "time total: "
                      << std::chrono::duration<double, std::milli>(t1 - t0).count()
                      << " ms\n";
        }
        std::cout << (json_out ? report_to_json(rep) : report_to_text(rep));
        return 0;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        if (e.code() == "PlaneInput" || e.code() == "DegenerateSurface" ||
            e.code() == "CentralNotUnique") {
            std::cerr << "rejected: " << e.what() << "\n";
            return 2;
        }
        std::cerr << "error [" << e.code() << "]: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
