#include "surfsym/systems.hpp"

#include "surfsym/errors.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace surfsym {

std::string EquationTag::str() const {
    std::ostringstream os;
    if (fff_index >= 0) {
        os << "fff[" << fff_index << "]";
    } else {
        os << char('x' + component) << ":t^" << ti << "*s^" << si;
    }
    return os.str();
}

namespace {

// num/den pair with den in (u,v) only; arithmetic without gcd reduction
struct Frac {
    MPoly num;
    MPoly den; // nonzero

    Frac() : num(), den(Rat(1)) {}
    explicit Frac(const RatFn& f) : num(f.num()), den(f.den()) {}
};

void push_side(std::vector<MPoly>& conds, const MPoly& den) {
    MPoly n = den.normalized();
    if (n.is_constant()) return;
    if (std::find(conds.begin(), conds.end(), n) == conds.end()) conds.push_back(n);
}

} // namespace

PolySystem assemble(const Parametrization& P, const CandidateFrame& frame,
                    const FundamentalForm& ff) {
    PolySystem sys;
    sys.case_id = frame.id;

    const PhiTemplate& phi = frame.phi;
    // A solution must keep every side condition nonzero, so equations can be
    // saturated by those factors. This strips the common-denominator bulk
    // and keeps the elimination degrees near the minimum.
    std::vector<MPoly> factor_base;
    for (const MPoly& sc : phi.side_conditions) {
        MPoly f = sc.normalized();
        if (!f.is_constant() &&
            std::find(factor_base.begin(), factor_base.end(), f) == factor_base.end())
            factor_base.push_back(f);
    }
    auto saturate = [&factor_base](MPoly eq) {
        for (const MPoly& f : factor_base) {
            MPoly q;
            while (try_divexact(eq, f, &q)) eq = q;
        }
        return eq.normalized();
    };
    // phi over a single common denominator dd
    MPoly dd(Rat(1));
    for (const RatFn* f : {&phi.a, &phi.b, &phi.c, &phi.d, &phi.c1, &phi.c2})
        dd = lcm(dd, f->den());
    auto over_dd = [&dd](const RatFn& f) { return f.num() * divexact(dd, f.den()); };
    MPoly t = MPoly::variable(kParamT), s = MPoly::variable(kParamS);
    MPoly Nt = over_dd(phi.a) * t + over_dd(phi.b) * s + over_dd(phi.c1);
    MPoly Ns = over_dd(phi.c) * t + over_dd(phi.d) * s + over_dd(phi.c2);

    unsigned n = static_cast<unsigned>(std::max(P.n, 1));
    std::vector<MPoly> ntp{MPoly(Rat(1))}, nsp{MPoly(Rat(1))}, ddp{MPoly(Rat(1))};
    for (unsigned i = 1; i <= n; ++i) {
        ntp.push_back(ntp.back() * Nt);
        nsp.push_back(nsp.back() * Ns);
        ddp.push_back(ddp.back() * dd);
    }

    for (int comp = 0; comp < 3; ++comp) {
        // rhs: x_comp(phi(t,s)) as rhs_num / dd^n
        MPoly rhs_num;
        const MPoly& xc = P.comp(comp);
        auto cs_t = xc.coeffs_in(kParamT);
        for (size_t i = 0; i < cs_t.size(); ++i) {
            auto cs_ts = cs_t[i].coeffs_in(kParamS);
            for (size_t j = 0; j < cs_ts.size(); ++j) {
                if (cs_ts[j].is_zero()) continue;
                Rat coeff = cs_ts[j].constant_value();
                rhs_num += (ntp[i] * nsp[j] * ddp[n - i - j]).scaled(coeff);
            }
        }
        // lhs: (Q x + b)_comp over its own common denominator Dk
        MPoly Dk(Rat(1));
        for (int j = 0; j < 3; ++j) Dk = lcm(Dk, frame.Q[comp][j].den());
        Dk = lcm(Dk, frame.b[comp].den());
        MPoly lhs_num;
        for (int j = 0; j < 3; ++j)
            lhs_num += frame.Q[comp][j].num() *
                       divexact(Dk, frame.Q[comp][j].den()) * P.comp(j);
        lhs_num += frame.b[comp].num() * divexact(Dk, frame.b[comp].den());
        // difference over the common denominator Ck
        MPoly Ck = lcm(Dk, ddp[n]);
        MPoly diff = lhs_num * divexact(Ck, Dk) - rhs_num * divexact(Ck, ddp[n]);
        push_side(sys.side_conditions, Ck);
        // coefficientwise in (t,s)
        auto by_t = diff.coeffs_in(kParamT);
        for (size_t i = 0; i < by_t.size(); ++i) {
            auto by_ts = by_t[i].coeffs_in(kParamS);
            for (size_t j = 0; j < by_ts.size(); ++j) {
                if (by_ts[j].is_zero()) continue;
                MPoly eq = saturate(by_ts[j]);
                if (std::find(sys.equations.begin(), sys.equations.end(), eq) !=
                    sys.equations.end())
                    continue;
                sys.equations.push_back(eq);
                sys.tags.push_back(EquationTag{comp, static_cast<int>(i),
                                               static_cast<int>(j), -1});
            }
        }
    }

    int k = 0;
    for (const MPoly& c : fff_constraints(ff, phi)) {
        MPoly eq = saturate(c);
        ++k;
        if (eq.is_zero()) continue;
        if (std::find(sys.equations.begin(), sys.equations.end(), eq) !=
            sys.equations.end())
            continue;
        sys.equations.push_back(eq);
        sys.tags.push_back(EquationTag{-1, -1, -1, k - 1});
    }

    for (const MPoly& sc : phi.side_conditions) push_side(sys.side_conditions, sc);
    return sys;
}

std::string dump_system(const PolySystem& sys) {
    std::ostringstream os;
    os << "# case " << sys.case_id.str() << ", " << sys.equations.size()
       << " equations\n";
    for (size_t i = 0; i < sys.equations.size(); ++i)
        os << sys.equations[i].str() << "  # " << sys.tags[i].str() << "\n";
    for (const MPoly& sc : sys.side_conditions) os << "# side: " << sc.str() << "\n";
    return os.str();
}

} // namespace surfsym
