#include "surfsym/jsonio.hpp"

#include <json.hpp>

#include <sstream>

namespace surfsym {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

ordered_json scalar_json(const Scalar& s) {
    if (s.exact) return s.value.str();
    return ordered_json{{"lo", s.lo.str()}, {"hi", s.hi.str()}};
}

ordered_json vec_json(const SVec3& v) {
    return ordered_json::array({scalar_json(v[0]), scalar_json(v[1]), scalar_json(v[2])});
}

ordered_json coord_json(const RootInterval& c) {
    if (c.is_exact()) return c.exact->str();
    return ordered_json{{"lo", c.lo.str()},
                        {"hi", c.hi.str()},
                        {"minpoly", c.poly.str()}};
}

ordered_json element_json(const SymmetryElement& el) {
    ordered_json j;
    switch (el.type) {
        case SymmetryElement::Type::Point:
            j["type"] = "point";
            j["point"] = vec_json(el.a);
            break;
        case SymmetryElement::Type::Line:
            j["type"] = "line";
            j["point"] = vec_json(el.a);
            j["direction"] = vec_json(el.d);
            break;
        case SymmetryElement::Type::Plane:
            j["type"] = "plane";
            j["normal"] = vec_json(el.a);
            j["offset"] = scalar_json(el.offset);
            break;
    }
    return j;
}

const char* outcome_name(CaseOutcome::Kind k) {
    switch (k) {
        case CaseOutcome::Kind::Empty: return "empty";
        case CaseOutcome::Kind::Finite: return "finite";
        case CaseOutcome::Kind::PositiveDimensional: return "positive-dimensional";
        case CaseOutcome::Kind::Failed: return "failed";
    }
    return "?";
}

Scalar q_entry(const Involution& inv, int i, int j, int digits) {
    if (inv.exact) return exact_scalar(inv.Q[i][j]);
    return scalar_at(inv.frame->Q[i][j], inv.root, digits);
}

Scalar b_entry(const Involution& inv, int i, int digits) {
    if (inv.exact) return exact_scalar(inv.b[i]);
    return scalar_at(inv.frame->b[i], inv.root, digits);
}

Scalar phi_entry(const Involution& inv, int k, int digits) {
    if (inv.exact) return exact_scalar(inv.phiA[k]);
    const PhiTemplate& p = inv.frame->phi;
    const RatFn* fs[4] = {&p.a, &p.b, &p.c, &p.d};
    return scalar_at(*fs[k], inv.root, digits);
}

Scalar shift_entry(const Involution& inv, int k, int digits) {
    if (inv.exact) return exact_scalar(inv.phiC[k]);
    const PhiTemplate& p = inv.frame->phi;
    return scalar_at(k == 0 ? p.c1 : p.c2, inv.root, digits);
}

} // namespace

std::string report_to_json(const SymmetryReport& rep) {
    ordered_json j;
    j["schema"] = 1;
    j["surface"] = {{"x", rep.surface.x[0].str()},
                    {"y", rep.surface.x[1].str()},
                    {"z", rep.surface.x[2].str()},
                    {"degree", rep.surface.n},
                    {"seed", rep.seed}};
    j["involutions"] = ordered_json::array();
    for (const Involution& inv : rep.involutions) {
        ordered_json ji;
        ji["kind"] = kind_name(inv.kind);
        ji["case"] = inv.case_id.str();
        ji["detQ"] = inv.case_id.det_sign;
        ordered_json Q = ordered_json::array();
        for (int i = 0; i < 3; ++i) {
            ordered_json row = ordered_json::array();
            for (int k = 0; k < 3; ++k)
                row.push_back(scalar_json(q_entry(inv, i, k, rep.digits)));
            Q.push_back(row);
        }
        ji["Q"] = Q;
        ordered_json b = ordered_json::array();
        for (int i = 0; i < 3; ++i)
            b.push_back(scalar_json(b_entry(inv, i, rep.digits)));
        ji["b"] = b;
        ji["phi"] = {{"A", ordered_json::array(
                               {ordered_json::array(
                                    {scalar_json(phi_entry(inv, 0, rep.digits)),
                                     scalar_json(phi_entry(inv, 1, rep.digits))}),
                                ordered_json::array(
                                    {scalar_json(phi_entry(inv, 2, rep.digits)),
                                     scalar_json(phi_entry(inv, 3, rep.digits))})})},
                     {"c", ordered_json::array(
                               {scalar_json(shift_entry(inv, 0, rep.digits)),
                                scalar_json(shift_entry(inv, 1, rep.digits))})}};
        ji["root"] = {{"u", coord_json(inv.root.u)}, {"v", coord_json(inv.root.v)}};
        ji["element"] = element_json(inv.element);
        ji["exact"] = inv.exact;
        j["involutions"].push_back(ji);
    }
    if (rep.revolution) {
        ordered_json jr;
        jr["witness_case"] = rep.revolution->witness_case.str();
        jr["witness"] = rep.revolution->witness.str();
        if (rep.revolution->axis_known)
            jr["axis"] = element_json(rep.revolution->axis);
        else
            jr["axis"] = nullptr;
        jr["note"] = "surface of revolution: every plane through the axis is a "
                     "symmetry plane (infinite family not enumerated)";
        j["revolution"] = jr;
    } else {
        j["revolution"] = nullptr;
    }
    ordered_json cases = ordered_json::array();
    for (const CaseOutcome& oc : rep.outcomes) {
        ordered_json c{{"case", oc.id.str()},
                       {"outcome", outcome_name(oc.kind)},
                       {"roots", oc.roots},
                       {"involutions", oc.involutions}};
        if (!oc.note.empty()) c["note"] = oc.note;
        cases.push_back(c);
    }
    j["diagnostics"] = {{"cases", cases}};
    return j.dump(2) + "\n";
}

namespace {

std::string vec_text(const SVec3& v, int digits) {
    return "(" + v[0].str(digits) + ", " + v[1].str(digits) + ", " + v[2].str(digits) +
           ")";
}

std::string element_text(const SymmetryElement& el, int digits) {
    switch (el.type) {
        case SymmetryElement::Type::Point:
            return "center " + vec_text(el.a, digits);
        case SymmetryElement::Type::Line:
            return "axis through " + vec_text(el.a, digits) + " with direction " +
                   vec_text(el.d, digits);
        case SymmetryElement::Type::Plane:
            return "plane " + vec_text(el.a, digits) +
                   " . (x, y, z) = " + el.offset.str(digits);
    }
    return "?";
}

} // namespace

std::string report_to_text(const SymmetryReport& rep) {
    std::ostringstream os;
    os << "surface:\n";
    os << "  x = " << rep.surface.x[0].str() << "\n";
    os << "  y = " << rep.surface.x[1].str() << "\n";
    os << "  z = " << rep.surface.x[2].str() << "\n";
    os << "  total degree " << rep.surface.n << ", seed " << rep.seed << "\n\n";

    os << "involutions (" << rep.involutions.size() << "):\n";
    int k = 0;
    for (const Involution& inv : rep.involutions) {
        os << "  " << ++k << ". " << kind_name(inv.kind) << "  [case "
           << inv.case_id.str() << (inv.exact ? ", exact" : ", algebraic") << "]\n";
        os << "     " << element_text(inv.element, rep.digits) << "\n";
        os << "     Q = [";
        for (int i = 0; i < 3; ++i) {
            os << "[";
            for (int j = 0; j < 3; ++j)
                os << q_entry(inv, i, j, rep.digits).str(rep.digits)
                   << (j < 2 ? ", " : "");
            os << (i < 2 ? "], " : "]");
        }
        os << "]\n     b = (";
        for (int i = 0; i < 3; ++i)
            os << b_entry(inv, i, rep.digits).str(rep.digits) << (i < 2 ? ", " : "");
        os << ")\n     phi: A = [[" << phi_entry(inv, 0, rep.digits).str(rep.digits)
           << ", " << phi_entry(inv, 1, rep.digits).str(rep.digits) << "], ["
           << phi_entry(inv, 2, rep.digits).str(rep.digits) << ", "
           << phi_entry(inv, 3, rep.digits).str(rep.digits) << "]], c = ("
           << shift_entry(inv, 0, rep.digits).str(rep.digits) << ", "
           << shift_entry(inv, 1, rep.digits).str(rep.digits) << ")\n";
    }
    if (rep.involutions.empty()) os << "  none\n";
    os << "\n";
    if (rep.revolution) {
        os << "surface of revolution: yes (case " << rep.revolution->witness_case.str()
           << ", witness curve " << rep.revolution->witness.str() << " = 0)\n";
        if (rep.revolution->axis_known)
            os << "  axis of revolution: " << element_text(rep.revolution->axis, rep.digits)
               << "\n";
        else
            os << "  axis of revolution: not determined\n";
        os << "  every plane through the axis is a symmetry plane (infinite family "
              "not enumerated)\n";
    } else {
        os << "surface of revolution: no\n";
    }
    os << "\ncases:";
    for (const CaseOutcome& oc : rep.outcomes) {
        os << " " << oc.id.str() << "=" << outcome_name(oc.kind);
        if (oc.kind == CaseOutcome::Kind::Finite) os << "(" << oc.involutions << ")";
    }
    os << "\n";
    return os.str();
}

} // namespace surfsym
