#pragma once

#include "surfsym/ratfn.hpp"
#include "surfsym/surface.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace surfsym {

inline const std::string kUnknownU = "u";
inline const std::string kUnknownV = "v";

// The six solvable shapes of the parameter-plane involution
// phi(t,s) = A*(t,s) + c, each with two free unknowns (u, v):
//   A    : A = -I,                       (u,v) = (c1, c2)
//   B    : A = [[1,u],[0,-1]],           (u,v) = (b, c2), c = c2*(-b/2, 1)
//   C    : A = [[-1,u],[0,1]],           (u,v) = (b, c1), c = (c1, 0)
//   D1   : A = [[a,(1-a^2)/c],[c,-a]],   (u,v) = (a, c),  shift 0, c != 0
//   D2i  : A = [[1,0],[c,-1]],           (u,v) = (c, c2), shift (0, c2)
//   D2ii : A as in D1 with a eliminated through the first-fundamental-form
//          quotient, (u,v) = (c1, c2)
enum class CaseKind { A, B, C, D1, D2i, D2ii };

struct CaseId {
    CaseKind kind;
    int det_sign; // +1 searches direct involutions, -1 opposite ones

    std::string str() const;
    static const std::vector<CaseId>& all(); // twelve, canonical order
    static std::optional<CaseId> parse(const std::string& text);
    int order_index() const;

    friend bool operator==(const CaseId& a, const CaseId& b) {
        return a.kind == b.kind && a.det_sign == b.det_sign;
    }
};

// Matrix entries and shift of phi as rational functions in the unknowns,
// together with the polynomials that must not vanish at a usable solution.
struct PhiTemplate {
    CaseKind kind;
    RatFn a, b, c, d;   // matrix [[a, b], [c, d]]
    RatFn c1, c2;       // shift
    RatFn delta;        // a*d - b*c; constant +1 (case A) or -1 (others)
    std::vector<MPoly> side_conditions;
};

// Builds the template; the fundamental form is consumed by case D2ii.
// The involution laws A^2 = I, (A + I)c = 0 are verified symbolically.
PhiTemplate phi_template(CaseKind kind, const FundamentalForm& ff);

// The three first-fundamental-form relations evaluated at the case's shift
// and matrix entries, cleared of denominators: necessary conditions at any
// true involution, appended to the main system as pruning equations.
std::vector<MPoly> fff_constraints(const FundamentalForm& ff, const PhiTemplate& phi);

// Frame of one case: M from the origin partials, L per the lifted-involution
// construction, Q = L*M^-1 and b = x(c) - Q*x(0) as rational functions in the
// unknowns.
struct CandidateFrame {
    CaseId id;
    PhiTemplate phi;
    std::array<std::array<Rat, 3>, 3> M;
    std::array<std::array<Rat, 3>, 3> Minv;
    std::array<std::array<RatFn, 3>, 3> L;
    std::array<std::array<RatFn, 3>, 3> Q;
    std::array<RatFn, 3> b;
};

CandidateFrame build_frame(const Parametrization& P, const FundamentalForm& ff,
                           CaseId id);

} // namespace surfsym
