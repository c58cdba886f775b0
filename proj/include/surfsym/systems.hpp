#pragma once

#include "surfsym/candidates.hpp"

#include <string>
#include <vector>

namespace surfsym {

// Where an equation came from: the coefficient of t^ti s^si in component
// `component` of Q x(t,s) + b - x(phi(t,s)), or fff constraint `fff_index`.
struct EquationTag {
    int component = -1; // 0,1,2 = x,y,z
    int ti = -1, si = -1;
    int fff_index = -1;

    std::string str() const;
};

// Overdetermined bivariate system in the unknowns (u, v) whose real
// solutions are exactly the usable parameter pairs of one case.
struct PolySystem {
    CaseId case_id;
    std::vector<MPoly> equations;        // primitive, nonzero, deduplicated
    std::vector<EquationTag> tags;       // parallel to equations
    std::vector<MPoly> side_conditions;  // must not vanish at a solution
};

// Expands Q x(t,s) + b - x(phi(t,s)) coefficientwise, clears denominators
// per component (recording them as side conditions) and appends the
// fff pruning constraints. Deterministic: equation order is pinned by the
// provenance tags.
PolySystem assemble(const Parametrization& P, const CandidateFrame& frame,
                    const FundamentalForm& ff);

// Plain-text debug format: one equation per line in expanded monomial form,
// then `# side:` lines for the side conditions.
std::string dump_system(const PolySystem& sys);

} // namespace surfsym
