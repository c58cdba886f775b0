#pragma once

#include "surfsym/roots.hpp"
#include "surfsym/systems.hpp"

#include <vector>

namespace surfsym {

// One real solution of a bivariate system. Coordinates are exact rationals
// or certified isolating intervals; `certified` means every system equation
// was verified to vanish and every side condition verified nonzero, by exact
// algebraic tests.
struct Root2D {
    RootInterval u, v;
    bool certified = false;

    Rat approx_u() const { return u.approx(); }
    Rat approx_v() const { return v.approx(); }
    bool is_exact() const { return u.is_exact() && v.is_exact(); }
};

struct SolutionSet {
    enum class Kind { Empty, Finite, PositiveDimensional };
    Kind kind = Kind::Empty;
    std::vector<Root2D> roots;  // Finite roots; for PositiveDimensional, the
                                // isolated extras from the saturated system
    MPoly witness;              // PositiveDimensional: square-free common factor
};

// Decides the real solution set: finitely many certified roots, empty, or a
// positive-dimensional witness curve (with any residual isolated roots
// reported alongside). Throws EliminationDegenerate when no usable
// eliminating pair can be found.
SolutionSet solve_real(const PolySystem& sys);

// Narrows both coordinate intervals below `width`.
Root2D refine_root(const Root2D& r, const Rat& width);

// Exact decision of e(u*, v*) == 0 at a root; e is a polynomial in the
// unknowns (u, v).
bool vanishes_at(const MPoly& e, const Root2D& r);
inline bool nonzero_at(const MPoly& e, const Root2D& r) { return !vanishes_at(e, r); }

// Exact coordinate helper (vanishing polynomial var - value).
RootInterval exact_coord(const Rat& value, const std::string& var);

// True iff the real zero set of the square-free bivariate g is infinite.
// Complete decision: vertical-line factors via the content, everything else
// by sampling between the critical u-values of the projection.
bool has_real_continuum(const MPoly& g);

// g / gcd(g, g_u, g_v): multiplicity-free version of a bivariate polynomial.
MPoly squarefree_part_bivariate(const MPoly& g);

} // namespace surfsym
