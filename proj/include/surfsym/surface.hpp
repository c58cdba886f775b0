#pragma once

#include "surfsym/mpoly.hpp"
#include "surfsym/ratfn.hpp"

#include <array>
#include <string>

namespace surfsym {

inline const std::string kParamT = "t";
inline const std::string kParamS = "s";

using Vec3P = std::array<MPoly, 3>;
using Vec3Q = std::array<Rat, 3>;

Vec3P cross(const Vec3P& a, const Vec3P& b);
Vec3Q cross(const Vec3Q& a, const Vec3Q& b);
bool is_zero(const Vec3P& a);
bool is_zero(const Vec3Q& a);

// Polynomial surface parametrization x(t,s) with cached partials and origin
// data. Immutable once built.
struct Parametrization {
    Vec3P x;              // components in (t, s)
    int n = 0;            // total degree: max of component total degrees
    Vec3P xt, xs;         // partial derivative triples
    Vec3Q origin;         // x(0,0)
    Vec3Q origin_normal;  // xt(0,0) x xs(0,0)

    const MPoly& comp(int i) const { return x[static_cast<size_t>(i)]; }
};

// Builds the cached form; components must involve no variables besides t, s.
Parametrization make_parametrization(const MPoly& x, const MPoly& y, const MPoly& z);

// Ensures x(0,0) is a regular point. If the input already qualifies it is
// returned unchanged; otherwise a random invertible affine change of
// parameters with small integer coefficients is applied (deterministic per
// seed, up to 16 attempts). The traced surface is unchanged.
// Throws DegenerateSurface when xt x xs == 0 identically, RetriesExhausted
// after 16 failed draws.
Parametrization prepare(const Parametrization& raw, unsigned seed);

// First fundamental form E, F, G and its values A, B, C at the origin.
struct FundamentalForm {
    MPoly E, F, G;
    Rat A, B, C;
};

// Requires a prepared parametrization (positive-definiteness at the origin
// is asserted).
FundamentalForm fundamental_form(const Parametrization& P);

// True iff the normal direction xt x xs is constant, i.e. the image is
// contained in a plane. Degenerate inputs (xt x xs == 0) return false.
bool plane_check(const Parametrization& P);

// Component i evaluated at a rational-function point (t,s) -> (pt, ps).
RatFn eval_at(const MPoly& component, const RatFn& pt, const RatFn& ps);

} // namespace surfsym
