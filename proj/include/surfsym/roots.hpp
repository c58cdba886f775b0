#pragma once

#include "surfsym/mpoly.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace surfsym {

// Isolating interval for one real root of a square-free univariate
// polynomial. Rational roots carry `exact` and have lo == hi == exact;
// irrational roots are certified (Sturm count 1) to be the only root of
// `poly` in [lo, hi], with endpoints that are not roots.
struct RootInterval {
    MPoly poly;
    Rat lo, hi;
    std::optional<Rat> exact;

    bool is_exact() const { return exact.has_value(); }
    Rat width() const { return hi - lo; }
    Rat mid() const { return (lo + hi) / Rat(2); }
    // Any rational representative (exact value or midpoint), for sorting.
    Rat approx() const { return is_exact() ? *exact : mid(); }
};

// One isolating interval per distinct real root, sorted ascending, pairwise
// disjoint. Rational roots are detected exactly. Throws on the zero
// polynomial and on multivariate input.
std::vector<RootInterval> isolate_real_roots(const MPoly& p);

// Narrows the interval below `width` by sign bisection; exact roots are
// returned unchanged. Throws ZeroWidthRequest for width <= 0 on an inexact
// root.
RootInterval refined(const RootInterval& r, const Rat& width);

// Cauchy bound: every real root of p has |x| < 1 + max|a_i / a_n|.
Rat cauchy_root_bound(const MPoly& p);

// Exact sign of a univariate polynomial at a rational point.
int sign_at(const MPoly& p, const Rat& x);

// Number of distinct real roots of (not necessarily square-free) univariate
// f in (a, b]; endpoints must not be roots.
int count_roots_in(const MPoly& f, const Rat& a, const Rat& b);

// Number of distinct real roots on the whole line.
int count_real_roots(const MPoly& f);

// The rational with the smallest denominator (then smallest |numerator|)
// in the closed interval [lo, hi].
Rat simplest_rational_in(const Rat& lo, const Rat& hi);

// --- outward rational interval arithmetic ----------------------------------

struct QInterval {
    Rat lo, hi;
    bool contains_zero() const { return lo.sign() <= 0 && hi.sign() >= 0; }
    Rat width() const { return hi - lo; }
};

QInterval iv_add(const QInterval& a, const QInterval& b);
QInterval iv_sub(const QInterval& a, const QInterval& b);
QInterval iv_mul(const QInterval& a, const QInterval& b);
QInterval iv_pow(const QInterval& a, unsigned e);

// Interval evaluation of p over a box; every variable of p needs an entry.
QInterval interval_eval(const MPoly& p, const std::map<std::string, QInterval>& box);

} // namespace surfsym
