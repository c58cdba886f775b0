#pragma once

#include "surfsym/mpoly.hpp"

#include <map>
#include <string>

namespace surfsym {

// Quotient of two multivariate polynomials, kept reduced: gcd(num, den) is
// constant and den is integer-primitive with positive leading coefficient
// under the canonical term order, so equal values have equal representations.
class RatFn {
public:
    RatFn() : num_(), den_(Rat(1)) {}
    RatFn(const Rat& c) : num_(c), den_(Rat(1)) {}          // NOLINT
    RatFn(const MPoly& p) : num_(p), den_(Rat(1)) {}        // NOLINT
    RatFn(MPoly num, MPoly den);

    const MPoly& num() const { return num_; }
    const MPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    Rat constant_value() const;

    RatFn operator-() const;
    friend RatFn operator+(const RatFn& a, const RatFn& b);
    friend RatFn operator-(const RatFn& a, const RatFn& b);
    friend RatFn operator*(const RatFn& a, const RatFn& b);
    friend RatFn operator/(const RatFn& a, const RatFn& b); // throws on zero divisor
    RatFn& operator+=(const RatFn& o) { return *this = *this + o; }
    RatFn& operator-=(const RatFn& o) { return *this = *this - o; }
    RatFn& operator*=(const RatFn& o) { return *this = *this * o; }
    RatFn& operator/=(const RatFn& o) { return *this = *this / o; }

    friend bool operator==(const RatFn& a, const RatFn& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFn& a, const RatFn& b) { return !(a == b); }

    // Exact value at a rational point; throws if the denominator vanishes.
    Rat eval(const std::map<std::string, Rat>& point) const;

    std::string str() const;

private:
    void reduce();
    MPoly num_, den_;
};

MPoly lcm(const MPoly& a, const MPoly& b);

// Substitutes `subs` into p; every variable of p must have an entry. When all
// substitutions are polynomial the result has denominator 1.
RatFn compose(const MPoly& p, const std::map<std::string, RatFn>& subs);

} // namespace surfsym
