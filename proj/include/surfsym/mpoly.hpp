#pragma once

#include "surfsym/rational.hpp"

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace surfsym {

using Expvec = std::vector<uint32_t>;

// Sparse multivariate polynomial with exact rational coefficients.
//
// Canonical form: variables sorted by name and trimmed to the ones that
// actually appear; terms ordered lexicographically on exponent vectors;
// no zero coefficients stored. Two mathematically equal polynomials have
// identical representations, so operator== is structural.
class MPoly {
public:
    MPoly() = default;                                     // zero
    explicit MPoly(const Rat& c);
    explicit MPoly(long c) : MPoly(Rat(c)) {}

    static MPoly variable(const std::string& name);
    static MPoly monomial(const Rat& coeff, const std::vector<std::string>& vars,
                          const Expvec& exps);

    const std::vector<std::string>& vars() const { return vars_; }
    const std::map<Expvec, Rat>& terms() const { return terms_; }
    size_t term_count() const { return terms_.size(); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return vars_.empty(); }
    // Value of a constant polynomial (zero polynomial gives 0).
    Rat constant_value() const;

    int total_degree() const;                              // -1 for zero
    int degree_in(const std::string& var) const;           // -1 for zero
    bool uses_var(const std::string& var) const;

    // Coefficient of the lexicographically leading term.
    const Rat& leading_coeff() const;

    MPoly operator-() const;
    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    friend MPoly operator+(const MPoly& a, const MPoly& b);
    friend MPoly operator-(const MPoly& a, const MPoly& b);
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    MPoly& operator*=(const MPoly& o) { return *this = *this * o; }
    MPoly scaled(const Rat& c) const;                      // c * this
    MPoly pow(unsigned e) const;                           // binary exponentiation

    friend bool operator==(const MPoly& a, const MPoly& b) {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }
    // Arbitrary strict total order; used for canonical sorting and dedup.
    friend bool operator<(const MPoly& a, const MPoly& b);

    MPoly partial(const std::string& var) const;           // 0 for absent variables

    // Full evaluation; `point` must cover every variable (extras ignored).
    Rat eval(const std::map<std::string, Rat>& point) const;
    // Polynomial substitution; variables without an entry stay themselves.
    MPoly subst(const std::map<std::string, MPoly>& map) const;
    // Renames a variable (target name must not collide).
    MPoly rename(const std::string& from, const std::string& to) const;

    // --- univariate views -------------------------------------------------
    // Coefficients of this as a polynomial in `var`; index = power of var,
    // entries are polynomials in the remaining variables.
    std::vector<MPoly> coeffs_in(const std::string& var) const;
    static MPoly from_coeffs_in(const std::string& var, const std::vector<MPoly>& cs);

    // Dense rational coefficient list, lowest power first. Requires the
    // polynomial to involve no variable other than `var`.
    std::vector<Rat> univariate_coeffs(const std::string& var) const;
    static MPoly from_univariate(const std::string& var, const std::vector<Rat>& cs);

    // --- content / normalization -------------------------------------------
    // Positive rational c such that this/c has coprime integer coefficients.
    // content(0) = 0.
    Rat content() const;
    // this / content(); integer coefficients, sign of leading coeff kept.
    MPoly primitive_part() const;
    // Primitive part with positive leading coefficient.
    MPoly normalized() const;

    size_t coeff_bits() const;                             // sum of coefficient bit sizes

    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const MPoly& p);

private:
    void prune();       // drop zero coeffs, trim unused vars
    // Reindexes this polynomial onto the variable set `target` (superset of
    // vars_, sorted).
    MPoly aligned_to(const std::vector<std::string>& target) const;
    static std::vector<std::string> merged_vars(const MPoly& a, const MPoly& b);

    std::vector<std::string> vars_;   // sorted, all used
    std::map<Expvec, Rat> terms_;     // exponent vector (parallel to vars_) -> coeff
};

// Exact division; throws InternalError if `b` does not divide `a`.
MPoly divexact(const MPoly& a, const MPoly& b);
bool divides(const MPoly& b, const MPoly& a);
bool try_divexact(const MPoly& a, const MPoly& b, MPoly* out);

// Pseudo-remainder of a by b with respect to `var`:
// lc(b)^(deg a - deg b + 1) * a = q*b + prem.
MPoly prem(const MPoly& a, const MPoly& b, const std::string& var);

// GCD over Q[vars]; result is scaled so its leading coefficient is 1.
// gcd(0,0) = 0. Nonzero constants are units, so gcd with one of them is 1.
MPoly gcd(const MPoly& a, const MPoly& b);

// Resultant with respect to `var`, Sylvester-determinant semantics with the
// first argument's coefficients in the top rows. Both arguments must have
// positive degree in `var` (throws otherwise).
MPoly resultant(const MPoly& p, const MPoly& q, const std::string& var);

// Same, but allows degree-0 arguments with the conventions
// Res(p, c) = c^deg(p), Res(c, p) = c^deg(p), Res(c1, c2) = 1.
MPoly resultant_any(const MPoly& p, const MPoly& q, const std::string& var);

// p / gcd(p, p'); univariate input.
MPoly squarefree_part(const MPoly& p);

} // namespace surfsym
