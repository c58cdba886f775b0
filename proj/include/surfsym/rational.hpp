#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>

namespace surfsym {

// Exact rational number. Always kept in lowest terms with positive
// denominator; zero is 0/1. Backed by GMP.
class Rat {
public:
    Rat() : q_(0) {}
    Rat(long n) : q_(n) {}                       // NOLINT(google-explicit-constructor)
    Rat(long n, long d);
    Rat(const mpz_class& n) : q_(n) {}           // NOLINT(google-explicit-constructor)
    Rat(const mpz_class& n, const mpz_class& d);
    explicit Rat(const mpq_class& q) : q_(q) { canonical(); }

    // Parses "p", "p/q", optional leading sign. Throws ParseError-free
    // std::invalid_argument on malformed input (callers add positions).
    static Rat parse(const std::string& text);

    mpz_class num() const { return q_.get_num(); }
    mpz_class den() const { return q_.get_den(); }
    const mpq_class& mpq() const { return q_; }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_one() const { return q_ == 1; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    Rat operator-() const { return Rat(mpq_class(-q_)); }
    Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
    Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
    Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.q_ >= b.q_; }

    Rat abs() const { return sign() < 0 ? -*this : *this; }
    Rat inv() const;
    Rat pow(unsigned long e) const;

    // Largest integer <= value, as a Rat.
    Rat floor() const;
    Rat ceil() const;

    // "p" or "p/q".
    std::string str() const;
    // Decimal string with `digits` fractional digits, rounded toward
    // -infinity (round_up=false) or +infinity (round_up=true). Exact.
    std::string decimal(int digits, bool round_up) const;

    // Total bit size of numerator and denominator, used as a cheap
    // complexity measure when ordering equations.
    size_t bits() const;

    friend std::ostream& operator<<(std::ostream& os, const Rat& r);

private:
    void canonical() { q_.canonicalize(); }
    mpq_class q_;
};

} // namespace surfsym
