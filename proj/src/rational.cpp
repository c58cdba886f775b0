#include "surfsym/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace surfsym {

Rat::Rat(long n, long d) : q_(n, d) {
    if (d == 0) throw std::invalid_argument("rational with zero denominator");
    canonical();
}

Rat::Rat(const mpz_class& n, const mpz_class& d) : q_(n, d) {
    if (d == 0) throw std::invalid_argument("rational with zero denominator");
    canonical();
}

Rat Rat::parse(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    size_t slash = text.find('/');
    if (slash == std::string::npos) return Rat(mpz_class(text));
    mpz_class num(text.substr(0, slash));
    std::string den_s = text.substr(slash + 1);
    if (den_s.empty()) throw std::invalid_argument("missing denominator");
    mpz_class den(den_s);
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rat(num, den);
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero()) throw std::invalid_argument("rational division by zero");
    q_ /= o.q_;
    return *this;
}

Rat Rat::inv() const {
    if (is_zero()) throw std::invalid_argument("inverse of zero");
    return Rat(mpq_class(1) / q_);
}

Rat Rat::pow(unsigned long e) const {
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), q_.get_num().get_mpz_t(), e);
    mpz_pow_ui(d.get_mpz_t(), q_.get_den().get_mpz_t(), e);
    Rat r;
    r.q_ = mpq_class(n, d); // already canonical: num/den coprime
    return r;
}

Rat Rat::floor() const {
    mpz_class f;
    mpz_fdiv_q(f.get_mpz_t(), q_.get_num().get_mpz_t(), q_.get_den().get_mpz_t());
    return Rat(f);
}

Rat Rat::ceil() const {
    mpz_class c;
    mpz_cdiv_q(c.get_mpz_t(), q_.get_num().get_mpz_t(), q_.get_den().get_mpz_t());
    return Rat(c);
}

std::string Rat::str() const {
    if (is_integer()) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::string Rat::decimal(int digits, bool round_up) const {
    if (digits < 0) digits = 0;
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    // scaled = value * 10^digits, rounded toward the requested direction.
    mpz_class scaled;
    mpz_class n = q_.get_num() * scale;
    if (round_up)
        mpz_cdiv_q(scaled.get_mpz_t(), n.get_mpz_t(), q_.get_den().get_mpz_t());
    else
        mpz_fdiv_q(scaled.get_mpz_t(), n.get_mpz_t(), q_.get_den().get_mpz_t());
    bool neg = scaled < 0;
    mpz_class a = neg ? mpz_class(-scaled) : scaled;
    std::string s = a.get_str();
    std::string out;
    if (digits == 0) {
        out = s;
    } else {
        if (s.size() <= static_cast<size_t>(digits))
            s.insert(0, static_cast<size_t>(digits) + 1 - s.size(), '0');
        out = s.substr(0, s.size() - digits) + "." + s.substr(s.size() - digits);
    }
    if (neg) out.insert(0, 1, '-');
    return out;
}

size_t Rat::bits() const {
    return mpz_sizeinbase(q_.get_num().get_mpz_t(), 2) +
           mpz_sizeinbase(q_.get_den().get_mpz_t(), 2);
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

} // namespace surfsym
