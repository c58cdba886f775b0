#include "surfsym/ratfn.hpp"

#include "surfsym/errors.hpp"

#include <sstream>

namespace surfsym {

RatFn::RatFn(MPoly num, MPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw InternalError("RatFn with zero denominator");
    reduce();
}

void RatFn::reduce() {
    if (num_.is_zero()) {
        den_ = MPoly(Rat(1));
        return;
    }
    if (!den_.is_constant()) {
        MPoly g = gcd(num_, den_);
        if (!g.is_constant()) {
            num_ = divexact(num_, g);
            den_ = divexact(den_, g);
        }
    }
    // scale so den is integer-primitive with positive leading coefficient
    Rat f = den_.content();
    if (den_.leading_coeff().sign() < 0) f = -f;
    den_ = den_.scaled(f.inv());
    num_ = num_.scaled(f.inv());
}

Rat RatFn::constant_value() const {
    if (!is_constant()) throw InternalError("constant_value on non-constant RatFn");
    if (num_.is_zero()) return Rat(0);
    return num_.constant_value() / den_.constant_value();
}

RatFn RatFn::operator-() const {
    RatFn r(*this);
    r.num_ = -r.num_;
    return r;
}

RatFn operator+(const RatFn& a, const RatFn& b) {
    return RatFn(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFn operator-(const RatFn& a, const RatFn& b) {
    return RatFn(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFn operator*(const RatFn& a, const RatFn& b) {
    return RatFn(a.num_ * b.num_, a.den_ * b.den_);
}

RatFn operator/(const RatFn& a, const RatFn& b) {
    if (b.is_zero()) throw InternalError("RatFn division by zero");
    return RatFn(a.num_ * b.den_, a.den_ * b.num_);
}

Rat RatFn::eval(const std::map<std::string, Rat>& point) const {
    Rat d = den_.eval(point);
    if (d.is_zero()) throw InternalError("RatFn evaluation at a pole");
    return num_.eval(point) / d;
}

std::string RatFn::str() const {
    if (is_polynomial() && den_.constant_value().is_one()) return num_.str();
    std::ostringstream os;
    os << "(" << num_.str() << ")/(" << den_.str() << ")";
    return os.str();
}

MPoly lcm(const MPoly& a, const MPoly& b) {
    if (a.is_zero() || b.is_zero()) return MPoly();
    MPoly g = gcd(a, b);
    return divexact(a * b, g).normalized();
}

RatFn compose(const MPoly& p, const std::map<std::string, RatFn>& subs) {
    for (auto& v : p.vars())
        if (!subs.count(v)) throw InternalError("compose: missing substitution for " + v);
    if (p.is_zero() || p.is_constant()) return RatFn(p);

    // common denominator D, so var_i -> R_i / D with R_i = num_i * (D/den_i)
    MPoly D(Rat(1));
    for (auto& v : p.vars()) D = lcm(D, subs.at(v).den());
    std::vector<MPoly> reps;
    for (auto& v : p.vars()) {
        const RatFn& s = subs.at(v);
        reps.push_back(s.num() * divexact(D, s.den()));
    }
    int m = p.total_degree();
    // result = sum_e coeff * prod R_i^e_i * D^(m-|e|)  over  D^m
    std::vector<std::vector<MPoly>> pows(reps.size());
    for (size_t i = 0; i < reps.size(); ++i) pows[i].push_back(MPoly(Rat(1)));
    std::vector<MPoly> dpows{MPoly(Rat(1))};
    auto dpow = [&](unsigned e) -> const MPoly& {
        while (dpows.size() <= e) dpows.push_back(dpows.back() * D);
        return dpows[e];
    };
    MPoly acc;
    for (auto& [e, c] : p.terms()) {
        MPoly t{c};
        unsigned tot = 0;
        for (size_t i = 0; i < e.size(); ++i) {
            auto& pv = pows[i];
            while (pv.size() <= e[i]) pv.push_back(pv.back() * reps[i]);
            if (e[i]) t = t * pv[e[i]];
            tot += e[i];
        }
        t = t * dpow(static_cast<unsigned>(m) - tot);
        acc += t;
    }
    return RatFn(acc, dpow(static_cast<unsigned>(m)));
}

} // namespace surfsym
