#include "surfsym/mpoly.hpp"

#include "surfsym/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <ostream>
#include <sstream>

namespace surfsym {

namespace {

const Rat kZero(0);

// Index of `name` in sorted vector, or -1.
int index_of(const std::vector<std::string>& vars, const std::string& name) {
    auto it = std::lower_bound(vars.begin(), vars.end(), name);
    if (it != vars.end() && *it == name) return static_cast<int>(it - vars.begin());
    return -1;
}

} // namespace

MPoly::MPoly(const Rat& c) {
    if (!c.is_zero()) terms_.emplace(Expvec{}, c);
}

MPoly MPoly::variable(const std::string& name) {
    MPoly p;
    p.vars_ = {name};
    p.terms_.emplace(Expvec{1}, Rat(1));
    return p;
}

MPoly MPoly::monomial(const Rat& coeff, const std::vector<std::string>& vars,
                      const Expvec& exps) {
    if (vars.size() != exps.size())
        throw InternalError("monomial: vars/exps size mismatch");
    MPoly p;
    if (coeff.is_zero()) return p;
    // sort variables, merging duplicate names by adding exponents
    std::vector<std::pair<std::string, uint32_t>> items;
    for (size_t i = 0; i < vars.size(); ++i) items.emplace_back(vars[i], exps[i]);
    std::sort(items.begin(), items.end());
    for (auto& [name, e] : items) {
        if (!p.vars_.empty() && p.vars_.back() == name) continue;
        p.vars_.push_back(name);
    }
    Expvec ev(p.vars_.size(), 0);
    for (auto& [name, e] : items) ev[index_of(p.vars_, name)] += e;
    p.terms_.emplace(std::move(ev), coeff);
    p.prune();
    return p;
}

Rat MPoly::constant_value() const {
    if (is_zero()) return Rat(0);
    if (!is_constant()) throw InternalError("constant_value on non-constant polynomial");
    return terms_.begin()->second;
}

int MPoly::total_degree() const {
    int d = -1;
    for (auto& [e, c] : terms_) {
        int t = 0;
        for (uint32_t x : e) t += static_cast<int>(x);
        d = std::max(d, t);
    }
    return d;
}

int MPoly::degree_in(const std::string& var) const {
    if (is_zero()) return -1;
    int idx = index_of(vars_, var);
    if (idx < 0) return 0;
    int d = 0;
    for (auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e[idx]));
    return d;
}

bool MPoly::uses_var(const std::string& var) const { return index_of(vars_, var) >= 0; }

const Rat& MPoly::leading_coeff() const {
    if (is_zero()) return kZero;
    return terms_.rbegin()->second;
}

MPoly MPoly::operator-() const {
    MPoly r(*this);
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

void MPoly::prune() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second.is_zero())
            it = terms_.erase(it);
        else
            ++it;
    }
    if (vars_.empty()) return;
    std::vector<bool> used(vars_.size(), false);
    for (auto& [e, c] : terms_)
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i]) used[i] = true;
    if (std::all_of(used.begin(), used.end(), [](bool b) { return b; })) return;
    std::vector<std::string> nv;
    std::vector<int> remap(vars_.size(), -1);
    for (size_t i = 0; i < vars_.size(); ++i)
        if (used[i]) {
            remap[i] = static_cast<int>(nv.size());
            nv.push_back(vars_[i]);
        }
    std::map<Expvec, Rat> nt;
    for (auto& [e, c] : terms_) {
        Expvec ne(nv.size(), 0);
        for (size_t i = 0; i < e.size(); ++i)
            if (remap[i] >= 0) ne[remap[i]] = e[i];
        nt.emplace(std::move(ne), c);
    }
    vars_ = std::move(nv);
    terms_ = std::move(nt);
}

MPoly MPoly::aligned_to(const std::vector<std::string>& target) const {
    if (vars_ == target) return *this;
    MPoly r;
    r.vars_ = target;
    std::vector<int> pos(vars_.size());
    for (size_t i = 0; i < vars_.size(); ++i) {
        pos[i] = index_of(target, vars_[i]);
        if (pos[i] < 0) throw InternalError("aligned_to: target not a superset");
    }
    for (auto& [e, c] : terms_) {
        Expvec ne(target.size(), 0);
        for (size_t i = 0; i < e.size(); ++i) ne[pos[i]] = e[i];
        r.terms_.emplace(std::move(ne), c);
    }
    return r;
}

std::vector<std::string> MPoly::merged_vars(const MPoly& a, const MPoly& b) {
    std::vector<std::string> m;
    std::set_union(a.vars_.begin(), a.vars_.end(), b.vars_.begin(), b.vars_.end(),
                   std::back_inserter(m));
    return m;
}

MPoly& MPoly::operator+=(const MPoly& o) {
    auto m = merged_vars(*this, o);
    MPoly a = aligned_to(m), b = o.aligned_to(m);
    for (auto& [e, c] : b.terms_) {
        auto [it, fresh] = a.terms_.emplace(e, c);
        if (!fresh) it->second += c;
    }
    a.prune();
    return *this = std::move(a);
}

MPoly& MPoly::operator-=(const MPoly& o) { return *this += -o; }

MPoly operator+(const MPoly& a, const MPoly& b) {
    MPoly r(a);
    r += b;
    return r;
}

MPoly operator-(const MPoly& a, const MPoly& b) {
    MPoly r(a);
    r -= b;
    return r;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
    if (a.is_zero() || b.is_zero()) return MPoly();
    auto m = MPoly::merged_vars(a, b);
    MPoly A = a.aligned_to(m), B = b.aligned_to(m);
    std::vector<std::pair<Expvec, Rat>> prods;
    prods.reserve(A.terms_.size() * B.terms_.size());
    for (auto& [ea, ca] : A.terms_)
        for (auto& [eb, cb] : B.terms_) {
            Expvec e(ea);
            for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
            prods.emplace_back(std::move(e), ca * cb);
        }
    std::sort(prods.begin(), prods.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    MPoly r;
    r.vars_ = m;
    for (auto& [e, c] : prods) {
        if (!r.terms_.empty() && r.terms_.rbegin()->first == e)
            r.terms_.rbegin()->second += c;
        else
            r.terms_.emplace_hint(r.terms_.end(), std::move(e), c);
    }
    r.prune();
    return r;
}

MPoly MPoly::scaled(const Rat& c) const {
    if (c.is_zero()) return MPoly();
    MPoly r(*this);
    for (auto& [e, coef] : r.terms_) coef *= c;
    return r;
}

MPoly MPoly::pow(unsigned e) const {
    MPoly acc(Rat(1));
    MPoly base(*this);
    while (e) {
        if (e & 1u) acc = acc * base;
        e >>= 1u;
        if (e) base = base * base;
    }
    return acc;
}

bool operator<(const MPoly& a, const MPoly& b) {
    if (a.vars_ != b.vars_) return a.vars_ < b.vars_;
    auto ai = a.terms_.begin(), bi = b.terms_.begin();
    for (; ai != a.terms_.end() && bi != b.terms_.end(); ++ai, ++bi) {
        if (ai->first != bi->first) return ai->first < bi->first;
        if (ai->second != bi->second) return ai->second < bi->second;
    }
    return bi != b.terms_.end();
}

MPoly MPoly::partial(const std::string& var) const {
    int idx = index_of(vars_, var);
    // Contexts are trimmed to used variables, so a var that does not appear
    // has degree 0 and the derivative is 0.
    if (idx < 0) return MPoly();
    MPoly r;
    r.vars_ = vars_;
    for (auto& [e, c] : terms_) {
        if (e[idx] == 0) continue;
        Expvec ne(e);
        Rat nc = c * Rat(static_cast<long>(ne[idx]));
        ne[idx] -= 1;
        r.terms_.emplace(std::move(ne), nc);
    }
    r.prune();
    return r;
}

Rat MPoly::eval(const std::map<std::string, Rat>& point) const {
    std::vector<const Rat*> vals(vars_.size());
    for (size_t i = 0; i < vars_.size(); ++i) {
        auto it = point.find(vars_[i]);
        if (it == point.end()) throw InternalError("eval: missing value for " + vars_[i]);
        vals[i] = &it->second;
    }
    // cache powers per variable
    std::vector<std::vector<Rat>> pows(vars_.size(), std::vector<Rat>{Rat(1)});
    Rat acc(0);
    for (auto& [e, c] : terms_) {
        Rat t(c);
        for (size_t i = 0; i < e.size(); ++i) {
            auto& pv = pows[i];
            while (pv.size() <= e[i]) pv.push_back(pv.back() * *vals[i]);
            t *= pv[e[i]];
        }
        acc += t;
    }
    return acc;
}

MPoly MPoly::subst(const std::map<std::string, MPoly>& map) const {
    std::vector<MPoly> reps(vars_.size());
    for (size_t i = 0; i < vars_.size(); ++i) {
        auto it = map.find(vars_[i]);
        reps[i] = (it != map.end()) ? it->second : MPoly::variable(vars_[i]);
    }
    std::vector<std::vector<MPoly>> pows(vars_.size());
    for (size_t i = 0; i < vars_.size(); ++i) pows[i].push_back(MPoly(Rat(1)));
    MPoly acc;
    for (auto& [e, c] : terms_) {
        MPoly t{c};
        for (size_t i = 0; i < e.size(); ++i) {
            auto& pv = pows[i];
            while (pv.size() <= e[i]) pv.push_back(pv.back() * reps[i]);
            t = t * pv[e[i]];
        }
        acc += t;
    }
    return acc;
}

MPoly MPoly::rename(const std::string& from, const std::string& to) const {
    if (from == to || !uses_var(from)) return *this;
    if (uses_var(to)) throw InternalError("rename: target variable already present");
    return subst({{from, MPoly::variable(to)}});
}

std::vector<MPoly> MPoly::coeffs_in(const std::string& var) const {
    int idx = index_of(vars_, var);
    int d = degree_in(var);
    std::vector<MPoly> out(static_cast<size_t>(std::max(d, 0)) + 1);
    if (idx < 0) {
        out[0] = *this;
        return out;
    }
    std::vector<std::string> rest;
    for (auto& v : vars_)
        if (v != var) rest.push_back(v);
    for (auto& [e, c] : terms_) {
        Expvec ne;
        ne.reserve(rest.size());
        for (size_t i = 0; i < e.size(); ++i)
            if (static_cast<int>(i) != idx) ne.push_back(e[i]);
        MPoly& slot = out[e[idx]];
        MPoly term;
        term.vars_ = rest;
        term.terms_.emplace(std::move(ne), c);
        term.prune();
        slot += term;
    }
    return out;
}

MPoly MPoly::from_coeffs_in(const std::string& var, const std::vector<MPoly>& cs) {
    MPoly acc;
    MPoly x = MPoly::variable(var);
    for (size_t i = 0; i < cs.size(); ++i) {
        if (cs[i].is_zero()) continue;
        if (cs[i].uses_var(var))
            throw InternalError("from_coeffs_in: coefficient uses main variable");
        acc += cs[i] * x.pow(static_cast<unsigned>(i));
    }
    return acc;
}

std::vector<Rat> MPoly::univariate_coeffs(const std::string& var) const {
    for (auto& v : vars_)
        if (v != var) throw InternalError("univariate_coeffs: extra variable " + v);
    int d = std::max(degree_in(var), 0);
    std::vector<Rat> out(static_cast<size_t>(d) + 1, Rat(0));
    for (auto& [e, c] : terms_) out[e.empty() ? 0 : e[0]] = c;
    return out;
}

MPoly MPoly::from_univariate(const std::string& var, const std::vector<Rat>& cs) {
    MPoly acc;
    for (size_t i = 0; i < cs.size(); ++i) {
        if (cs[i].is_zero()) continue;
        acc += MPoly::monomial(cs[i], {var}, {static_cast<uint32_t>(i)});
    }
    return acc;
}

Rat MPoly::content() const {
    if (is_zero()) return Rat(0);
    mpz_class g(0), l(1);
    for (auto& [e, c] : terms_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.num().get_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
    }
    return Rat(g, l);
}

MPoly MPoly::primitive_part() const {
    if (is_zero()) return MPoly();
    return scaled(content().inv());
}

MPoly MPoly::normalized() const {
    if (is_zero()) return MPoly();
    MPoly p = primitive_part();
    if (p.leading_coeff().sign() < 0) p = -p;
    return p;
}

size_t MPoly::coeff_bits() const {
    size_t n = 0;
    for (auto& [e, c] : terms_) n += c.bits();
    return n;
}

std::string MPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    // leading (lex-largest) terms first
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Rat& c = it->second;
        Rat a = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        bool has_vars = false;
        for (uint32_t e : it->first) has_vars |= e != 0;
        if (!has_vars) {
            os << a.str();
            continue;
        }
        bool coeff_shown = false;
        if (!a.is_one()) {
            os << a.str();
            coeff_shown = true;
        }
        bool first_var = true;
        for (size_t i = 0; i < it->first.size(); ++i) {
            uint32_t e = it->first[i];
            if (!e) continue;
            if (coeff_shown || !first_var) os << "*";
            os << vars_[i];
            if (e > 1) os << "^" << e;
            first_var = false;
            coeff_shown = true;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const MPoly& p) { return os << p.str(); }

// ---------------------------------------------------------------------------
// division, gcd, resultants

namespace {

// Leading term of a wrt lex order as (exponents aligned to a.vars(), coeff).
bool lead_divides(const Expvec& num, const Expvec& den) {
    for (size_t i = 0; i < num.size(); ++i)
        if (den[i] > num[i]) return false;
    return true;
}

} // namespace

bool try_divexact(const MPoly& a, const MPoly& b, MPoly* out) {
    if (b.is_zero()) return false;
    if (a.is_zero()) {
        if (out) *out = MPoly();
        return true;
    }
    if (b.is_constant()) {
        if (out) *out = a.scaled(b.constant_value().inv());
        return true;
    }
    // align both to the union context and run lex leading-term division
    std::vector<std::string> m;
    {
        std::vector<std::string> av = a.vars(), bv = b.vars();
        std::set_union(av.begin(), av.end(), bv.begin(), bv.end(), std::back_inserter(m));
    }
    // rebuild aligned term maps
    auto align = [&m](const MPoly& p) {
        std::map<Expvec, Rat> t;
        std::vector<int> pos(p.vars().size());
        for (size_t i = 0; i < p.vars().size(); ++i)
            pos[i] = static_cast<int>(std::lower_bound(m.begin(), m.end(), p.vars()[i]) -
                                      m.begin());
        for (auto& [e, c] : p.terms()) {
            Expvec ne(m.size(), 0);
            for (size_t i = 0; i < e.size(); ++i) ne[pos[i]] = e[i];
            t.emplace(std::move(ne), c);
        }
        return t;
    };
    std::map<Expvec, Rat> ra = align(a);
    std::map<Expvec, Rat> rb = align(b);
    const Expvec& lb = rb.rbegin()->first;
    const Rat& lbc = rb.rbegin()->second;
    std::map<Expvec, Rat> q;
    while (!ra.empty()) {
        const Expvec& la = ra.rbegin()->first;
        if (!lead_divides(la, lb)) return false;
        Expvec qe(la);
        for (size_t i = 0; i < qe.size(); ++i) qe[i] -= lb[i];
        Rat qc = ra.rbegin()->second / lbc;
        q.emplace(qe, qc);
        // ra -= qc * x^qe * b
        for (auto& [e, c] : rb) {
            Expvec te(e);
            for (size_t i = 0; i < te.size(); ++i) te[i] += qe[i];
            auto [it, fresh] = ra.emplace(std::move(te), -qc * c);
            if (!fresh) {
                it->second -= qc * c;
                if (it->second.is_zero()) ra.erase(it);
            } else if (it->second.is_zero()) {
                ra.erase(it);
            }
        }
    }
    if (out) {
        MPoly res;
        for (auto& [e, c] : q) res += MPoly::monomial(c, m, e);
        *out = std::move(res);
    }
    return true;
}

MPoly divexact(const MPoly& a, const MPoly& b) {
    MPoly q;
    if (!try_divexact(a, b, &q)) throw InternalError("divexact: not divisible");
    return q;
}

bool divides(const MPoly& b, const MPoly& a) { return try_divexact(a, b, nullptr); }

MPoly prem(const MPoly& a, const MPoly& b, const std::string& var) {
    int da = a.degree_in(var), db = b.degree_in(var);
    if (b.is_zero()) throw InternalError("prem by zero");
    if (da < db) {
        // lc(b)^(da-db+1) is not a polynomial; by convention prem = a here
        return a;
    }
    std::vector<MPoly> ca = a.coeffs_in(var);
    std::vector<MPoly> cb = b.coeffs_in(var);
    MPoly lb = cb.back();
    int steps = da - db + 1;
    // r starts as lc(b)^steps * a, then reduce
    for (int k = da; k >= db; --k) {
        // r currently has degree <= k; scale the remaining tail by lb and
        // subtract lead(r)*x^(k-db)*b
        MPoly lead = ca[k];
        for (int i = 0; i < k; ++i) ca[i] = ca[i] * lb;
        for (int i = 0; i < db; ++i) ca[k - db + i] -= lead * cb[i];
        ca[k] = MPoly();
        --steps;
    }
    // any remaining factors of lc(b) owed (when reduction terminated early)
    MPoly r;
    for (int i = 0; i < db; ++i)
        if (!ca[i].is_zero()) r += ca[i] * MPoly::variable(var).pow(static_cast<unsigned>(i));
    for (int s = 0; s < steps; ++s) r = r * lb;
    return r;
}

// --- univariate integer gcd with modular fast path -------------------------

namespace {

using ZVec = std::vector<mpz_class>; // dense univariate, lowest power first

int zdeg(const ZVec& f) {
    for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
        if (f[i] != 0) return i;
    return -1;
}

void ztrim(ZVec& f) { f.resize(static_cast<size_t>(zdeg(f) + 1)); }

ZVec zprimitive(const ZVec& f) {
    mpz_class g(0);
    for (auto& c : f) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 0) return f;
    ZVec r(f);
    for (auto& c : r) c /= g;
    return r;
}

// exact division of integer univariates; returns false if not divisible
bool zdivexact(const ZVec& a, const ZVec& b, ZVec* q_out) {
    int da = zdeg(a), db = zdeg(b);
    if (db < 0) return false;
    if (da < 0) {
        if (q_out) q_out->clear();
        return true;
    }
    if (da < db) return false;
    ZVec r(a);
    ZVec q(static_cast<size_t>(da - db + 1));
    const mpz_class& lb = b[db];
    for (int k = da; k >= db; --k) {
        if (r[k] == 0) continue;
        mpz_class qc, rem;
        mpz_tdiv_qr(qc.get_mpz_t(), rem.get_mpz_t(), r[k].get_mpz_t(), lb.get_mpz_t());
        if (rem != 0) return false;
        q[k - db] = qc;
        for (int i = 0; i <= db; ++i) r[k - db + i] -= qc * b[i];
    }
    if (zdeg(r) >= 0) return false;
    if (q_out) *q_out = std::move(q);
    return true;
}

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t p) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

uint64_t powmod(uint64_t a, uint64_t e, uint64_t p) {
    uint64_t r = 1;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

uint64_t invmod(uint64_t a, uint64_t p) { return powmod(a % p, p - 2, p); }

std::vector<uint64_t> zmod(const ZVec& f, uint64_t p) {
    std::vector<uint64_t> r(f.size());
    for (size_t i = 0; i < f.size(); ++i) {
        unsigned long m = mpz_fdiv_ui(f[i].get_mpz_t(), static_cast<unsigned long>(p));
        r[i] = m;
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

// monic gcd over F_p
std::vector<uint64_t> pgcd(std::vector<uint64_t> a, std::vector<uint64_t> b, uint64_t p) {
    auto deg = [](const std::vector<uint64_t>& f) { return static_cast<int>(f.size()) - 1; };
    while (!b.empty()) {
        // a mod b
        uint64_t inv_lb = invmod(b.back(), p);
        for (int k = deg(a); k >= deg(b); --k) {
            if (a[k] == 0) continue;
            uint64_t q = mulmod(a[k], inv_lb, p);
            int off = k - deg(b);
            for (int i = 0; i <= deg(b); ++i) {
                uint64_t sub = mulmod(q, b[i], p);
                a[off + i] = (a[off + i] + p - sub) % p;
            }
        }
        while (!a.empty() && a.back() == 0) a.pop_back();
        std::swap(a, b);
    }
    if (!a.empty()) {
        uint64_t inv_la = invmod(a.back(), p);
        for (auto& c : a) c = mulmod(c, inv_la, p);
    }
    return a;
}

const uint64_t kPrimes[] = {
    4611686018427388039ULL, 4611686018427387847ULL, 4611686018427387817ULL,
    4611686018427387787ULL, 4611686018427387761ULL, 4611686018427387739ULL,
    4611686018427387733ULL, 4611686018427387709ULL, 4611686018427387631ULL,
    4611686018427387449ULL, 4611686018427387401ULL, 4611686018427387371ULL,
    4611686018427387347ULL, 4611686018427387313ULL, 4611686018427387281ULL,
    4611686018427387229ULL,
};

// gcd of primitive integer univariates via modular images with divisibility
// certification; falls back to a primitive PRS when the images disagree.
ZVec zgcd_univar(const ZVec& fa, const ZVec& fb) {
    int da = zdeg(fa), db = zdeg(fb);
    if (da < 0) return fb;
    if (db < 0) return fa;
    if (da == 0 || db == 0) return {mpz_class(1)};
    mpz_class lc_g;
    mpz_gcd(lc_g.get_mpz_t(), fa[da].get_mpz_t(), fb[db].get_mpz_t());

    int best_deg = -1;
    ZVec acc;       // CRT accumulator, symmetric range
    mpz_class mod;  // current modulus
    for (uint64_t p : kPrimes) {
        if (mpz_fdiv_ui(fa[da].get_mpz_t(), p) == 0) continue;
        if (mpz_fdiv_ui(fb[db].get_mpz_t(), p) == 0) continue;
        auto gp = pgcd(zmod(fa, p), zmod(fb, p), p);
        int dg = static_cast<int>(gp.size()) - 1;
        if (dg == 0) return {mpz_class(1)}; // coprime, certified
        if (best_deg < 0 || dg < best_deg) {
            best_deg = dg;
            acc.assign(gp.size(), mpz_class(0));
            mod = 1;
        } else if (dg > best_deg) {
            continue; // unlucky prime
        }
        // scale to leading coefficient lc_g and CRT-combine
        uint64_t scale = mpz_fdiv_ui(lc_g.get_mpz_t(), p);
        mpz_class prime(static_cast<unsigned long>(p));
        mpz_class new_mod = mod * prime;
        for (size_t i = 0; i < gp.size(); ++i) {
            uint64_t want = mulmod(gp[i], scale, p);
            // x = acc[i] (mod mod), x = want (mod p)
            mpz_class x;
            if (mod == 1) {
                x = mpz_class(static_cast<unsigned long>(want));
            } else {
                unsigned long cur = mpz_fdiv_ui(acc[i].get_mpz_t(), p);
                uint64_t diff = (want + p - cur % p) % p;
                uint64_t minv = invmod(static_cast<uint64_t>(
                                           mpz_fdiv_ui(mod.get_mpz_t(), p)),
                                       p);
                uint64_t t = mulmod(diff, minv, p);
                x = acc[i] + mod * mpz_class(static_cast<unsigned long>(t));
            }
            // symmetric remainder
            mpz_class half = new_mod / 2;
            mpz_mod(x.get_mpz_t(), x.get_mpz_t(), new_mod.get_mpz_t());
            if (x > half) x -= new_mod;
            acc[i] = x;
        }
        mod = new_mod;
        ZVec cand = zprimitive(acc);
        ztrim(cand);
        if (zdeg(cand) == best_deg && zdivexact(fa, cand, nullptr) &&
            zdivexact(fb, cand, nullptr))
            return cand;
    }
    // fallback: primitive PRS (slow but exact)
    ZVec A = fa, B = fb;
    if (zdeg(A) < zdeg(B)) std::swap(A, B);
    while (true) {
        int dA = zdeg(A), dB = zdeg(B);
        if (dB < 0) break;
        if (dB == 0) return {mpz_class(1)};
        // pseudo remainder
        ZVec R(A);
        const mpz_class& lb = B[dB];
        for (int k = dA; k >= dB; --k) {
            mpz_class lead = R[k];
            if (lead == 0) continue;
            for (int i = 0; i < k; ++i) R[i] *= lb;
            for (int i = 0; i <= dB; ++i) R[k - dB + i] -= lead * B[i];
            R[k] = 0;
        }
        ztrim(R);
        A = B;
        B = zprimitive(R);
    }
    return zprimitive(A);
}

} // namespace

MPoly gcd(const MPoly& a, const MPoly& b) {
    if (a.is_zero() && b.is_zero()) return MPoly();
    auto monic = [](const MPoly& p) {
        if (p.is_zero()) return p;
        return p.scaled(p.leading_coeff().inv());
    };
    if (a.is_zero()) return monic(b);
    if (b.is_zero()) return monic(a);
    if (a.is_constant() || b.is_constant()) return MPoly(Rat(1));

    // fast univariate path
    if (a.vars().size() == 1 && b.vars().size() == 1 && a.vars() == b.vars()) {
        const std::string& x = a.vars()[0];
        auto to_z = [&x](const MPoly& p) {
            auto cs = p.primitive_part().univariate_coeffs(x);
            ZVec z(cs.size());
            for (size_t i = 0; i < cs.size(); ++i) z[i] = cs[i].num();
            return z;
        };
        ZVec g = zgcd_univar(to_z(a), to_z(b));
        std::vector<Rat> cs(g.size());
        for (size_t i = 0; i < g.size(); ++i) cs[i] = Rat(g[i]);
        return monic(MPoly::from_univariate(x, cs));
    }

    // multivariate: recurse on the last variable of the union
    std::vector<std::string> uni;
    {
        auto av = a.vars(), bv = b.vars();
        std::set_union(av.begin(), av.end(), bv.begin(), bv.end(),
                       std::back_inserter(uni));
    }
    const std::string x = uni.back();

    auto content_in = [&x](const MPoly& p) {
        MPoly c;
        for (auto& ci : p.coeffs_in(x)) c = gcd(c, ci);
        return c;
    };

    if (a.degree_in(x) == 0) return monic(gcd(a, content_in(b)));
    if (b.degree_in(x) == 0) return monic(gcd(content_in(a), b));

    // Specialization pretest: at a point y0 of the remaining variables where
    // lc_x(a) does not vanish, lc_x(gcd) cannot vanish either (it divides it),
    // so deg_x gcd = deg_x gcd(a(y0), b(y0)). A constant fiber gcd proves
    // deg_x(gcd) = 0 and the problem drops to the contents. This avoids the
    // expensive PRS for the common coprime case.
    {
        MPoly lca = a.coeffs_in(x).back();
        std::vector<std::string> rest;
        for (auto& v : uni)
            if (v != x) rest.push_back(v);
        for (long pt = 0; pt <= 4; ++pt) {
            std::map<std::string, MPoly> sub;
            std::map<std::string, Rat> val;
            for (size_t i = 0; i < rest.size(); ++i) {
                Rat r(pt + static_cast<long>(i));
                sub.emplace(rest[i], MPoly(r));
                val.emplace(rest[i], r);
            }
            if (lca.eval(val).is_zero()) continue;
            MPoly fa = a.subst(sub), fb = b.subst(sub);
            if (fb.is_zero()) continue;
            MPoly d = gcd(fa, fb); // univariate in x
            if (d.is_constant())
                return monic(gcd(content_in(a), content_in(b)));
            break;
        }
    }

    MPoly ca = content_in(a), cb = content_in(b);
    MPoly c = gcd(ca, cb);
    // strip the scalar content as well or the coefficients of the primitive
    // remainder sequence blow up exponentially
    MPoly A = divexact(a, ca).primitive_part(), B = divexact(b, cb).primitive_part();
    if (A.degree_in(x) < B.degree_in(x)) std::swap(A, B);
    while (true) {
        MPoly R = prem(A, B, x);
        if (R.is_zero()) break;
        if (R.degree_in(x) == 0) return monic(c); // coprime wrt x
        A = B;
        B = divexact(R, content_in(R)).primitive_part();
    }
    return monic(c * B);
}

namespace {

MPoly lc_in(const MPoly& p, const std::string& var) { return p.coeffs_in(var).back(); }

// --- modular resultant for polynomials in at most two variables -------------
//
// Res_v(p, q) by evaluation/interpolation over enough 62-bit primes to cover
// a rigorous coefficient bound, CRT-combined with symmetric remainders.

uint64_t nth_prime_62(size_t k) {
    static std::vector<uint64_t> cache;
    static mpz_class cursor = (mpz_class(1) << 62);
    while (cache.size() <= k) {
        mpz_nextprime(cursor.get_mpz_t(), cursor.get_mpz_t());
        cache.push_back(cursor.get_ui());
    }
    return cache[k];
}

// dense Z[u] coefficient lists of p viewed in v
struct BivRows {
    std::vector<ZVec> coeff; // coeff[j] = coefficient of v^j, as poly in u
    int degv = -1;
    int degu = 0;
    size_t height_bits = 1;
};

BivRows biv_rows(const MPoly& p, const std::string& v, const std::string& u) {
    BivRows r;
    auto cs = p.coeffs_in(v);
    r.degv = static_cast<int>(cs.size()) - 1;
    for (auto& c : cs) {
        ZVec z;
        if (!c.is_zero()) {
            auto uc = c.univariate_coeffs(u.empty() ? "_" : u);
            z.resize(uc.size());
            for (size_t i = 0; i < uc.size(); ++i) {
                z[i] = uc[i].num(); // integer input guaranteed
                r.height_bits = std::max(
                    r.height_bits, mpz_sizeinbase(z[i].get_mpz_t(), 2));
            }
        }
        r.degu = std::max(r.degu, zdeg(z));
        r.coeff.push_back(std::move(z));
    }
    return r;
}

uint64_t zvec_eval_mod(const ZVec& f, uint64_t x, uint64_t p) {
    uint64_t acc = 0;
    for (int i = zdeg(f); i >= 0; --i) {
        acc = mulmod(acc, x, p);
        uint64_t c = mpz_fdiv_ui(f[i].get_mpz_t(), p);
        acc = (acc + c) % p;
    }
    return acc;
}

// resultant of univariate polynomials over F_p (Sylvester-determinant value)
uint64_t resultant_fp(std::vector<uint64_t> a, std::vector<uint64_t> b, uint64_t p) {
    auto deg = [](const std::vector<uint64_t>& f) { return static_cast<int>(f.size()) - 1; };
    auto trim = [](std::vector<uint64_t>& f) {
        while (!f.empty() && f.back() == 0) f.pop_back();
    };
    trim(a);
    trim(b);
    if (a.empty() || b.empty()) return 0;
    uint64_t res = 1;
    bool neg = false;
    while (deg(b) > 0) {
        int da = deg(a), db = deg(b);
        // a mod b
        uint64_t inv_lb = invmod(b.back(), p);
        for (int k = deg(a); k >= db; --k) {
            if (a[k] == 0) continue;
            uint64_t qc = mulmod(a[k], inv_lb, p);
            for (int i = 0; i <= db; ++i) {
                uint64_t sub = mulmod(qc, b[i], p);
                a[k - db + i] = (a[k - db + i] + p - sub) % p;
            }
        }
        trim(a);
        int dr = deg(a);
        if ((da & 1) && (db & 1)) neg = !neg;
        res = mulmod(res, powmod(b.back(), static_cast<uint64_t>(da - std::max(dr, 0)), p), p);
        if (dr < 0) return 0; // common factor
        std::swap(a, b);
    }
    // b is a nonzero constant
    res = mulmod(res, powmod(b[0], static_cast<uint64_t>(deg(a)), p), p);
    return neg ? (p - res) % p : res;
}

MPoly resultant_modular(const MPoly& P, const MPoly& Q, const std::string& var) {
    // inputs: integer coefficients, at most one variable besides `var`
    std::string other;
    for (auto& v : P.vars())
        if (v != var) other = v;
    for (auto& v : Q.vars())
        if (v != var) other = v;
    BivRows rp = biv_rows(P, var, other);
    BivRows rq = biv_rows(Q, var, other);
    int m = rp.degv, n = rq.degv;
    long D = static_cast<long>(rp.degu) * n + static_cast<long>(rq.degu) * m;

    // coefficient bound: (m+n)! * Hp^n * Hq^m * (D+1)^(m+n), in bits
    double bound_bits = 16; // slack + sign
    for (int i = 2; i <= m + n; ++i) bound_bits += std::log2(static_cast<double>(i));
    bound_bits += static_cast<double>(n) * static_cast<double>(rp.height_bits);
    bound_bits += static_cast<double>(m) * static_cast<double>(rq.height_bits);
    bound_bits += (m + n) * std::log2(static_cast<double>(D + 2));

    std::vector<mpz_class> acc(static_cast<size_t>(D) + 1, mpz_class(0));
    mpz_class mod(1);
    double have_bits = 0;
    for (size_t pi = 0; have_bits <= bound_bits; ++pi) {
        uint64_t prime = nth_prime_62(pi);
        // evaluation points where neither leading v-coefficient vanishes
        std::vector<uint64_t> xs, ys;
        for (uint64_t x = 0; xs.size() < static_cast<size_t>(D) + 1; ++x) {
            if (x >= prime) throw InternalError("resultant_modular: out of points");
            if (zvec_eval_mod(rp.coeff.back(), x, prime) == 0) continue;
            if (zvec_eval_mod(rq.coeff.back(), x, prime) == 0) continue;
            std::vector<uint64_t> av(static_cast<size_t>(m) + 1),
                bv(static_cast<size_t>(n) + 1);
            for (int j = 0; j <= m; ++j) av[j] = zvec_eval_mod(rp.coeff[j], x, prime);
            for (int j = 0; j <= n; ++j) bv[j] = zvec_eval_mod(rq.coeff[j], x, prime);
            xs.push_back(x);
            ys.push_back(resultant_fp(av, bv, prime));
        }
        // Lagrange interpolation (Newton form) over F_p
        size_t npts = xs.size();
        std::vector<uint64_t> newton(ys);
        for (size_t lev = 1; lev < npts; ++lev)
            for (size_t i = npts - 1; i >= lev; --i) {
                uint64_t dx = (xs[i] + prime - xs[i - lev]) % prime;
                newton[i] = mulmod((newton[i] + prime - newton[i - 1]) % prime,
                                   invmod(dx, prime), prime);
                if (i == lev) break;
            }
        std::vector<uint64_t> poly{newton.empty() ? 0 : newton[npts - 1]};
        for (size_t i = npts - 1; i-- > 0;) {
            // poly = poly*(x - xs[i]) + newton[i]
            poly.insert(poly.begin(), 0);
            for (size_t k = 0; k + 1 < poly.size(); ++k) {
                uint64_t sub = mulmod(poly[k + 1], xs[i], prime);
                poly[k] = (poly[k] + prime - sub) % prime;
            }
            poly[0] = (poly[0] + newton[i]) % prime;
        }
        poly.resize(static_cast<size_t>(D) + 1, 0);
        // CRT combine
        mpz_class prime_z(static_cast<unsigned long>(prime));
        if (mod == 1) {
            for (size_t k = 0; k < acc.size(); ++k)
                acc[k] = mpz_class(static_cast<unsigned long>(poly[k]));
        } else {
            uint64_t minv = invmod(static_cast<uint64_t>(
                                       mpz_fdiv_ui(mod.get_mpz_t(), prime)),
                                   prime);
            for (size_t k = 0; k < acc.size(); ++k) {
                uint64_t cur = mpz_fdiv_ui(acc[k].get_mpz_t(), prime);
                uint64_t diff = (poly[k] + prime - cur) % prime;
                uint64_t t = mulmod(diff, minv, prime);
                acc[k] += mod * mpz_class(static_cast<unsigned long>(t));
            }
        }
        mod *= prime_z;
        have_bits += 62.0;
    }
    // symmetric remainders
    mpz_class half = mod / 2;
    std::vector<Rat> cs(acc.size());
    for (size_t k = 0; k < acc.size(); ++k) {
        mpz_class x = acc[k];
        mpz_mod(x.get_mpz_t(), x.get_mpz_t(), mod.get_mpz_t());
        if (x > half) x -= mod;
        cs[k] = Rat(x);
    }
    if (other.empty()) return MPoly(cs[0]);
    return MPoly::from_univariate(other, cs);
}

} // namespace

MPoly resultant_any(const MPoly& p, const MPoly& q, const std::string& var) {
    int dp = p.degree_in(var), dq = q.degree_in(var);
    if (p.is_zero() || q.is_zero()) return MPoly();
    if (dp == 0 && dq == 0) return MPoly(Rat(1));
    if (dq == 0) return q.pow(static_cast<unsigned>(dp));
    if (dp == 0) return p.pow(static_cast<unsigned>(dq));

    MPoly A = p, B = q;
    int s = 1;
    if (dp < dq) {
        std::swap(A, B);
        if ((dp & 1) && (dq & 1)) s = -s;
    }
    Rat ca = A.content(), cb = B.content();
    MPoly Ai = A.primitive_part(), Bi = B.primitive_part();
    Rat t = ca.pow(static_cast<unsigned long>(Bi.degree_in(var))) *
            cb.pow(static_cast<unsigned long>(Ai.degree_in(var)));

    // with at most one parameter variable the modular evaluation/interpolation
    // route is far cheaper than the subresultant walk
    {
        std::vector<std::string> all;
        auto av = Ai.vars(), bv = Bi.vars();
        std::set_union(av.begin(), av.end(), bv.begin(), bv.end(),
                       std::back_inserter(all));
        if (all.size() <= 2) {
            MPoly r = resultant_modular(Ai, Bi, var).scaled(t);
            if (s < 0) r = -r;
            return r;
        }
    }

    MPoly g(Rat(1)), h(Rat(1));
    while (true) {
        int dA = Ai.degree_in(var), dB = Bi.degree_in(var);
        int delta = dA - dB;
        if ((dA & 1) && (dB & 1)) s = -s;
        MPoly R = prem(Ai, Bi, var);
        if (R.is_zero()) return MPoly();
        Ai = Bi;
        Bi = divexact(R, g * h.pow(static_cast<unsigned>(delta)));
        g = lc_in(Ai, var);
        if (delta == 1)
            h = g;
        else if (delta > 1)
            h = divexact(g.pow(static_cast<unsigned>(delta)),
                         h.pow(static_cast<unsigned>(delta - 1)));
        if (Bi.degree_in(var) == 0) {
            int dlast = Ai.degree_in(var);
            MPoly res = (dlast == 1)
                            ? Bi
                            : divexact(Bi.pow(static_cast<unsigned>(dlast)),
                                       h.pow(static_cast<unsigned>(dlast - 1)));
            res = res.scaled(t);
            if (s < 0) res = -res;
            return res;
        }
    }
}

MPoly resultant(const MPoly& p, const MPoly& q, const std::string& var) {
    if (p.degree_in(var) <= 0 || q.degree_in(var) <= 0)
        throw InternalError("resultant: argument has degree 0 in " + var);
    return resultant_any(p, q, var);
}

MPoly squarefree_part(const MPoly& p) {
    if (p.is_zero()) throw InternalError("squarefree_part of zero polynomial");
    if (p.vars().size() > 1) throw InternalError("squarefree_part: univariate only");
    if (p.is_constant()) return p;
    const std::string& x = p.vars()[0];
    MPoly g = gcd(p, p.partial(x));
    return divexact(p, g);
}

} // namespace surfsym
