#include "surfsym/roots.hpp"

#include "surfsym/errors.hpp"

#include <algorithm>

namespace surfsym {

namespace {

// dense integer univariate, lowest power first
using ZVec = std::vector<mpz_class>;

int zdeg(const ZVec& f) {
    for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
        if (f[i] != 0) return i;
    return -1;
}

ZVec to_zvec(const MPoly& p, std::string* var_out) {
    if (p.vars().size() > 1) throw InternalError("univariate expected");
    std::string var = p.vars().empty() ? "x" : p.vars()[0];
    if (var_out) *var_out = var;
    MPoly prim = p.primitive_part();
    auto cs = prim.univariate_coeffs(var);
    ZVec z(cs.size());
    for (size_t i = 0; i < cs.size(); ++i) z[i] = cs[i].num();
    return z;
}

// sign of f at p/q (q > 0): sign of sum c_i p^i q^(n-i)
int zsign_at(const ZVec& f, const mpz_class& p, const mpz_class& q) {
    int n = zdeg(f);
    if (n < 0) return 0;
    mpz_class acc(0), ppow(1);
    std::vector<mpz_class> qpow(static_cast<size_t>(n) + 1);
    qpow[n] = 1;
    for (int i = n - 1; i >= 0; --i) qpow[i] = qpow[i + 1] * q;
    for (int i = 0; i <= n; ++i) {
        if (f[i] != 0) acc += f[i] * ppow * qpow[i];
        if (i < n) ppow *= p;
    }
    return sgn(acc);
}

int zsign_at(const ZVec& f, const Rat& x) { return zsign_at(f, x.num(), x.den()); }

// Sturm chain of a square-free f; elements scaled to primitive integers by
// positive factors so sign variations are preserved.
std::vector<ZVec> sturm_chain(const ZVec& f) {
    std::vector<ZVec> chain;
    int n = zdeg(f);
    if (n < 0) return chain;
    chain.push_back(f);
    if (n == 0) return chain;
    ZVec d(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) d[i - 1] = f[i] * i;
    chain.push_back(d);
    while (true) {
        const ZVec& a = chain[chain.size() - 2];
        const ZVec& b = chain.back();
        int db = zdeg(b);
        if (db <= 0) break;
        // rational remainder of a by b, negated
        std::vector<Rat> r(a.size());
        for (size_t i = 0; i < a.size(); ++i) r[i] = Rat(a[i]);
        Rat lb = Rat(b[db]);
        for (int k = static_cast<int>(r.size()) - 1; k >= db; --k) {
            if (r[k].is_zero()) continue;
            Rat qc = r[k] / lb;
            for (int i = 0; i <= db; ++i) r[k - db + i] -= qc * Rat(b[i]);
        }
        // negate and scale to primitive integer with positive factor
        int dr = -1;
        for (int i = static_cast<int>(r.size()) - 1; i >= 0; --i)
            if (!r[i].is_zero()) {
                dr = i;
                break;
            }
        if (dr < 0) throw InternalError("sturm_chain: input not square-free");
        mpz_class num_gcd(0), den_lcm(1);
        for (int i = 0; i <= dr; ++i) {
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), r[i].num().get_mpz_t());
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), r[i].den().get_mpz_t());
        }
        ZVec next(static_cast<size_t>(dr) + 1);
        for (int i = 0; i <= dr; ++i) {
            Rat scaled = -r[i] * Rat(den_lcm) / Rat(num_gcd);
            next[i] = scaled.num();
        }
        chain.push_back(std::move(next));
        if (dr == 0) break;
    }
    return chain;
}

int variations(const std::vector<ZVec>& chain, const Rat& x) {
    int count = 0, prev = 0;
    for (const ZVec& f : chain) {
        int s = zsign_at(f, x);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

// roots of square-free f in (a, b]
int zcount(const std::vector<ZVec>& chain, const Rat& a, const Rat& b) {
    return variations(chain, a) - variations(chain, b);
}

Rat zcauchy_bound(const ZVec& f) {
    int n = zdeg(f);
    mpz_class m(0);
    for (int i = 0; i < n; ++i) {
        mpz_class a = abs(f[i]);
        if (a > m) m = a;
    }
    return Rat(1) + Rat(m, abs(f[n]));
}

} // namespace

Rat cauchy_root_bound(const MPoly& p) {
    if (p.is_zero()) throw InternalError("root bound of zero polynomial");
    ZVec z = to_zvec(p, nullptr);
    if (zdeg(z) == 0) return Rat(1);
    return zcauchy_bound(z);
}

int sign_at(const MPoly& p, const Rat& x) {
    ZVec z = to_zvec(p, nullptr);
    return zsign_at(z, x);
}

int count_roots_in(const MPoly& f, const Rat& a, const Rat& b) {
    if (f.is_zero()) throw InternalError("count_roots_in: zero polynomial");
    if (f.is_constant()) return 0;
    MPoly sf = squarefree_part(f);
    ZVec z = to_zvec(sf, nullptr);
    if (zsign_at(z, a) == 0 || zsign_at(z, b) == 0)
        throw InternalError("count_roots_in: endpoint is a root");
    auto chain = sturm_chain(z);
    return zcount(chain, a, b);
}

int count_real_roots(const MPoly& f) {
    if (f.is_zero()) throw InternalError("count_real_roots: zero polynomial");
    if (f.is_constant()) return 0;
    MPoly sf = squarefree_part(f);
    ZVec z = to_zvec(sf, nullptr);
    Rat b = zcauchy_bound(z);
    auto chain = sturm_chain(z);
    return zcount(chain, -b, b);
}

Rat simplest_rational_in(const Rat& lo, const Rat& hi) {
    if (lo > hi) throw InternalError("simplest_rational_in: empty interval");
    if (lo == hi) return lo;
    if (lo.sign() <= 0 && hi.sign() >= 0) return Rat(0);
    if (hi.sign() < 0) return -simplest_rational_in(-hi, -lo);
    // 0 < lo < hi
    Rat fl = lo.ceil();
    if (fl <= hi) return fl; // an integer inside
    Rat a = lo.floor();
    // continued-fraction step: simplest in [lo,hi] = a + 1/simplest in [1/(hi-a), 1/(lo-a)]
    Rat inner = simplest_rational_in((hi - a).inv(), (lo - a).inv());
    return a + inner.inv();
}

std::vector<RootInterval> isolate_real_roots(const MPoly& p) {
    if (p.is_zero()) throw InternalError("isolate_real_roots: zero polynomial");
    if (p.vars().size() > 1)
        throw InternalError("isolate_real_roots: univariate input required");
    if (p.is_constant()) return {};

    MPoly sf = squarefree_part(p).normalized();
    std::string var;
    ZVec f = to_zvec(sf, &var);
    int n = zdeg(f);
    auto chain = sturm_chain(f);
    Rat bound = zcauchy_bound(f);
    const mpz_class lead = abs(f[n]);

    std::vector<RootInterval> out;
    // Identifies the root isolated in (lo, hi) as rational or irrational.
    // A rational root in lowest terms p/q of the primitive integer sf has
    // q | lead, so once den(simplest rational inside) exceeds lead the root
    // is certifiably irrational.
    auto settle = [&](Rat lo, Rat hi) {
        while (true) {
            Rat cand = simplest_rational_in(lo, hi);
            if (cand.den() > lead) {
                out.push_back(RootInterval{sf, lo, hi, std::nullopt});
                return;
            }
            int s = zsign_at(f, cand);
            if (s == 0 && cand > lo && cand < hi) {
                out.push_back(RootInterval{sf, cand, cand, cand});
                return;
            }
            // bisect; midpoint hitting a root is itself the rational root
            Rat mid = (lo + hi) / Rat(2);
            int sm = zsign_at(f, mid);
            if (sm == 0) {
                out.push_back(RootInterval{sf, mid, mid, mid});
                return;
            }
            if (sm == zsign_at(f, lo))
                lo = mid;
            else
                hi = mid;
        }
    };

    // bisection over (-bound, bound]; endpoints of subdivisions are chosen
    // off the roots so Sturm counts stay decisive
    struct Seg {
        Rat lo, hi;
    };
    std::vector<Seg> stack;
    Rat lo0 = -bound, hi0 = bound; // Cauchy bound is strict, endpoints non-roots
    if (zsign_at(f, lo0) == 0 || zsign_at(f, hi0) == 0)
        throw InternalError("isolate: bound endpoint is a root");
    stack.push_back({lo0, hi0});
    while (!stack.empty()) {
        Seg s = stack.back();
        stack.pop_back();
        int c = zcount(chain, s.lo, s.hi);
        if (c == 0) continue;
        if (c == 1) {
            settle(s.lo, s.hi);
            continue;
        }
        Rat w = s.hi - s.lo;
        Rat mid = s.lo + w / Rat(2);
        if (zsign_at(f, mid) == 0) {
            // the midpoint is itself a (rational) root; isolate it and
            // recurse on both sides
            out.push_back(RootInterval{sf, mid, mid, mid});
            Rat eps = w / Rat(4);
            auto separates = [&](const Rat& e) {
                return zsign_at(f, mid - e) != 0 && zsign_at(f, mid + e) != 0 &&
                       zcount(chain, mid - e, mid + e) == 1;
            };
            while (!separates(eps)) eps = eps / Rat(2);
            stack.push_back({s.lo, mid - eps});
            stack.push_back({mid + eps, s.hi});
        } else {
            stack.push_back({s.lo, mid});
            stack.push_back({mid, s.hi});
        }
    }

    std::sort(out.begin(), out.end(),
              [](const RootInterval& a, const RootInterval& b) {
                  return a.approx() < b.approx();
              });
    // make closed intervals pairwise disjoint (exact points included)
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i + 1 < out.size(); ++i) {
            if (out[i].hi >= out[i + 1].lo) {
                if (!out[i].is_exact())
                    out[i] = refined(out[i], out[i].width() / Rat(2));
                else
                    out[i + 1] = refined(out[i + 1], out[i + 1].width() / Rat(2));
                changed = true;
            }
        }
    }
    return out;
}

RootInterval refined(const RootInterval& r, const Rat& width) {
    if (r.is_exact()) return r;
    if (width.sign() <= 0)
        throw ZeroWidthRequest("cannot refine an isolating interval to width " +
                               width.str());
    ZVec f = to_zvec(r.poly, nullptr);
    RootInterval out = r;
    int slo = zsign_at(f, out.lo);
    while (out.width() >= width) {
        Rat mid = out.mid();
        int sm = zsign_at(f, mid);
        if (sm == 0) throw InternalError("refined: midpoint root in irrational interval");
        if (sm == slo)
            out.lo = mid;
        else
            out.hi = mid;
    }
    return out;
}

// --- interval arithmetic ----------------------------------------------------

QInterval iv_add(const QInterval& a, const QInterval& b) {
    return {a.lo + b.lo, a.hi + b.hi};
}

QInterval iv_sub(const QInterval& a, const QInterval& b) {
    return {a.lo - b.hi, a.hi - b.lo};
}

QInterval iv_mul(const QInterval& a, const QInterval& b) {
    Rat c1 = a.lo * b.lo, c2 = a.lo * b.hi, c3 = a.hi * b.lo, c4 = a.hi * b.hi;
    Rat lo = std::min(std::min(c1, c2), std::min(c3, c4));
    Rat hi = std::max(std::max(c1, c2), std::max(c3, c4));
    return {lo, hi};
}

QInterval iv_pow(const QInterval& a, unsigned e) {
    QInterval r{Rat(1), Rat(1)};
    for (unsigned i = 0; i < e; ++i) r = iv_mul(r, a);
    return r;
}

QInterval interval_eval(const MPoly& p, const std::map<std::string, QInterval>& box) {
    QInterval acc{Rat(0), Rat(0)};
    std::vector<const QInterval*> vals(p.vars().size());
    for (size_t i = 0; i < p.vars().size(); ++i) {
        auto it = box.find(p.vars()[i]);
        if (it == box.end())
            throw InternalError("interval_eval: missing interval for " + p.vars()[i]);
        vals[i] = &it->second;
    }
    std::vector<std::vector<QInterval>> pows(p.vars().size(),
                                             std::vector<QInterval>{{Rat(1), Rat(1)}});
    for (auto& [e, c] : p.terms()) {
        QInterval t{c, c};
        for (size_t i = 0; i < e.size(); ++i) {
            auto& pv = pows[i];
            while (pv.size() <= e[i]) pv.push_back(iv_mul(pv.back(), *vals[i]));
            t = iv_mul(t, pv[e[i]]);
        }
        acc = iv_add(acc, t);
    }
    return acc;
}

} // namespace surfsym
