#include "surfsym/solver.hpp"

#include "surfsym/errors.hpp"

#include <algorithm>
#include <random>

namespace surfsym {

namespace {

bool is_uv_var(const std::string& v) { return v == kUnknownU || v == kUnknownV; }

void check_uv(const MPoly& e) {
    for (auto& v : e.vars())
        if (!is_uv_var(v)) throw InternalError("system equation uses variable " + v);
}

MPoly subst_u(const MPoly& e, const Rat& val) {
    return e.subst({{kUnknownU, MPoly(val)}});
}

MPoly subst_v(const MPoly& e, const Rat& val) {
    return e.subst({{kUnknownV, MPoly(val)}});
}

// gcd of the equations, cheapest first, early exit on constants
MPoly common_factor(std::vector<MPoly> eqs) {
    std::stable_sort(eqs.begin(), eqs.end(), [](const MPoly& a, const MPoly& b) {
        if (a.total_degree() != b.total_degree())
            return a.total_degree() < b.total_degree();
        return a.coeff_bits() < b.coeff_bits();
    });
    MPoly g;
    for (const MPoly& e : eqs) {
        g = gcd(g, e);
        if (!g.is_zero() && g.is_constant()) return g;
    }
    return g;
}

// does the exact rational x lie in the coordinate's range
bool coord_contains(const RootInterval& c, const Rat& x) {
    if (c.is_exact()) return *c.exact == x;
    return c.lo <= x && x <= c.hi;
}

// exact equality test for two coordinates possibly described by different
// polynomials
bool coord_equal(const RootInterval& a, const RootInterval& b) {
    if (a.is_exact() && b.is_exact()) return *a.exact == *b.exact;
    if (a.is_exact()) return coord_contains(b, *a.exact) && sign_at(b.poly, *a.exact) == 0;
    if (b.is_exact()) return coord_contains(a, *b.exact) && sign_at(a.poly, *b.exact) == 0;
    Rat lo = std::max(a.lo, b.lo), hi = std::min(a.hi, b.hi);
    if (lo > hi) return false;
    MPoly g = gcd(a.poly, b.poly);
    if (g.is_constant()) return false;
    // refine both so the intersection endpoints are off the roots of g
    RootInterval ra = a, rb = b;
    while (true) {
        lo = std::max(ra.lo, rb.lo);
        hi = std::min(ra.hi, rb.hi);
        if (lo > hi) return false;
        if (lo == hi) return sign_at(g, lo) == 0;
        if (sign_at(g, lo) != 0 && sign_at(g, hi) != 0)
            return count_roots_in(g, lo, hi) == 1;
        ra = refined(ra, ra.width() / Rat(2));
        rb = refined(rb, rb.width() / Rat(2));
    }
}

bool root_equal(const Root2D& a, const Root2D& b) {
    return coord_equal(a.u, b.u) && coord_equal(a.v, b.v);
}

void sort_roots(std::vector<Root2D>& roots) {
    std::sort(roots.begin(), roots.end(), [](const Root2D& a, const Root2D& b) {
        if (a.approx_u() != b.approx_u()) return a.approx_u() < b.approx_u();
        return a.approx_v() < b.approx_v();
    });
}

// --- exact vanishing decisions ----------------------------------------------

// e restricted to one exact coordinate, decided against the other algebraic one
bool vanishes_mixed(const MPoly& restricted, const RootInterval& alg) {
    if (restricted.is_zero()) return true;
    if (restricted.is_constant()) return false;
    MPoly g = gcd(restricted, alg.poly);
    if (g.is_constant()) return false;
    // interval endpoints are non-roots of alg.poly, hence of g | alg.poly
    return count_roots_in(g, alg.lo, alg.hi) == 1;
}

// Cauchy-type lower bound on the absolute value of nonzero roots of W:
// |root| >= |a_k| / (|a_k| + max_{i>k} |a_i|) where a_k is the lowest nonzero
// coefficient.
Rat nonzero_root_bound(const MPoly& W, const std::string& var, int* zero_mult) {
    auto cs = W.primitive_part().univariate_coeffs(var);
    size_t k = 0;
    while (k < cs.size() && cs[k].is_zero()) ++k;
    if (zero_mult) *zero_mult = static_cast<int>(k);
    Rat a0 = cs[k].abs();
    Rat m(0);
    for (size_t i = k + 1; i < cs.size(); ++i) m = std::max(m, cs[i].abs());
    if (m.is_zero()) return a0; // W = a_k x^k: no nonzero roots; any bound works
    return a0 / (a0 + m);
}

// both coordinates algebraic: annihilating-polynomial certificate.
// W(w) = Res_u(f(u), Res_v(g(v), w - e(u,v))) vanishes at e(u*, v*); if 0 is
// not a root, e(u*,v*) != 0; otherwise any nonzero value of e at a root pair
// is a nonzero root of W, bounded away from 0, so interval refinement decides.
bool vanishes_alg_alg(const MPoly& e, const Root2D& r) {
    RootInterval cu = r.u, cv = r.v;
    auto box_val = [&]() {
        return interval_eval(e, {{kUnknownU, {cu.lo, cu.hi}}, {kUnknownV, {cv.lo, cv.hi}}});
    };
    // quick refutation
    for (int i = 0; i < 8; ++i) {
        if (!box_val().contains_zero()) return false;
        cu = refined(cu, cu.width() / Rat(2));
        cv = refined(cv, cv.width() / Rat(2));
    }
    const std::string w = "w";
    MPoly wv = MPoly::variable(w);
    MPoly gv = cv.poly.rename(cv.poly.vars()[0], kUnknownV);
    MPoly fu = cu.poly.rename(cu.poly.vars()[0], kUnknownU);
    MPoly inner = resultant_any(gv, wv - e, kUnknownV);
    MPoly W = resultant_any(fu, inner, kUnknownU);
    if (W.is_zero()) throw InternalError("vanishing certificate degenerated");
    int zero_mult = 0;
    Rat lambda = nonzero_root_bound(W, w, &zero_mult);
    if (zero_mult == 0) return false; // 0 is not a root of W at all
    while (true) {
        QInterval K = box_val();
        if (!K.contains_zero()) return false;
        if (K.lo.abs() < lambda && K.hi.abs() < lambda) return true;
        cu = refined(cu, cu.width() / Rat(2));
        cv = refined(cv, cv.width() / Rat(2));
    }
}

} // namespace

RootInterval exact_coord(const Rat& value, const std::string& var) {
    MPoly p = (MPoly::variable(var) - MPoly(value)).normalized();
    return RootInterval{p, value, value, value};
}

bool vanishes_at(const MPoly& e, const Root2D& r) {
    check_uv(e);
    if (e.is_zero()) return true;
    if (r.u.is_exact() && r.v.is_exact())
        return e.eval({{kUnknownU, *r.u.exact}, {kUnknownV, *r.v.exact}}).is_zero();
    if (r.u.is_exact()) {
        MPoly h = subst_u(e, *r.u.exact);
        return vanishes_mixed(h, r.v);
    }
    if (r.v.is_exact()) {
        MPoly h = subst_v(e, *r.v.exact);
        return vanishes_mixed(h, r.u);
    }
    return vanishes_alg_alg(e, r);
}

Root2D refine_root(const Root2D& r, const Rat& width) {
    Root2D out = r;
    out.u = refined(r.u, width);
    out.v = refined(r.v, width);
    return out;
}

MPoly squarefree_part_bivariate(const MPoly& g) {
    if (g.is_zero() || g.is_constant()) return g;
    MPoly rep = gcd(gcd(g, g.partial(kUnknownU)), g.partial(kUnknownV));
    if (rep.is_constant()) return g;
    return divexact(g, rep);
}

bool has_real_continuum(const MPoly& g) {
    if (g.is_zero()) return true;
    if (g.is_constant()) return false;
    // vertical lines u = r: real roots of the content wrt v
    auto coeffs_v = g.coeffs_in(kUnknownV);
    MPoly cont_v = common_factor(coeffs_v);
    if (!cont_v.is_constant() && count_real_roots(cont_v) > 0) return true;
    MPoly pp = divexact(g, cont_v);
    if (pp.degree_in(kUnknownV) == 0) return false; // only vertical structure

    // critical u-values: where the v-fiber has a multiple root or drops degree
    MPoly pv = pp.partial(kUnknownV);
    MPoly crit = resultant_any(pp, pv, kUnknownV);
    MPoly lcv = pp.coeffs_in(kUnknownV).back();
    if (!lcv.is_constant()) crit = crit * lcv;
    std::vector<Rat> samples;
    if (crit.is_constant()) {
        samples.push_back(Rat(0));
    } else {
        auto roots = isolate_real_roots(crit);
        if (roots.empty()) {
            samples.push_back(Rat(0));
        } else {
            samples.push_back(roots.front().lo - Rat(1));
            for (size_t i = 0; i + 1 < roots.size(); ++i) {
                // the isolation produces pairwise disjoint closed intervals
                samples.push_back((roots[i].hi + roots[i + 1].lo) / Rat(2));
            }
            samples.push_back(roots.back().hi + Rat(1));
        }
    }
    // a real v-root over a non-critical sample is a regular curve point
    for (const Rat& u0 : samples) {
        MPoly fiber = subst_u(pp, u0);
        if (fiber.is_zero()) throw InternalError("continuum test: zero fiber");
        if (fiber.is_constant()) continue;
        if (count_real_roots(fiber) > 0) return true;
    }
    return false;
}

namespace {

// deterministic ordering: cheap equations first
std::vector<size_t> solve_order(const std::vector<MPoly>& eqs) {
    std::vector<size_t> idx(eqs.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::stable_sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
        int da = eqs[a].total_degree(), db = eqs[b].total_degree();
        if (da != db) return da < db;
        return eqs[a].coeff_bits() < eqs[b].coeff_bits();
    });
    return idx;
}

struct Eliminants {
    MPoly ru;               // candidates for u are among ru's roots
    std::vector<MPoly> base; // ordered equations actually used
};

// Resultant-based eliminant in `keep`, eliminating `drop`; the gcd with a
// second and third pairwise resultant trims spurious candidates.
MPoly eliminant(const std::vector<MPoly>& ordered, const std::string& drop,
                const std::string& keep) {
    size_t n = ordered.size();
    // first usable pair
    MPoly r1;
    size_t used_i = 0, used_j = 0;
    int attempts = 0;
    bool found = false;
    for (size_t j = 1; j < n && !found; ++j) {
        for (size_t i = 0; i < j && !found; ++i) {
            const MPoly& p = ordered[i];
            const MPoly& q = ordered[j];
            if (p.degree_in(drop) == 0 && q.degree_in(drop) == 0) continue;
            if (++attempts > 8) break;
            MPoly r = resultant_any(p, q, drop);
            if (!r.is_zero()) {
                r1 = r;
                used_i = i;
                used_j = j;
                found = true;
            }
        }
        if (attempts > 8) break;
    }
    if (!found) {
        // random linear combinations as a last resort
        std::mt19937_64 rng(0xE11A);
        for (int tries = 0; tries < 8; ++tries) {
            Rat lam(static_cast<long>(rng() % 17) + 1);
            MPoly p = ordered[0] + ordered[tries % n].scaled(lam);
            MPoly q = ordered[(tries + 1) % n];
            if (p.degree_in(drop) == 0 && q.degree_in(drop) == 0) continue;
            MPoly r = resultant_any(p, q, drop);
            if (!r.is_zero()) {
                r1 = r;
                used_i = used_j = 0;
                found = true;
                break;
            }
        }
        if (!found)
            throw EliminationDegenerate(
                "all equation pairs yield identically zero resultants");
    }
    if (r1.is_constant()) return r1;
    // sharpen with up to two more resultants against the first equation
    int extra = 0;
    for (size_t j = 0; j < n && extra < 2; ++j) {
        if (j == used_i || j == used_j) continue;
        const MPoly& p = ordered[used_i];
        const MPoly& q = ordered[j];
        if (p.degree_in(drop) == 0 && q.degree_in(drop) == 0) continue;
        MPoly r = resultant_any(p, q, drop);
        ++extra;
        if (r.is_zero()) continue;
        r1 = gcd(r1, r);
        if (r1.is_constant()) return r1;
    }
    if (r1.uses_var(drop)) throw InternalError("eliminant still uses " + drop);
    (void)keep;
    return r1;
}

} // namespace

SolutionSet solve_real(const PolySystem& sys) {
    if (sys.equations.empty()) throw InternalError("solve_real: empty system");
    for (const MPoly& e : sys.equations) {
        check_uv(e);
        if (e.is_zero()) throw InternalError("solve_real: zero equation");
    }
    SolutionSet out;

    // a nonzero constant equation is unsatisfiable
    for (const MPoly& e : sys.equations)
        if (e.is_constant()) return out;

    auto side_ok = [&sys](const Root2D& r) {
        for (const MPoly& sc : sys.side_conditions)
            if (vanishes_at(sc, r)) return false;
        return true;
    };

    // (1) common factor: positive-dimensional signal or isolated locus points
    MPoly g = common_factor(sys.equations);
    if (!g.is_constant()) {
        MPoly gsf = squarefree_part_bivariate(g).normalized();
        PolySystem residual;
        residual.case_id = sys.case_id;
        residual.side_conditions = sys.side_conditions;
        for (const MPoly& e : sys.equations) {
            MPoly h = divexact(e, g);
            if (h.is_zero()) throw InternalError("zero residual equation");
            residual.equations.push_back(h.normalized());
            residual.tags.push_back(EquationTag{});
        }
        if (has_real_continuum(gsf)) {
            out.kind = SolutionSet::Kind::PositiveDimensional;
            out.witness = gsf;
            SolutionSet extras = solve_real(residual);
            out.roots = extras.roots; // already certified incl. side conditions
            return out;
        }
        // finite real locus of g: its (singular) points plus residual roots
        std::vector<Root2D> merged;
        if (!gsf.is_constant()) {
            PolySystem sing;
            sing.case_id = sys.case_id;
            sing.side_conditions = sys.side_conditions;
            // isolated real zeros of a square-free curve are singular points
            for (MPoly e : {gsf, gsf.partial(kUnknownU), gsf.partial(kUnknownV)})
                if (!e.is_zero()) sing.equations.push_back(e.normalized());
            sing.tags.resize(sing.equations.size());
            SolutionSet pts = solve_real(sing);
            merged = pts.roots;
        }
        SolutionSet res = solve_real(residual);
        for (const Root2D& r : res.roots) {
            bool dup = false;
            for (const Root2D& m : merged) dup = dup || root_equal(m, r);
            if (!dup) merged.push_back(r);
        }
        sort_roots(merged);
        out.roots = merged;
        out.kind = merged.empty() ? SolutionSet::Kind::Empty : SolutionSet::Kind::Finite;
        return out;
    }

    // (2) zero-dimensional path
    std::vector<size_t> order = solve_order(sys.equations);
    std::vector<MPoly> ordered;
    for (size_t i : order) ordered.push_back(sys.equations[i]);

    bool any_u = false, any_v = false;
    for (const MPoly& e : ordered) {
        any_u = any_u || e.degree_in(kUnknownU) > 0;
        any_v = any_v || e.degree_in(kUnknownV) > 0;
    }
    if (!any_v) {
        // all equations univariate in u with constant gcd: no common root
        return out;
    }
    if (!any_u) return out;

    MPoly Ru = eliminant(ordered, kUnknownV, kUnknownU);
    if (Ru.is_constant()) return out;
    std::vector<RootInterval> ucands = isolate_real_roots(Ru);
    if (ucands.empty()) return out;

    MPoly Rv;      // computed lazily for irrational u candidates
    std::vector<RootInterval> vcands_global;
    bool have_rv = false;

    std::vector<Root2D> roots;
    for (const RootInterval& uc : ucands) {
        if (uc.is_exact()) {
            const Rat u0 = *uc.exact;
            MPoly h;
            bool inconsistent = false, all_zero = true;
            for (const MPoly& e : ordered) {
                MPoly spec = subst_u(e, u0);
                if (spec.is_zero()) continue;
                all_zero = false;
                if (spec.is_constant()) {
                    inconsistent = true;
                    break;
                }
                h = gcd(h, spec);
                if (h.is_constant()) break;
            }
            if (inconsistent) continue;
            if (all_zero)
                throw InternalError("all equations vanish on a line despite constant gcd");
            if (h.is_zero() || h.is_constant()) continue;
            for (const RootInterval& vc : isolate_real_roots(h)) {
                Root2D r{uc, vc, false};
                // roots of h satisfy every specialized equation by construction
                if (!side_ok(r)) continue;
                r.certified = true;
                roots.push_back(r);
            }
        } else {
            if (!have_rv) {
                Rv = eliminant(ordered, kUnknownU, kUnknownV);
                if (!Rv.is_constant()) vcands_global = isolate_real_roots(Rv);
                have_rv = true;
            }
            for (const RootInterval& vc : vcands_global) {
                Root2D r{uc, vc, false};
                bool ok = true;
                for (const MPoly& e : ordered)
                    if (!vanishes_at(e, r)) {
                        ok = false;
                        break;
                    }
                if (!ok || !side_ok(r)) continue;
                r.certified = true;
                roots.push_back(r);
            }
        }
    }
    sort_roots(roots);
    out.roots = roots;
    out.kind = roots.empty() ? SolutionSet::Kind::Empty : SolutionSet::Kind::Finite;
    return out;
}

} // namespace surfsym
