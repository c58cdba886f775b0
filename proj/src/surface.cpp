#include "surfsym/surface.hpp"

#include "surfsym/errors.hpp"

#include <random>

namespace surfsym {

Vec3P cross(const Vec3P& a, const Vec3P& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0]};
}

Vec3Q cross(const Vec3Q& a, const Vec3Q& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0]};
}

bool is_zero(const Vec3P& a) { return a[0].is_zero() && a[1].is_zero() && a[2].is_zero(); }
bool is_zero(const Vec3Q& a) { return a[0].is_zero() && a[1].is_zero() && a[2].is_zero(); }

namespace {

Vec3Q eval_origin(const Vec3P& v) {
    std::map<std::string, Rat> o{{kParamT, Rat(0)}, {kParamS, Rat(0)}};
    return {v[0].eval(o), v[1].eval(o), v[2].eval(o)};
}

} // namespace

Parametrization make_parametrization(const MPoly& x, const MPoly& y, const MPoly& z) {
    for (const MPoly* p : {&x, &y, &z})
        for (auto& v : p->vars())
            if (v != kParamT && v != kParamS)
                throw InternalError("parametrization uses unknown variable " + v);
    Parametrization P;
    P.x = {x, y, z};
    P.n = std::max({x.total_degree(), y.total_degree(), z.total_degree(), 0});
    for (int i = 0; i < 3; ++i) {
        P.xt[i] = P.x[i].partial(kParamT);
        P.xs[i] = P.x[i].partial(kParamS);
    }
    P.origin = eval_origin(P.x);
    P.origin_normal = eval_origin(cross(P.xt, P.xs));
    return P;
}

Parametrization prepare(const Parametrization& raw, unsigned seed) {
    Vec3P cr = cross(raw.xt, raw.xs);
    if (is_zero(cr))
        throw DegenerateSurface("xt x xs vanishes identically: the parametrization "
                                "traces a curve or a point");
    if (!is_zero(raw.origin_normal)) return raw;

    std::mt19937_64 rng(seed);
    auto draw = [&rng]() { return static_cast<long>(rng() % 11) - 5; };
    for (int attempt = 0; attempt < 16; ++attempt) {
        long al = draw(), be = draw(), ga = draw();
        long de = draw(), ep = draw(), ze = draw();
        if (al * ep - be * de == 0) continue;
        MPoly t = MPoly::variable(kParamT), s = MPoly::variable(kParamS);
        std::map<std::string, MPoly> sub{
            {kParamT, t.scaled(Rat(al)) + s.scaled(Rat(be)) + MPoly(Rat(ga))},
            {kParamS, t.scaled(Rat(de)) + s.scaled(Rat(ep)) + MPoly(Rat(ze))}};
        Parametrization cand = make_parametrization(
            raw.x[0].subst(sub), raw.x[1].subst(sub), raw.x[2].subst(sub));
        if (!is_zero(cand.origin_normal)) return cand;
    }
    throw RetriesExhausted("could not find a regular origin in 16 reparametrization "
                           "attempts");
}

FundamentalForm fundamental_form(const Parametrization& P) {
    auto dot = [](const Vec3P& a, const Vec3P& b) {
        return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
    };
    FundamentalForm ff;
    ff.E = dot(P.xt, P.xt);
    ff.F = dot(P.xt, P.xs);
    ff.G = dot(P.xs, P.xs);
    std::map<std::string, Rat> o{{kParamT, Rat(0)}, {kParamS, Rat(0)}};
    ff.A = ff.E.eval(o);
    ff.B = ff.F.eval(o);
    ff.C = ff.G.eval(o);
    if (ff.A.sign() <= 0 || (ff.A * ff.C - ff.B * ff.B).sign() <= 0)
        throw InternalError("first fundamental form not positive definite at the "
                            "origin; parametrization not prepared");
    return ff;
}

bool plane_check(const Parametrization& P) {
    Vec3P cr = cross(P.xt, P.xs);
    if (is_zero(cr)) return false;
    // find a grid point where the normal is nonzero
    int deg = 0;
    for (auto& c : cr) deg = std::max(deg, c.total_degree());
    Vec3Q val{Rat(0), Rat(0), Rat(0)};
    bool found = false;
    for (long a = 0; a <= deg + 1 && !found; ++a) {
        for (long b = 0; b <= deg + 1 && !found; ++b) {
            std::map<std::string, Rat> pt{{kParamT, Rat(a)}, {kParamS, Rat(b)}};
            val = {cr[0].eval(pt), cr[1].eval(pt), cr[2].eval(pt)};
            if (!is_zero(val)) found = true;
        }
    }
    if (!found) throw InternalError("plane_check: no regular grid point");
    // constant direction iff cr is pointwise parallel to val
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (!(cr[i].scaled(val[j]) - cr[j].scaled(val[i])).is_zero()) return false;
    return true;
}

RatFn eval_at(const MPoly& component, const RatFn& pt, const RatFn& ps) {
    std::map<std::string, RatFn> sub;
    for (auto& v : component.vars()) {
        if (v == kParamT)
            sub.emplace(v, pt);
        else if (v == kParamS)
            sub.emplace(v, ps);
        else
            throw InternalError("eval_at: unexpected variable " + v);
    }
    return compose(component, sub);
}

} // namespace surfsym
