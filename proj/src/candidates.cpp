#include "surfsym/candidates.hpp"

#include "surfsym/errors.hpp"

#include <algorithm>

namespace surfsym {

std::string CaseId::str() const {
    std::string base;
    switch (kind) {
        case CaseKind::A: base = "A"; break;
        case CaseKind::B: base = "B"; break;
        case CaseKind::C: base = "C"; break;
        case CaseKind::D1: base = "D1"; break;
        case CaseKind::D2i: base = "D2i"; break;
        case CaseKind::D2ii: base = "D2ii"; break;
    }
    return base + (det_sign > 0 ? "+" : "-");
}

const std::vector<CaseId>& CaseId::all() {
    static const std::vector<CaseId> ids = [] {
        std::vector<CaseId> v;
        for (CaseKind k : {CaseKind::A, CaseKind::B, CaseKind::C, CaseKind::D1,
                           CaseKind::D2i, CaseKind::D2ii})
            for (int s : {+1, -1}) v.push_back(CaseId{k, s});
        return v;
    }();
    return ids;
}

std::optional<CaseId> CaseId::parse(const std::string& text) {
    std::string low;
    for (char ch : text) low.push_back(static_cast<char>(std::tolower(ch)));
    for (const CaseId& id : all()) {
        std::string want;
        for (char ch : id.str()) want.push_back(static_cast<char>(std::tolower(ch)));
        if (low == want) return id;
    }
    return std::nullopt;
}

int CaseId::order_index() const {
    const auto& ids = all();
    for (size_t i = 0; i < ids.size(); ++i)
        if (ids[i] == *this) return static_cast<int>(i);
    return -1;
}

namespace {

RatFn U() { return RatFn(MPoly::variable(kUnknownU)); }
RatFn V() { return RatFn(MPoly::variable(kUnknownV)); }

void check_involution_laws(const PhiTemplate& p) {
    RatFn one(Rat(1)), zero;
    // A^2 = I
    if (p.a * p.a + p.b * p.c != one || p.d * p.d + p.b * p.c != one ||
        p.b * (p.a + p.d) != zero || p.c * (p.a + p.d) != zero)
        throw InternalError("phi template violates A^2 = I");
    // (A + I) c = 0
    if ((p.a + one) * p.c1 + p.b * p.c2 != zero ||
        p.c * p.c1 + (p.d + one) * p.c2 != zero)
        throw InternalError("phi template violates (A+I)c = 0");
    Rat want(p.kind == CaseKind::A ? 1 : -1);
    if (p.delta != RatFn(want)) throw InternalError("phi template has wrong det");
}

} // namespace

PhiTemplate phi_template(CaseKind kind, const FundamentalForm& ff) {
    PhiTemplate p;
    p.kind = kind;
    RatFn u = U(), v = V();
    RatFn one(Rat(1)), zero;
    switch (kind) {
        case CaseKind::A:
            p.a = -one; p.b = zero; p.c = zero; p.d = -one;
            p.c1 = u; p.c2 = v;
            break;
        case CaseKind::B:
            p.a = one; p.b = u; p.c = zero; p.d = -one;
            p.c1 = -(u * v) / RatFn(Rat(2)); p.c2 = v;
            break;
        case CaseKind::C:
            p.a = -one; p.b = u; p.c = zero; p.d = one;
            p.c1 = v; p.c2 = zero;
            break;
        case CaseKind::D1:
            p.a = u; p.b = (one - u * u) / v; p.c = v; p.d = -u;
            p.c1 = zero; p.c2 = zero;
            p.side_conditions.push_back(MPoly::variable(kUnknownV));
            break;
        case CaseKind::D2i:
            p.a = one; p.b = zero; p.c = u; p.d = -one;
            p.c1 = zero; p.c2 = v;
            p.side_conditions.push_back(MPoly::variable(kUnknownU));
            p.side_conditions.push_back(MPoly::variable(kUnknownV));
            break;
        case CaseKind::D2ii: {
            // a = (-c1^2 E(c) - c1 c2 (F(c) - B) + C c2^2) / (A c1^2 + 2B c1 c2 + C c2^2)
            MPoly Ec = ff.E.subst({{kParamT, MPoly::variable(kUnknownU)},
                                   {kParamS, MPoly::variable(kUnknownV)}});
            MPoly Fc = ff.F.subst({{kParamT, MPoly::variable(kUnknownU)},
                                   {kParamS, MPoly::variable(kUnknownV)}});
            MPoly mu = MPoly::variable(kUnknownU), mv = MPoly::variable(kUnknownV);
            MPoly den = mu.pow(2).scaled(ff.A) + (mu * mv).scaled(Rat(2) * ff.B) +
                        mv.pow(2).scaled(ff.C);
            MPoly num = -(mu.pow(2) * Ec) - mu * mv * (Fc - MPoly(ff.B)) +
                        mv.pow(2).scaled(ff.C);
            p.a = RatFn(num, den);
            p.b = -(one + p.a) * u / v;
            p.c = v * (p.a - one) / u;
            p.d = -p.a;
            p.c1 = u; p.c2 = v;
            p.side_conditions.push_back(mu);
            p.side_conditions.push_back(mv);
            p.side_conditions.push_back(den.normalized());
            MPoly a_minus_one = (num - den).normalized(); // a != 1 splits off D2i
            if (a_minus_one.is_zero())
                throw InternalError("degenerate fundamental form in case D2ii");
            if (!a_minus_one.is_constant())
                p.side_conditions.push_back(a_minus_one);
            break;
        }
    }
    p.delta = p.a * p.d - p.b * p.c;
    check_involution_laws(p);
    return p;
}

std::vector<MPoly> fff_constraints(const FundamentalForm& ff, const PhiTemplate& phi) {
    RatFn c1 = phi.c1, c2 = phi.c2;
    auto at_c = [&](const MPoly& p) {
        std::map<std::string, RatFn> sub;
        for (auto& var : p.vars()) {
            if (var == kParamT)
                sub.emplace(var, c1);
            else if (var == kParamS)
                sub.emplace(var, c2);
            else
                throw InternalError("fff_constraints: unexpected variable " + var);
        }
        return compose(p, sub);
    };
    RatFn Ec = at_c(ff.E), Fc = at_c(ff.F), Gc = at_c(ff.G);
    RatFn A(ff.A), B(ff.B), C(ff.C);
    RatFn d2 = phi.delta * phi.delta;
    RatFn two(Rat(2));
    // E(c) d^2 = C c^2 + A d^2 - 2B c d, and the F/G analogues
    std::array<RatFn, 3> rels = {
        Ec * d2 - (C * phi.c * phi.c + A * phi.d * phi.d - two * B * phi.c * phi.d),
        Fc * d2 - (B * (phi.b * phi.c + phi.a * phi.d) - A * phi.b * phi.d -
                   C * phi.a * phi.c),
        Gc * d2 - (A * phi.b * phi.b - two * B * phi.a * phi.b + C * phi.a * phi.a)};
    std::vector<MPoly> out;
    for (auto& r : rels) {
        if (r.is_zero()) continue;
        MPoly e = r.num().normalized();
        if (e.is_constant()) continue; // cannot prune anything
        if (std::find(out.begin(), out.end(), e) == out.end()) out.push_back(e);
    }
    return out;
}

CandidateFrame build_frame(const Parametrization& P, const FundamentalForm& ff,
                           CaseId id) {
    CandidateFrame fr;
    fr.id = id;
    fr.phi = phi_template(id.kind, ff);

    Vec3Q n0 = P.origin_normal;
    if (is_zero(n0)) throw InternalError("build_frame: parametrization not prepared");
    // M columns: xt(0), xs(0), xt(0) x xs(0)
    std::map<std::string, Rat> o{{kParamT, Rat(0)}, {kParamS, Rat(0)}};
    Vec3Q xt0, xs0;
    for (int i = 0; i < 3; ++i) {
        xt0[i] = P.xt[i].eval(o);
        xs0[i] = P.xs[i].eval(o);
    }
    for (int i = 0; i < 3; ++i) {
        fr.M[i][0] = xt0[i];
        fr.M[i][1] = xs0[i];
        fr.M[i][2] = n0[i];
    }
    // inverse via adjugate
    const auto& m = fr.M;
    Rat det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
              m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
              m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    if (det.is_zero()) throw InternalError("build_frame: singular M after prepare");
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            int i1 = (i + 1) % 3, i2 = (i + 2) % 3;
            int j1 = (j + 1) % 3, j2 = (j + 2) % 3;
            // cofactor transpose
            fr.Minv[j][i] = (m[i1][j1] * m[i2][j2] - m[i1][j2] * m[i2][j1]) / det;
        }

    // L columns: xt(c)a + xs(c)c, xt(c)b + xs(c)d, det(Q)*Delta*(xt x xs)(c)
    std::array<RatFn, 3> xtc, xsc, crc;
    Vec3P cr = cross(P.xt, P.xs);
    for (int i = 0; i < 3; ++i) {
        xtc[i] = eval_at(P.xt[i], fr.phi.c1, fr.phi.c2);
        xsc[i] = eval_at(P.xs[i], fr.phi.c1, fr.phi.c2);
        crc[i] = eval_at(cr[i], fr.phi.c1, fr.phi.c2);
    }
    RatFn sgn(Rat(id.det_sign));
    for (int i = 0; i < 3; ++i) {
        fr.L[i][0] = xtc[i] * fr.phi.a + xsc[i] * fr.phi.c;
        fr.L[i][1] = xtc[i] * fr.phi.b + xsc[i] * fr.phi.d;
        fr.L[i][2] = sgn * fr.phi.delta * crc[i];
    }
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            RatFn acc;
            for (int k = 0; k < 3; ++k) acc += fr.L[i][k] * RatFn(fr.Minv[k][j]);
            fr.Q[i][j] = acc;
        }
    // b = x(c) - Q x(0)
    for (int i = 0; i < 3; ++i) {
        RatFn xc = eval_at(P.x[i], fr.phi.c1, fr.phi.c2);
        RatFn acc = xc;
        for (int j = 0; j < 3; ++j) acc -= fr.Q[i][j] * RatFn(P.origin[j]);
        fr.b[i] = acc;
    }
    return fr;
}

} // namespace surfsym
