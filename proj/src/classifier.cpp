#include "surfsym/classifier.hpp"

#include "surfsym/errors.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

namespace surfsym {

std::string kind_name(SymKind k) {
    switch (k) {
        case SymKind::Axial: return "axial";
        case SymKind::Planar: return "planar";
        case SymKind::Central: return "central";
    }
    return "?";
}

Scalar exact_scalar(const Rat& v) {
    Scalar s;
    s.exact = true;
    s.value = v;
    s.lo = s.hi = v;
    return s;
}

std::string Scalar::str(int digits) const {
    if (exact) return value.str();
    return "[" + lo.decimal(digits, false) + ", " + hi.decimal(digits, true) + "]";
}

namespace {

using Mat3 = std::array<std::array<Rat, 3>, 3>;
using Vec3 = std::array<Rat, 3>;

Rat det3(const Mat3& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

Mat3 mat_mul(const Mat3& a, const Mat3& b) {
    Mat3 r{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Rat acc(0);
            for (int k = 0; k < 3; ++k) acc += a[i][k] * b[k][j];
            r[i][j] = acc;
        }
    return r;
}

bool is_identity(const Mat3& m) {
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (m[i][j] != Rat(i == j ? 1 : 0)) return false;
    return true;
}

// scale an exact rational vector to primitive integers, first nonzero > 0
Vec3 primitive_vec(const Vec3& v, Rat* factor_out = nullptr) {
    mpz_class num_gcd(0), den_lcm(1);
    for (const Rat& c : v) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.den().get_mpz_t());
    }
    if (num_gcd == 0) throw InternalError("primitive_vec: zero vector");
    Rat f = Rat(den_lcm, num_gcd);
    Vec3 r{v[0] * f, v[1] * f, v[2] * f};
    for (const Rat& c : r) {
        if (c.is_zero()) continue;
        if (c.sign() < 0) {
            f = -f;
            for (auto& x : r) x = -x;
        }
        break;
    }
    if (factor_out) *factor_out = f;
    return r;
}

SVec3 exact_vec(const Vec3& v) {
    return {exact_scalar(v[0]), exact_scalar(v[1]), exact_scalar(v[2])};
}

Rat dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

bool on_element_exact(const SymmetryElement& el, const Vec3& p) {
    auto val = [](const Scalar& s) { return s.value; };
    switch (el.type) {
        case SymmetryElement::Type::Point:
            return p[0] == val(el.a[0]) && p[1] == val(el.a[1]) && p[2] == val(el.a[2]);
        case SymmetryElement::Type::Line: {
            Vec3 base{val(el.a[0]), val(el.a[1]), val(el.a[2])};
            Vec3 dir{val(el.d[0]), val(el.d[1]), val(el.d[2])};
            Vec3 w{p[0] - base[0], p[1] - base[1], p[2] - base[2]};
            Vec3 c = cross(w, dir);
            return is_zero(c);
        }
        case SymmetryElement::Type::Plane: {
            Vec3 n{val(el.a[0]), val(el.a[1]), val(el.a[2])};
            return dot(n, p) == el.offset.value;
        }
    }
    return false;
}

} // namespace

SymKind classify(const Mat3& Q) {
    Rat d = det3(Q);
    if (d == Rat(1)) return SymKind::Axial;
    if (d != Rat(-1)) throw InternalError("classify: det Q not in {+1,-1}");
    Mat3 qmi = Q;
    for (int i = 0; i < 3; ++i) qmi[i][i] -= Rat(1);
    return det3(qmi).is_zero() ? SymKind::Planar : SymKind::Central;
}

FixedLocus fixed_locus(const std::array<Rat, 4>& A, const std::array<Rat, 2>& c) {
    // (A - I) tau = -c
    Rat a11 = A[0] - Rat(1), a12 = A[1], a21 = A[2], a22 = A[3] - Rat(1);
    Rat det = a11 * a22 - a12 * a21;
    FixedLocus fl{};
    if (!det.is_zero()) {
        fl.type = FixedLocus::Type::Point;
        fl.t0 = (-c[0] * a22 + c[1] * a12) / det;
        fl.s0 = (-a11 * c[1] + a21 * c[0]) / det;
        return fl;
    }
    // rank <= 1: pick a nonzero row alpha*t + beta*s = gamma
    Rat alpha, beta, gamma;
    if (!a11.is_zero() || !a12.is_zero()) {
        alpha = a11; beta = a12; gamma = -c[0];
    } else if (!a21.is_zero() || !a22.is_zero()) {
        alpha = a21; beta = a22; gamma = -c[1];
    } else {
        throw InternalError("fixed_locus: phi is the identity");
    }
    fl.type = FixedLocus::Type::Line;
    if (!beta.is_zero()) {
        fl.pt = Rat(0); fl.ps = gamma / beta;
        fl.dt = Rat(1); fl.ds = -alpha / beta;
    } else {
        fl.pt = gamma / alpha; fl.ps = Rat(0);
        fl.dt = Rat(0); fl.ds = Rat(1);
    }
    return fl;
}

namespace {

// exact solution structure of (Q - I) x = -b
SymmetryElement element_from_exact(const Mat3& Q, const Vec3& b, SymKind kind) {
    // augmented rows
    std::array<std::array<Rat, 4>, 3> rows{};
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) rows[i][j] = Q[i][j] - Rat(i == j ? 1 : 0);
        rows[i][3] = -b[i];
    }
    // RREF
    int rank = 0;
    std::array<int, 3> pivot_col{-1, -1, -1};
    for (int col = 0; col < 3 && rank < 3; ++col) {
        int piv = -1;
        for (int r = rank; r < 3; ++r)
            if (!rows[r][col].is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(rows[rank], rows[piv]);
        Rat inv = rows[rank][col].inv();
        for (int j = col; j < 4; ++j) rows[rank][j] *= inv;
        for (int r = 0; r < 3; ++r) {
            if (r == rank || rows[r][col].is_zero()) continue;
            Rat f = rows[r][col];
            for (int j = col; j < 4; ++j) rows[r][j] -= f * rows[rank][j];
        }
        pivot_col[rank] = col;
        ++rank;
    }
    for (int r = rank; r < 3; ++r)
        if (!rows[r][3].is_zero())
            throw InternalError("element: inconsistent fixed-point system");

    SymmetryElement el{};
    if (rank == 3) {
        if (kind != SymKind::Central)
            throw VerificationFailed("fixed-point set is a point but kind is not central");
        el.type = SymmetryElement::Type::Point;
        el.a = exact_vec({rows[0][3], rows[1][3], rows[2][3]});
        return el;
    }
    if (rank == 2) {
        if (kind != SymKind::Axial)
            throw VerificationFailed("fixed-point set is a line but kind is not axial");
        el.type = SymmetryElement::Type::Line;
        int free_col = 3;
        for (int c = 0; c < 3; ++c)
            if (c != pivot_col[0] && c != pivot_col[1]) free_col = c;
        Vec3 base{Rat(0), Rat(0), Rat(0)}, dir{Rat(0), Rat(0), Rat(0)};
        dir[free_col] = Rat(1);
        for (int r = 0; r < 2; ++r) {
            base[pivot_col[r]] = rows[r][3];
            dir[pivot_col[r]] = -rows[r][free_col];
        }
        dir = primitive_vec(dir);
        // canonical base: foot of the perpendicular from the origin
        Rat t = dot(base, dir) / dot(dir, dir);
        for (int i = 0; i < 3; ++i) base[i] -= t * dir[i];
        el.a = exact_vec(base);
        el.d = exact_vec(dir);
        return el;
    }
    if (rank == 1) {
        if (kind != SymKind::Planar)
            throw VerificationFailed("fixed-point set is a plane but kind is not planar");
        el.type = SymmetryElement::Type::Plane;
        Vec3 n{rows[0][0], rows[0][1], rows[0][2]};
        Rat off = rows[0][3];
        Rat f;
        Vec3 np = primitive_vec(n, &f);
        el.a = exact_vec(np);
        el.offset = exact_scalar(off * f);
        return el;
    }
    throw VerificationFailed("fixed-point set is all of space (identity map)");
}

// exact cross-check of the element against the image of phi's fixed locus
void cross_check_element(const SymmetryElement& el, const FixedLocus& locus,
                         const Mat3& Q, const Vec3& b, SymKind kind,
                         const Parametrization& P) {
    auto surface_point = [&](const Rat& t, const Rat& s) {
        std::map<std::string, Rat> pt{{kParamT, t}, {kParamS, s}};
        return Vec3{P.x[0].eval(pt), P.x[1].eval(pt), P.x[2].eval(pt)};
    };
    auto normal_at = [&](const Rat& t, const Rat& s) {
        std::map<std::string, Rat> pt{{kParamT, t}, {kParamS, s}};
        Vec3 xt{P.xt[0].eval(pt), P.xt[1].eval(pt), P.xt[2].eval(pt)};
        Vec3 xs{P.xs[0].eval(pt), P.xs[1].eval(pt), P.xs[2].eval(pt)};
        return cross(xt, xs);
    };
    auto fixed_by_f = [&](const Vec3& p) {
        for (int i = 0; i < 3; ++i) {
            Rat img = b[i];
            for (int j = 0; j < 3; ++j) img += Q[i][j] * p[j];
            if (img != p[i]) return false;
        }
        return true;
    };

    std::vector<std::pair<Rat, Rat>> params;
    if (locus.type == FixedLocus::Type::Point) {
        params.emplace_back(locus.t0, locus.s0);
    } else {
        for (long w : {0L, 1L, 2L})
            params.emplace_back(locus.pt + locus.dt * Rat(w),
                                locus.ps + locus.ds * Rat(w));
    }
    std::vector<Vec3> imgs;
    for (auto& [t, s] : params) {
        Vec3 p = surface_point(t, s);
        if (!fixed_by_f(p))
            throw VerificationFailed("fixed-locus image point not fixed by the motion");
        if (!on_element_exact(el, p))
            throw VerificationFailed("fixed-locus image point off the symmetry element");
        imgs.push_back(p);
    }
    bool image_is_point = true;
    for (auto& p : imgs) image_is_point = image_is_point && p == imgs[0];
    // regular-point rules: the normal line completes the element
    for (size_t k = 0; k < params.size(); ++k) {
        Vec3 n = normal_at(params[k].first, params[k].second);
        if (is_zero(n)) continue; // singular point of the parametrization
        if (kind == SymKind::Axial && image_is_point) {
            Vec3 dir{el.d[0].value, el.d[1].value, el.d[2].value};
            if (!is_zero(cross(n, dir)))
                throw VerificationFailed("axis direction disagrees with the surface "
                                         "normal at the fixed point");
        }
        if (kind == SymKind::Planar) {
            Vec3 nrm{el.a[0].value, el.a[1].value, el.a[2].value};
            if (!dot(nrm, n).is_zero())
                throw VerificationFailed("mirror plane does not contain the surface "
                                         "normal at a fixed-locus point");
        }
        if (kind == SymKind::Central && !image_is_point)
            throw VerificationFailed("central symmetry with a non-point fixed image");
    }
}

// --- algebraic-root support --------------------------------------------------

QInterval box_at(const RatFn& f, const Root2D& root) {
    QInterval ui = root.u.is_exact() ? QInterval{*root.u.exact, *root.u.exact}
                                     : QInterval{root.u.lo, root.u.hi};
    QInterval vi = root.v.is_exact() ? QInterval{*root.v.exact, *root.v.exact}
                                     : QInterval{root.v.lo, root.v.hi};
    std::map<std::string, QInterval> box{{kUnknownU, ui}, {kUnknownV, vi}};
    QInterval num = interval_eval(f.num(), box);
    QInterval den = interval_eval(f.den(), box);
    if (den.contains_zero())
        throw InternalError("scalar_at: denominator interval straddles zero");
    // num/den with outward rounding
    Rat c1 = num.lo / den.lo, c2 = num.lo / den.hi, c3 = num.hi / den.lo,
        c4 = num.hi / den.hi;
    return {std::min(std::min(c1, c2), std::min(c3, c4)),
            std::max(std::max(c1, c2), std::max(c3, c4))};
}

// true iff the rational function vanishes at the root (exact decision)
bool ratfn_vanishes(const RatFn& f, const Root2D& root) {
    return vanishes_at(f.num(), root);
}

} // namespace

Scalar scalar_at(const RatFn& f, const Root2D& root, int digits) {
    if (root.is_exact()) {
        Rat val = f.eval({{kUnknownU, *root.u.exact}, {kUnknownV, *root.v.exact}});
        return exact_scalar(val);
    }
    Rat want = Rat(1, 2).pow(static_cast<unsigned long>(4 * (digits + 2)));
    Root2D r = root;
    while (true) {
        bool den_ok = true;
        QInterval k{Rat(0), Rat(0)};
        try {
            k = box_at(f, r);
        } catch (const InternalError&) {
            den_ok = false;
        }
        if (den_ok && k.width() <= want) {
            Scalar s;
            s.exact = false;
            s.lo = k.lo;
            s.hi = k.hi;
            s.value = (k.lo + k.hi) / Rat(2);
            return s;
        }
        Rat wu = r.u.is_exact() ? Rat(0) : r.u.width();
        Rat wv = r.v.is_exact() ? Rat(0) : r.v.width();
        Rat target = std::max(wu, wv) / Rat(2);
        if (target.is_zero()) throw InternalError("scalar_at: cannot refine exact root");
        r = refine_root(r, target);
    }
}

namespace {

// symbolic Gauss on (Q - I | -b) with exact zero tests at the root
SymmetryElement element_from_algebraic(const CandidateFrame& fr, const Root2D& root,
                                       SymKind kind, int digits) {
    std::array<std::array<RatFn, 4>, 3> rows;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j)
            rows[i][j] = fr.Q[i][j] - RatFn(Rat(i == j ? 1 : 0));
        rows[i][3] = -fr.b[i];
    }
    int rank = 0;
    std::array<int, 3> pivot_col{-1, -1, -1};
    for (int col = 0; col < 3 && rank < 3; ++col) {
        int piv = -1;
        for (int r = rank; r < 3; ++r) {
            if (rows[r][col].is_zero()) continue;
            if (!ratfn_vanishes(rows[r][col], root)) {
                piv = r;
                break;
            }
        }
        if (piv < 0) continue;
        std::swap(rows[rank], rows[piv]);
        RatFn inv = RatFn(Rat(1)) / rows[rank][col];
        for (int j = col; j < 4; ++j) rows[rank][j] = rows[rank][j] * inv;
        for (int r = 0; r < 3; ++r) {
            if (r == rank) continue;
            if (rows[r][col].is_zero()) continue;
            RatFn f = rows[r][col];
            for (int j = col; j < 4; ++j) rows[r][j] = rows[r][j] - f * rows[rank][j];
        }
        pivot_col[rank] = col;
        ++rank;
    }
    for (int r = rank; r < 3; ++r)
        if (!rows[r][3].is_zero() && !ratfn_vanishes(rows[r][3], root))
            throw InternalError("element: inconsistent fixed-point system");

    SymmetryElement el{};
    auto sc = [&](const RatFn& f) { return scalar_at(f, root, digits); };
    if (rank == 3) {
        if (kind != SymKind::Central)
            throw VerificationFailed("fixed-point set is a point but kind is not central");
        el.type = SymmetryElement::Type::Point;
        el.a = {sc(rows[0][3]), sc(rows[1][3]), sc(rows[2][3])};
        return el;
    }
    if (rank == 2) {
        if (kind != SymKind::Axial)
            throw VerificationFailed("fixed-point set is a line but kind is not axial");
        el.type = SymmetryElement::Type::Line;
        int free_col = 3;
        for (int c = 0; c < 3; ++c)
            if (c != pivot_col[0] && c != pivot_col[1]) free_col = c;
        std::array<RatFn, 3> base, dir;
        dir[free_col] = RatFn(Rat(1));
        for (int r = 0; r < 2; ++r) {
            base[pivot_col[r]] = rows[r][3];
            dir[pivot_col[r]] = -rows[r][free_col];
        }
        el.a = {sc(base[0]), sc(base[1]), sc(base[2])};
        el.d = {sc(dir[0]), sc(dir[1]), sc(dir[2])};
        return el;
    }
    if (rank == 1) {
        if (kind != SymKind::Planar)
            throw VerificationFailed("fixed-point set is a plane but kind is not planar");
        el.type = SymmetryElement::Type::Plane;
        el.a = {sc(rows[0][0]), sc(rows[0][1]), sc(rows[0][2])};
        el.offset = sc(rows[0][3]);
        return el;
    }
    throw VerificationFailed("fixed-point set is all of space (identity map)");
}

} // namespace

Involution instantiate(std::shared_ptr<const CandidateFrame> frame, const Root2D& root,
                       const Parametrization& P, int digits) {
    if (!root.certified)
        throw InternalError("instantiate requires a solver-certified root");
    const CandidateFrame& fr = *frame;
    Involution inv;
    inv.case_id = fr.id;
    inv.frame = frame;
    inv.root = root;
    inv.exact = root.is_exact();

    if (inv.exact) {
        std::map<std::string, Rat> at{{kUnknownU, *root.u.exact},
                                      {kUnknownV, *root.v.exact}};
        inv.phiA = {fr.phi.a.eval(at), fr.phi.b.eval(at), fr.phi.c.eval(at),
                    fr.phi.d.eval(at)};
        inv.phiC = {fr.phi.c1.eval(at), fr.phi.c2.eval(at)};
        const auto& A = inv.phiA;
        const auto& cc = inv.phiC;
        // phi is an involution: A^2 = I and (A + I)c = 0
        if (A[0] * A[0] + A[1] * A[2] != Rat(1) || A[3] * A[3] + A[1] * A[2] != Rat(1) ||
            !(A[1] * (A[0] + A[3])).is_zero() || !(A[2] * (A[0] + A[3])).is_zero())
            throw VerificationFailed("phi is not an involution at the root");
        if (!((A[0] + Rat(1)) * cc[0] + A[1] * cc[1]).is_zero() ||
            !(A[2] * cc[0] + (A[3] + Rat(1)) * cc[1]).is_zero())
            throw VerificationFailed("phi shift not in ker(A + I)");

        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) inv.Q[i][j] = fr.Q[i][j].eval(at);
            inv.b[i] = fr.b[i].eval(at);
        }
        const Mat3& Q = inv.Q;
        // orthogonal involution with the requested orientation
        Mat3 qt{};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) qt[i][j] = Q[j][i];
        if (!is_identity(mat_mul(qt, Q)))
            throw VerificationFailed("Q is not orthogonal at the root");
        if (!is_identity(mat_mul(Q, Q)))
            throw VerificationFailed("Q is not an involution at the root");
        if (det3(Q) != Rat(fr.id.det_sign))
            throw VerificationFailed("det Q disagrees with the searched orientation");
        for (int i = 0; i < 3; ++i) {
            Rat acc = inv.b[i];
            for (int j = 0; j < 3; ++j) acc += Q[i][j] * inv.b[j];
            if (!acc.is_zero())
                throw VerificationFailed("b is not in ker(Q + I)");
        }
        bool trivial = is_identity(Q);
        for (const Rat& c : inv.b) trivial = trivial && c.is_zero();
        if (trivial)
            throw VerificationFailed("trivial identity symmetry (improper input?)");

        // full coefficientwise identity Q x(t,s) + b = x(phi(t,s))
        MPoly t = MPoly::variable(kParamT), s = MPoly::variable(kParamS);
        MPoly phit = t.scaled(A[0]) + s.scaled(A[1]) + MPoly(cc[0]);
        MPoly phis = t.scaled(A[2]) + s.scaled(A[3]) + MPoly(cc[1]);
        for (int i = 0; i < 3; ++i) {
            MPoly lhs{inv.b[i]};
            for (int j = 0; j < 3; ++j) lhs += P.comp(j).scaled(Q[i][j]);
            MPoly rhs = P.comp(i).subst({{kParamT, phit}, {kParamS, phis}});
            if (lhs != rhs)
                throw VerificationFailed("coefficientwise identity fails at the root");
        }

        inv.kind = classify(Q);
        FixedLocus locus = fixed_locus(inv.phiA, inv.phiC);
        inv.element = element_from_exact(Q, inv.b, inv.kind);
        cross_check_element(inv.element, locus, Q, inv.b, inv.kind, P);
        return inv;
    }

    // algebraic root: template laws hold symbolically; the coefficientwise
    // identity was certified equation-by-equation by the solver. Verify the
    // orthogonality/involution laws by exact vanishing tests of their
    // rational-function numerators at the root.
    auto must_vanish = [&](const RatFn& f, const char* what) {
        if (!f.is_zero() && !ratfn_vanishes(f, root))
            throw VerificationFailed(std::string(what) + " fails at the algebraic root");
    };
    for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j) {
            RatFn acc_orth, acc_inv;
            for (int k = 0; k < 3; ++k) {
                acc_orth += fr.Q[k][i] * fr.Q[k][j];
                acc_inv += fr.Q[i][k] * fr.Q[k][j];
            }
            RatFn delta(Rat(i == j ? 1 : 0));
            must_vanish(acc_orth - delta, "orthogonality");
            must_vanish(acc_inv - delta, "involution law");
        }
    for (int i = 0; i < 3; ++i) {
        RatFn acc = fr.b[i];
        for (int j = 0; j < 3; ++j) acc += fr.Q[i][j] * fr.b[j];
        must_vanish(acc, "ker(Q+I) membership");
    }
    // det Q = sign (rational-function identity checked at the root)
    RatFn det;
    {
        const auto& q = fr.Q;
        det = q[0][0] * (q[1][1] * q[2][2] - q[1][2] * q[2][1]) -
              q[0][1] * (q[1][0] * q[2][2] - q[1][2] * q[2][0]) +
              q[0][2] * (q[1][0] * q[2][1] - q[1][1] * q[2][0]);
    }
    must_vanish(det - RatFn(Rat(fr.id.det_sign)), "orientation");
    if (fr.id.det_sign > 0) {
        // reject the identity: some entry of Q - I must be nonzero
        bool nontrivial = false;
        for (int i = 0; i < 3 && !nontrivial; ++i)
            for (int j = 0; j < 3 && !nontrivial; ++j) {
                RatFn e = fr.Q[i][j] - RatFn(Rat(i == j ? 1 : 0));
                if (!e.is_zero() && !ratfn_vanishes(e, root)) nontrivial = true;
            }
        for (int i = 0; i < 3 && !nontrivial; ++i)
            if (!fr.b[i].is_zero() && !ratfn_vanishes(fr.b[i], root)) nontrivial = true;
        if (!nontrivial)
            throw VerificationFailed("trivial identity symmetry (improper input?)");
        inv.kind = SymKind::Axial;
    } else {
        // central iff det(Q - I) != 0
        RatFn dmi;
        {
            std::array<std::array<RatFn, 3>, 3> q;
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j)
                    q[i][j] = fr.Q[i][j] - RatFn(Rat(i == j ? 1 : 0));
            dmi = q[0][0] * (q[1][1] * q[2][2] - q[1][2] * q[2][1]) -
                  q[0][1] * (q[1][0] * q[2][2] - q[1][2] * q[2][0]) +
                  q[0][2] * (q[1][0] * q[2][1] - q[1][1] * q[2][0]);
        }
        bool dmi_zero = dmi.is_zero() || ratfn_vanishes(dmi, root);
        inv.kind = dmi_zero ? SymKind::Planar : SymKind::Central;
    }
    inv.element = element_from_algebraic(fr, root, inv.kind, digits);
    return inv;
}

// ---------------------------------------------------------------------------
// aggregation & pipeline

namespace {

bool same_exact_motion(const Involution& a, const Involution& b) {
    if (!a.exact || !b.exact) return false;
    return a.Q == b.Q && a.b == b.b;
}

bool element_equal_exact(const SymmetryElement& a, const SymmetryElement& b) {
    if (a.type != b.type) return false;
    auto veq = [](const SVec3& x, const SVec3& y) {
        for (int i = 0; i < 3; ++i) {
            if (!x[i].exact || !y[i].exact) return false;
            if (x[i].value != y[i].value) return false;
        }
        return true;
    };
    switch (a.type) {
        case SymmetryElement::Type::Point: return veq(a.a, b.a);
        case SymmetryElement::Type::Line: return veq(a.a, b.a) && veq(a.d, b.d);
        case SymmetryElement::Type::Plane:
            return veq(a.a, b.a) && a.offset.exact && b.offset.exact &&
                   a.offset.value == b.offset.value;
    }
    return false;
}

std::optional<SymmetryElement> intersect_planes(const SymmetryElement& p1,
                                                const SymmetryElement& p2) {
    Vec3 n1{p1.a[0].value, p1.a[1].value, p1.a[2].value};
    Vec3 n2{p2.a[0].value, p2.a[1].value, p2.a[2].value};
    Vec3 dir = cross(n1, n2);
    if (is_zero(dir)) return std::nullopt;
    // solve n1.x = d1, n2.x = d2, dir.x = 0
    Mat3 m{};
    m[0] = {n1[0], n1[1], n1[2]};
    m[1] = {n2[0], n2[1], n2[2]};
    m[2] = {dir[0], dir[1], dir[2]};
    Rat det = det3(m);
    if (det.is_zero()) return std::nullopt;
    Vec3 rhs{p1.offset.value, p2.offset.value, Rat(0)};
    Vec3 x{};
    for (int col = 0; col < 3; ++col) {
        Mat3 mm = m;
        for (int r = 0; r < 3; ++r) mm[r][col] = rhs[r];
        x[col] = det3(mm) / det;
    }
    SymmetryElement line{};
    line.type = SymmetryElement::Type::Line;
    line.d = exact_vec(primitive_vec(dir));
    line.a = exact_vec(x);
    return line;
}

// rational points on the witness curve, used to sample the infinite family
std::vector<Root2D> witness_sample_points(const MPoly& witness) {
    static const std::vector<Rat> grid = [] {
        std::vector<Rat> g{Rat(0), Rat(1), Rat(-1), Rat(2), Rat(-2), Rat(1, 2),
                           Rat(-1, 2), Rat(3), Rat(-3), Rat(1, 3), Rat(-1, 3),
                           Rat(3, 5), Rat(-3, 5), Rat(4, 5), Rat(-4, 5)};
        return g;
    }();
    std::vector<Root2D> pts;
    for (const Rat& q : grid) {
        MPoly fiber = witness.subst({{kUnknownU, MPoly(q)}});
        if (fiber.is_zero()) {
            // vertical line inside the family
            for (const Rat& w : {Rat(0), Rat(1)})
                pts.push_back(Root2D{exact_coord(q, kUnknownU),
                                     exact_coord(w, kUnknownV), false});
            continue;
        }
        if (fiber.is_constant()) continue;
        for (const RootInterval& ri : isolate_real_roots(fiber)) {
            if (!ri.is_exact()) continue;
            pts.push_back(Root2D{exact_coord(q, kUnknownU),
                                 exact_coord(*ri.exact, kUnknownV), false});
        }
        if (pts.size() >= 8) break;
    }
    return pts;
}

} // namespace

SymmetryReport aggregate(const Parametrization& P, const AnalyzeOptions& opt,
                         std::vector<CaseOutcome> outcomes,
                         std::vector<Involution> involutions,
                         const std::vector<WitnessFamily>& witnesses) {
    SymmetryReport rep;
    rep.surface = P;
    rep.seed = opt.seed;
    rep.digits = opt.digits;

    // dedup by exact (Q, b)
    std::vector<Involution> dedup;
    for (const Involution& inv : involutions) {
        bool dup = false;
        for (const Involution& have : dedup) dup = dup || same_exact_motion(have, inv);
        if (!dup) dedup.push_back(inv);
    }
    int centrals = 0;
    for (const Involution& inv : dedup) centrals += inv.kind == SymKind::Central;
    if (centrals > 1)
        throw CentralNotUnique("found " + std::to_string(centrals) +
                               " central inversions; the symmetry center of a "
                               "non-cylindrical surface is unique (violated "
                               "precondition?)");
    std::stable_sort(dedup.begin(), dedup.end(),
                     [](const Involution& a, const Involution& b) {
                         int ia = a.case_id.order_index(), ib = b.case_id.order_index();
                         if (ia != ib) return ia < ib;
                         if (a.root.approx_u() != b.root.approx_u())
                             return a.root.approx_u() < b.root.approx_u();
                         return a.root.approx_v() < b.root.approx_v();
                     });
    rep.involutions = std::move(dedup);
    rep.outcomes = std::move(outcomes);

    if (!witnesses.empty()) {
        RevolutionInfo rev;
        rev.witness_case = witnesses.front().id;
        rev.witness = witnesses.front().witness;
        // rule 1: the unique axial line among the finitely many direct involutions
        std::vector<const SymmetryElement*> axial;
        for (const Involution& inv : rep.involutions)
            if (inv.kind == SymKind::Axial && inv.exact) {
                bool dup = false;
                for (auto* e : axial) dup = dup || element_equal_exact(*e, inv.element);
                if (!dup) axial.push_back(&inv.element);
            }
        if (axial.size() == 1) {
            rev.axis_known = true;
            rev.axis = *axial.front();
        } else {
            // rule 2: intersect two distinct planes sampled from the family
            std::vector<SymmetryElement> planes;
            for (const WitnessFamily& wf : witnesses) {
                for (const Root2D& pt : witness_sample_points(wf.witness)) {
                    Root2D cand = pt;
                    bool ok = true;
                    for (const MPoly& sc : wf.side_conditions)
                        if (vanishes_at(sc, cand)) {
                            ok = false;
                            break;
                        }
                    if (!ok) continue;
                    cand.certified = true; // witness divides every equation
                    try {
                        Involution sample = instantiate(wf.frame, cand, P, opt.digits);
                        if (sample.kind == SymKind::Planar) {
                            bool dup = false;
                            for (auto& e : planes)
                                dup = dup || element_equal_exact(e, sample.element);
                            if (!dup) planes.push_back(sample.element);
                        }
                    } catch (const VerificationFailed&) {
                        continue;
                    }
                    if (planes.size() >= 2) break;
                }
                if (planes.size() >= 2) break;
            }
            if (planes.size() >= 2) {
                auto line = intersect_planes(planes[0], planes[1]);
                if (line) {
                    rev.axis_known = true;
                    rev.axis = *line;
                }
            }
        }
        rep.revolution = rev;
    }
    return rep;
}

SymmetryReport analyze_surface(const Parametrization& raw, const AnalyzeOptions& opt) {
    Parametrization P = prepare(raw, opt.seed);
    if (plane_check(P))
        throw PlaneInput("the parametrized surface is a plane; symmetry detection "
                         "requires a non-planar surface");
    FundamentalForm ff = fundamental_form(P);

    std::vector<CaseOutcome> outcomes;
    std::vector<Involution> involutions;
    std::vector<WitnessFamily> witnesses;

    for (const CaseId& id : CaseId::all()) {
        if (opt.single_case && !(id == *opt.single_case)) continue;
        if (opt.only == AnalyzeOptions::Only::Direct && id.det_sign < 0) continue;
        if (opt.only == AnalyzeOptions::Only::Opposite && id.det_sign > 0) continue;
        CaseOutcome oc;
        oc.id = id;
        auto t0 = std::chrono::steady_clock::now();
        try {
            auto frame = std::make_shared<const CandidateFrame>(build_frame(P, ff, id));
            PolySystem sys = assemble(P, *frame, ff);
            SolutionSet sol = solve_real(sys);
            switch (sol.kind) {
                case SolutionSet::Kind::Empty:
                    oc.kind = CaseOutcome::Kind::Empty;
                    break;
                case SolutionSet::Kind::Finite:
                    oc.kind = CaseOutcome::Kind::Finite;
                    break;
                case SolutionSet::Kind::PositiveDimensional:
                    oc.kind = CaseOutcome::Kind::PositiveDimensional;
                    witnesses.push_back(WitnessFamily{id, sol.witness, frame,
                                                      sys.side_conditions});
                    break;
            }
            oc.roots = static_cast<int>(sol.roots.size());
            for (const Root2D& r : sol.roots) {
                try {
                    involutions.push_back(instantiate(frame, r, P, opt.digits));
                    ++oc.involutions;
                } catch (const VerificationFailed& e) {
                    if (!oc.note.empty()) oc.note += "; ";
                    oc.note += e.what();
                }
            }
        } catch (const VerificationFailed& e) {
            oc.kind = CaseOutcome::Kind::Failed;
            oc.note = e.what();
        } catch (const EliminationDegenerate& e) {
            oc.kind = CaseOutcome::Kind::Failed;
            oc.note = e.what();
        }
        auto t1 = std::chrono::steady_clock::now();
        oc.millis = std::chrono::duration<double, std::milli>(t1 - t0).count();
        outcomes.push_back(std::move(oc));
    }
    return aggregate(P, opt, std::move(outcomes), std::move(involutions), witnesses);
}

} // namespace surfsym
