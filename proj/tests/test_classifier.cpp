#include "helpers.hpp"
#include "surfsym/errors.hpp"

#include <doctest.h>

using namespace surfsym;
using namespace surfsym::testing;

namespace {

std::array<std::array<Rat, 3>, 3> diag(long a, long b, long c) {
    std::array<std::array<Rat, 3>, 3> m{};
    m[0][0] = Rat(a);
    m[1][1] = Rat(b);
    m[2][2] = Rat(c);
    return m;
}

const Involution* find_planar(const SymmetryReport& rep, const V3& normal) {
    for (const Involution& inv : rep.involutions) {
        if (inv.kind != SymKind::Planar || !inv.exact) continue;
        const auto& a = inv.element.a;
        if (a[0].value == normal[0] && a[1].value == normal[1] && a[2].value == normal[2])
            return &inv;
    }
    return nullptr;
}

const Involution* find_axial(const SymmetryReport& rep, const V3& dir) {
    for (const Involution& inv : rep.involutions) {
        if (inv.kind != SymKind::Axial || !inv.exact) continue;
        const auto& d = inv.element.d;
        if (d[0].value == dir[0] && d[1].value == dir[1] && d[2].value == dir[2])
            return &inv;
    }
    return nullptr;
}

} // namespace

TEST_CASE("classification by det and det(Q - I)") {
    CHECK(classify(diag(-1, -1, -1)) == SymKind::Central);
    CHECK(classify(diag(1, -1, 1)) == SymKind::Planar);
    CHECK(classify(diag(-1, -1, 1)) == SymKind::Axial);
    CHECK(classify(diag(-1, 1, 1)) == SymKind::Planar);
    CHECK_THROWS(classify(diag(2, 1, 1)));
}

TEST_CASE("fixed locus of the plane involution") {
    // case A: one fixed point c/2
    FixedLocus a = fixed_locus({Rat(-1), Rat(0), Rat(0), Rat(-1)}, {Rat(3), Rat(-1)});
    CHECK(a.type == FixedLocus::Type::Point);
    CHECK(a.t0 == Rat(3, 2));
    CHECK(a.s0 == Rat(-1, 2));
    // case B with b = 0: the line s = c2/2
    FixedLocus b = fixed_locus({Rat(1), Rat(0), Rat(0), Rat(-1)}, {Rat(0), Rat(3)});
    CHECK(b.type == FixedLocus::Type::Line);
    CHECK(b.ps == Rat(3, 2));
    CHECK(b.ds == Rat(0));
    CHECK(b.dt == Rat(1));
    // case C: line t = (b/2) s + c1/2
    FixedLocus c = fixed_locus({Rat(-1), Rat(4), Rat(0), Rat(1)}, {Rat(6), Rat(0)});
    CHECK(c.type == FixedLocus::Type::Line);
    // at s = 0: t = 3; direction (dt, ds) proportional to (2, 1)
    CHECK(c.pt + c.dt * ((Rat(0) - c.ps) / c.ds) == Rat(3));
    CHECK(c.dt * Rat(1) - c.ds * Rat(2) == Rat(0));
    // case D with a = 0, c = -1: line t = -s
    FixedLocus d = fixed_locus({Rat(0), Rat(-1), Rat(-1), Rat(0)}, {Rat(0), Rat(0)});
    CHECK(d.type == FixedLocus::Type::Line);
    CHECK(d.pt == Rat(0));
    CHECK(d.dt + d.ds == Rat(0)); // direction (1, -1)
}

TEST_CASE("Enneper elements are the pinned axes and planes") {
    SymmetryReport rep = analyze_surface(enneper(), AnalyzeOptions{});
    REQUIRE(rep.involutions.size() == 5);
    const Involution* axz = find_axial(rep, {Rat(0), Rat(0), Rat(1)});
    REQUIRE(axz);
    CHECK(axz->case_id.kind == CaseKind::A);
    CHECK(axz->element.a[0].value == Rat(0));
    CHECK(axz->element.a[1].value == Rat(0));
    CHECK(axz->element.a[2].value == Rat(0));
    CHECK(axz->Q == diag(-1, -1, 1));
    CHECK(find_axial(rep, {Rat(1), Rat(1), Rat(0)}));
    CHECK(find_axial(rep, {Rat(1), Rat(-1), Rat(0)}));
    const Involution* px = find_planar(rep, {Rat(1), Rat(0), Rat(0)});
    REQUIRE(px);
    CHECK(px->element.offset.value == Rat(0));
    CHECK(px->Q == diag(-1, 1, 1));
    CHECK(find_planar(rep, {Rat(0), Rat(1), Rat(0)}));
    CHECK_FALSE(rep.revolution.has_value());
    for (const Involution& inv : rep.involutions) CHECK(inv.exact);
}

TEST_CASE("paraboloid report: revolution flag and axis") {
    SymmetryReport rep = analyze_surface(circular_paraboloid(), AnalyzeOptions{});
    REQUIRE(rep.involutions.size() == 3);
    REQUIRE(rep.revolution.has_value());
    CHECK(rep.revolution->witness_case.kind == CaseKind::D1);
    CHECK(rep.revolution->witness ==
          MPoly::variable("u").pow(2) + MPoly::variable("v").pow(2) - MPoly(1));
    REQUIRE(rep.revolution->axis_known);
    CHECK(rep.revolution->axis.type == SymmetryElement::Type::Line);
    CHECK(rep.revolution->axis.d[0].value == Rat(0));
    CHECK(rep.revolution->axis.d[1].value == Rat(0));
    CHECK(rep.revolution->axis.d[2].value == Rat(1));
}

TEST_CASE("every reported involution satisfies the involution laws exactly") {
    for (const Parametrization& raw :
         {enneper(), circular_paraboloid(), hyperbolic_paraboloid()}) {
        SymmetryReport rep = analyze_surface(raw, AnalyzeOptions{});
        for (const Involution& inv : rep.involutions) {
            REQUIRE(inv.exact);
            // Q^T Q = I, Q^2 = I, (Q+I) b = 0
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) {
                    Rat dot(0), sq(0);
                    for (int k = 0; k < 3; ++k) {
                        dot += inv.Q[k][i] * inv.Q[k][j];
                        sq += inv.Q[i][k] * inv.Q[k][j];
                    }
                    CHECK(dot == Rat(i == j ? 1 : 0));
                    CHECK(sq == Rat(i == j ? 1 : 0));
                }
            for (int i = 0; i < 3; ++i) {
                Rat acc = inv.b[i];
                for (int j = 0; j < 3; ++j) acc += inv.Q[i][j] * inv.b[j];
                CHECK(acc == Rat(0));
            }
            // phi involution
            const auto& A = inv.phiA;
            CHECK(A[0] * A[0] + A[1] * A[2] == Rat(1));
            CHECK((A[0] + A[3]) * A[1] == Rat(0));
            // kind consistent with orientation
            if (inv.kind == SymKind::Axial) CHECK(inv.case_id.det_sign == 1);
            if (inv.kind != SymKind::Axial) CHECK(inv.case_id.det_sign == -1);
        }
    }
}

TEST_CASE("element points are fixed by the motion") {
    SymmetryReport rep = analyze_surface(conjugated(enneper(), rot_z_345(),
                                                    {Rat(1), Rat(-2), Rat(3)}),
                                         AnalyzeOptions{});
    REQUIRE(rep.involutions.size() == 5);
    auto fixed = [](const Involution& inv, const V3& p) {
        for (int i = 0; i < 3; ++i) {
            Rat img = inv.b[i];
            for (int j = 0; j < 3; ++j) img += inv.Q[i][j] * p[j];
            if (img != p[i]) return false;
        }
        return true;
    };
    for (const Involution& inv : rep.involutions) {
        REQUIRE(inv.exact);
        switch (inv.element.type) {
            case SymmetryElement::Type::Point: {
                V3 p{inv.element.a[0].value, inv.element.a[1].value,
                     inv.element.a[2].value};
                CHECK(fixed(inv, p));
                break;
            }
            case SymmetryElement::Type::Line: {
                V3 p{inv.element.a[0].value, inv.element.a[1].value,
                     inv.element.a[2].value};
                V3 q{p[0] + inv.element.d[0].value, p[1] + inv.element.d[1].value,
                     p[2] + inv.element.d[2].value};
                CHECK(fixed(inv, p));
                CHECK(fixed(inv, q));
                break;
            }
            case SymmetryElement::Type::Plane: {
                // two independent points of n.x = off
                V3 n{inv.element.a[0].value, inv.element.a[1].value,
                     inv.element.a[2].value};
                Rat off = inv.element.offset.value;
                Rat n2 = n[0] * n[0] + n[1] * n[1] + n[2] * n[2];
                V3 p{n[0] * off / n2, n[1] * off / n2, n[2] * off / n2};
                CHECK(fixed(inv, p));
                // p + any vector orthogonal to n
                V3 t = !n[0].is_zero() || !n[1].is_zero()
                           ? V3{-n[1], n[0], Rat(0)}
                           : V3{Rat(1), Rat(0), Rat(0)};
                V3 q{p[0] + t[0], p[1] + t[1], p[2] + t[2]};
                CHECK(fixed(inv, q));
                break;
            }
        }
    }
}

TEST_CASE("scalar_at certifies enclosures") {
    // root of u^2 - 3 paired with exact v
    auto iso = isolate_real_roots(MPoly::variable("u").pow(2) - MPoly(3));
    REQUIRE(iso.size() == 2);
    Root2D r{iso[1], RootInterval{MPoly::variable("v") - MPoly(2), Rat(2), Rat(2), Rat(2)},
             true};
    RatFn f = RatFn(MPoly::variable("u") * MPoly::variable("v")); // 2 sqrt 3
    Scalar s = scalar_at(f, r, 12);
    CHECK_FALSE(s.exact);
    CHECK(s.lo < s.hi);
    CHECK(s.hi - s.lo < Rat(1, 1000000));
    CHECK(s.lo * s.lo < Rat(12));
    CHECK(s.hi * s.hi > Rat(12));
}
