#include "helpers.hpp"

#include <doctest.h>

using namespace surfsym;
using namespace surfsym::testing;

namespace {

FundamentalForm parab_ff() { return fundamental_form(prepare(circular_paraboloid(), 0)); }

void check_involution_laws(const PhiTemplate& p) {
    RatFn one(Rat(1));
    CHECK(p.a * p.a + p.b * p.c == one);
    CHECK(p.d * p.d + p.b * p.c == one);
    CHECK((p.b * (p.a + p.d)).is_zero());
    CHECK((p.c * (p.a + p.d)).is_zero());
    CHECK(((p.a + one) * p.c1 + p.b * p.c2).is_zero());
    CHECK((p.c * p.c1 + (p.d + one) * p.c2).is_zero());
}

} // namespace

TEST_CASE("phi templates satisfy the involution laws symbolically") {
    FundamentalForm ff = parab_ff();
    for (CaseKind k : {CaseKind::A, CaseKind::B, CaseKind::C, CaseKind::D1,
                       CaseKind::D2i, CaseKind::D2ii}) {
        PhiTemplate p = phi_template(k, ff);
        check_involution_laws(p);
        // det A: +1 for case A, -1 otherwise
        CHECK(p.delta == RatFn(Rat(k == CaseKind::A ? 1 : -1)));
    }
}

TEST_CASE("case A template shape") {
    PhiTemplate p = phi_template(CaseKind::A, parab_ff());
    CHECK(p.a == RatFn(Rat(-1)));
    CHECK(p.d == RatFn(Rat(-1)));
    CHECK(p.b.is_zero());
    CHECK(p.c.is_zero());
    CHECK(p.c1 == RatFn(MPoly::variable("u")));
    CHECK(p.c2 == RatFn(MPoly::variable("v")));
    CHECK(p.side_conditions.empty());
}

TEST_CASE("case D2ii: the eliminated entry for the paraboloid") {
    // with A = 1, B = 0, C = 1:
    // a = (-u^2 E(u,v) - u v F(u,v) + v^2) / (u^2 + v^2)
    FundamentalForm ff = parab_ff();
    PhiTemplate p = phi_template(CaseKind::D2ii, ff);
    MPoly u = MPoly::variable("u"), v = MPoly::variable("v");
    MPoly Ec = ff.E.subst({{"t", u}, {"s", v}});
    MPoly Fc = ff.F.subst({{"t", u}, {"s", v}});
    RatFn expect(-(u.pow(2) * Ec) - u * v * Fc + v.pow(2), u.pow(2) + v.pow(2));
    CHECK(p.a == expect);
    CHECK(p.d == -expect);
    // side conditions include u, v and the positive-definite denominator
    CHECK(p.side_conditions.size() >= 3);
}

TEST_CASE("fff constraints reproduce the per-case relations") {
    FundamentalForm ff = fundamental_form(prepare(enneper(), 0));
    MPoly u = MPoly::variable("u"), v = MPoly::variable("v");

    // case A on a non-isothermal surface: E(c)-A, F(c)-B, G(c)-C, c = (u, v)
    {
        FundamentalForm hf = fundamental_form(prepare(hyperbolic_paraboloid(), 0));
        auto cs = fff_constraints(hf, phi_template(CaseKind::A, hf));
        MPoly e1 = (hf.E.subst({{"t", u}, {"s", v}}) - MPoly(hf.A)).normalized();
        MPoly e2 = (hf.F.subst({{"t", u}, {"s", v}}) - MPoly(hf.B)).normalized();
        MPoly e3 = (hf.G.subst({{"t", u}, {"s", v}}) - MPoly(hf.C)).normalized();
        REQUIRE(cs.size() == 3);
        CHECK(cs[0] == e1);
        CHECK(cs[1] == e2);
        CHECK(cs[2] == e3);
    }
    // the Enneper parametrization is isothermal (E = G, F = 0), so its case-A
    // relations collapse to a single pruning equation
    {
        auto cs = fff_constraints(ff, phi_template(CaseKind::A, ff));
        CHECK(cs.size() == 1);
        MPoly e1 = (ff.E.subst({{"t", u}, {"s", v}}) - MPoly(ff.A)).normalized();
        CHECK(cs[0] == e1);
    }
    // case C with c = (v, 0), b = u: F(c) + A u + B and G(c) - A u^2 - 2 B u - C
    {
        auto cs = fff_constraints(ff, phi_template(CaseKind::C, ff));
        MPoly Fc = ff.F.subst({{"t", v}, {"s", MPoly()}});
        MPoly Gc = ff.G.subst({{"t", v}, {"s", MPoly()}});
        MPoly want_f = (Fc + u.scaled(ff.A) + MPoly(ff.B)).normalized();
        MPoly want_g =
            (Gc - u.pow(2).scaled(ff.A) - u.scaled(Rat(2) * ff.B) - MPoly(ff.C))
                .normalized();
        bool has_f = false, has_g = false;
        for (auto& c : cs) {
            has_f = has_f || c == want_f;
            has_g = has_g || c == want_g;
        }
        CHECK(has_f);
        CHECK(has_g);
    }
    // case B: the G-relation comes from the general transformation rule,
    // G(c) = A b^2 - 2 B b + C (with b = u)
    {
        auto cs = fff_constraints(ff, phi_template(CaseKind::B, ff));
        MPoly Gc = ff.G.subst({{"t", (u * v).scaled(Rat(-1, 2))}, {"s", v}});
        MPoly want_g =
            (Gc - u.pow(2).scaled(ff.A) + u.scaled(Rat(2) * ff.B) - MPoly(ff.C))
                .normalized();
        bool has_g = false;
        for (auto& c : cs) has_g = has_g || c == want_g;
        CHECK(has_g);
    }
}

TEST_CASE("frames: M from the origin partials") {
    Parametrization P = prepare(circular_paraboloid(), 0);
    FundamentalForm ff = fundamental_form(P);
    CandidateFrame fr = build_frame(P, ff, CaseId{CaseKind::A, +1});
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(fr.M[i][j] == Rat(i == j ? 1 : 0));

    Parametrization E = prepare(enneper(), 0);
    CandidateFrame fe = build_frame(E, fundamental_form(E), CaseId{CaseKind::B, -1});
    // columns xt(0) = (0,3,0), xs(0) = (3,0,0), cross = (0,0,-9)
    CHECK(fe.M[0][1] == Rat(3));
    CHECK(fe.M[1][0] == Rat(3));
    CHECK(fe.M[2][2] == Rat(-9));
    CHECK(fe.M[0][0] == Rat(0));
}

TEST_CASE("frames: third column of L and the b construction") {
    Parametrization P = prepare(enneper(), 0);
    FundamentalForm ff = fundamental_form(P);
    for (int sign : {+1, -1}) {
        CandidateFrame fr = build_frame(P, ff, CaseId{CaseKind::D1, sign});
        Vec3P cr = cross(P.xt, P.xs);
        for (int i = 0; i < 3; ++i) {
            RatFn want = eval_at(cr[i], fr.phi.c1, fr.phi.c2) * fr.phi.delta *
                         RatFn(Rat(sign));
            CHECK(fr.L[i][2] == want);
        }
        // b = x(c) - Q x(0); with c = 0 in case D1, b = x(0) - Q x(0)
        for (int i = 0; i < 3; ++i) {
            RatFn acc = RatFn(P.origin[i]);
            for (int j = 0; j < 3; ++j) acc -= fr.Q[i][j] * RatFn(P.origin[j]);
            CHECK(fr.b[i] == acc);
        }
    }
}
