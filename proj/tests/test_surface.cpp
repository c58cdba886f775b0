#include "helpers.hpp"
#include "surfsym/errors.hpp"

#include <doctest.h>

#include <random>

using namespace surfsym;
using namespace surfsym::testing;

TEST_CASE("prepare leaves regular-origin inputs unchanged") {
    Parametrization P = prepare(circular_paraboloid(), 0);
    CHECK(P.x[2] == pp("t^2+s^2"));
    CHECK(P.origin_normal == Vec3Q{Rat(0), Rat(0), Rat(1)});

    Parametrization E = prepare(enneper(), 0);
    CHECK(E.origin_normal == Vec3Q{Rat(0), Rat(0), Rat(-9)});
    CHECK(E.origin == Vec3Q{Rat(0), Rat(0), Rat(0)});
}

TEST_CASE("prepare rejects degenerate parametrizations") {
    Parametrization bad = make_parametrization(pp("t^2"), pp("t^2"), pp("t^2"));
    CHECK_THROWS_AS((void)prepare(bad, 0), DegenerateSurface);
}

TEST_CASE("prepare reparametrizes an irregular origin deterministically") {
    // regular surface away from (0,0), singular parametrization point there
    Parametrization raw = make_parametrization(pp("t^2"), pp("t^3"), pp("s"));
    CHECK(is_zero(raw.origin_normal));
    Parametrization P = prepare(raw, 0);
    CHECK_FALSE(is_zero(P.origin_normal));
    Parametrization P2 = prepare(raw, 0);
    CHECK(P.x[0] == P2.x[0]); // same seed, same substitution
    Parametrization P3 = prepare(P, 123);
    CHECK(P3.x[0] == P.x[0]); // idempotent once regular
}

TEST_CASE("fundamental form of the paraboloid") {
    Parametrization P = prepare(circular_paraboloid(), 0);
    FundamentalForm ff = fundamental_form(P);
    CHECK(ff.E == pp("1+4*t^2"));
    CHECK(ff.F == pp("4*t*s"));
    CHECK(ff.G == pp("1+4*s^2"));
    CHECK(ff.A == Rat(1));
    CHECK(ff.B == Rat(0));
    CHECK(ff.C == Rat(1));
}

TEST_CASE("fundamental form of the Enneper surface at the origin") {
    Parametrization P = prepare(enneper(), 0);
    FundamentalForm ff = fundamental_form(P);
    CHECK(ff.A == Rat(9));
    CHECK(ff.B == Rat(0));
    CHECK(ff.C == Rat(9));
    // Cauchy-Schwarz strict at a regular origin
    CHECK(ff.B * ff.B < ff.A * ff.C);
}

TEST_CASE("Lagrange identity at the origin") {
    for (const Parametrization& raw :
         {enneper(), circular_paraboloid(), hyperbolic_paraboloid(), monkey_saddle()}) {
        Parametrization P = prepare(raw, 0);
        FundamentalForm ff = fundamental_form(P);
        Rat n2 = P.origin_normal[0] * P.origin_normal[0] +
                 P.origin_normal[1] * P.origin_normal[1] +
                 P.origin_normal[2] * P.origin_normal[2];
        CHECK(ff.A * ff.C - ff.B * ff.B == n2);
    }
}

TEST_CASE("plane detection") {
    CHECK(plane_check(make_parametrization(pp("t"), pp("s"), pp("2*t+3*s"))));
    CHECK_FALSE(plane_check(circular_paraboloid()));
    CHECK(plane_check(make_parametrization(pp("t+s"), pp("t-s"), pp("1+t"))));
}

TEST_CASE("fundamental form transforms by the first-fundamental-form rule") {
    // under (t,s) -> (a t + b s + g, c t + d s + h):
    // E' = a^2 E(psi) + 2 a c F(psi) + c^2 G(psi), etc.
    std::mt19937_64 rng(3);
    Parametrization raw = enneper();
    for (int trial = 0; trial < 5; ++trial) {
        long a = 1 + static_cast<long>(rng() % 3), b = static_cast<long>(rng() % 3);
        long c = static_cast<long>(rng() % 3), d = 1 + static_cast<long>(rng() % 3);
        long g = static_cast<long>(rng() % 3) - 1, h = static_cast<long>(rng() % 3) - 1;
        if (a * d - b * c == 0) continue;
        std::map<std::string, MPoly> sub{
            {"t", pp("t").scaled(Rat(a)) + pp("s").scaled(Rat(b)) + MPoly(Rat(g))},
            {"s", pp("t").scaled(Rat(c)) + pp("s").scaled(Rat(d)) + MPoly(Rat(h))}};
        Parametrization Psub = make_parametrization(
            raw.x[0].subst(sub), raw.x[1].subst(sub), raw.x[2].subst(sub));
        FundamentalForm f0 = fundamental_form(prepare(raw, 0));
        FundamentalForm f1 = fundamental_form(prepare(Psub, 0));
        MPoly Ep = f0.E.subst(sub), Fp = f0.F.subst(sub), Gp = f0.G.subst(sub);
        CHECK(f1.E == Ep.scaled(Rat(a * a)) + Fp.scaled(Rat(2 * a * c)) +
                          Gp.scaled(Rat(c * c)));
        CHECK(f1.F == Ep.scaled(Rat(a * b)) + Fp.scaled(Rat(a * d + b * c)) +
                          Gp.scaled(Rat(c * d)));
        CHECK(f1.G == Ep.scaled(Rat(b * b)) + Fp.scaled(Rat(2 * b * d)) +
                          Gp.scaled(Rat(d * d)));
    }
}
