#include "helpers.hpp"

#include <doctest.h>

#include <random>

using namespace surfsym;
using surfsym::testing::pp;
using surfsym::testing::random_poly;

namespace {

// Independent oracle: the Sylvester determinant computed by fraction-free
// Gaussian elimination over Q(u) represented as rational functions. Only for
// small sizes; used to pin the resultant implementation.
RatFn sylvester_det(const MPoly& p, const MPoly& q, const std::string& var) {
    int m = p.degree_in(var), n = q.degree_in(var);
    auto cp = p.coeffs_in(var), cq = q.coeffs_in(var);
    int N = m + n;
    std::vector<std::vector<RatFn>> a(static_cast<size_t>(N),
                                      std::vector<RatFn>(static_cast<size_t>(N)));
    for (int r = 0; r < n; ++r)
        for (int k = 0; k <= m; ++k) a[r][r + (m - k)] = RatFn(cp[k]);
    for (int r = 0; r < m; ++r)
        for (int k = 0; k <= n; ++k) a[n + r][r + (n - k)] = RatFn(cq[k]);
    RatFn det(Rat(1));
    for (int col = 0; col < N; ++col) {
        int piv = -1;
        for (int r = col; r < N; ++r)
            if (!a[r][col].is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) return RatFn();
        if (piv != col) {
            std::swap(a[piv], a[col]);
            det = -det;
        }
        det = det * a[col][col];
        for (int r = col + 1; r < N; ++r) {
            if (a[r][col].is_zero()) continue;
            RatFn f = a[r][col] / a[col][col];
            for (int k = col; k < N; ++k) a[r][k] = a[r][k] - f * a[col][k];
        }
    }
    return det;
}

} // namespace

TEST_CASE("resultant: pinned examples") {
    MPoly u = MPoly::variable("u"), v = MPoly::variable("v");
    // hand-computed 2x2 Sylvester determinant: 2u^2 - 1
    CHECK(resultant(u.pow(2) + v.pow(2) - MPoly(1), u - v, "v") ==
          u.pow(2).scaled(Rat(2)) - MPoly(1));
    // sign convention: p's coefficients in the top rows pins Res(v-1, v+1) = 2
    CHECK(resultant(v - MPoly(1), v + MPoly(1), "v") == MPoly(Rat(2)));
    CHECK(resultant(v + MPoly(1), v - MPoly(1), "v") == MPoly(Rat(-2)));
    // common factor vanishes identically
    MPoly p = u.pow(2) + v.pow(2) - MPoly(1);
    CHECK(resultant(p, p, "v").is_zero());
    CHECK_THROWS(resultant(v - MPoly(1), u - MPoly(1), "v")); // degree 0 in v
    // degree-0 conventions live in resultant_any
    CHECK(resultant_any(v - MPoly(1), u - MPoly(1), "v") == u - MPoly(1));
    CHECK(resultant_any(u.pow(2) - MPoly(2), v, "v") == u.pow(2) - MPoly(2));
}

TEST_CASE("resultant agrees with the Sylvester determinant oracle") {
    std::mt19937_64 rng(2024);
    int checked = 0;
    for (int i = 0; i < 40; ++i) {
        MPoly p = random_poly(rng, {"u", "v"}, 3, 4);
        MPoly q = random_poly(rng, {"u", "v"}, 3, 4);
        if (p.degree_in("v") < 1 || q.degree_in("v") < 1) continue;
        RatFn oracle = sylvester_det(p, q, "v");
        MPoly got = resultant(p, q, "v");
        if (oracle.is_zero()) {
            CHECK(got.is_zero());
        } else {
            REQUIRE(oracle.is_polynomial());
            CHECK(got == oracle.num().scaled(oracle.den().constant_value().inv()));
        }
        ++checked;
    }
    CHECK(checked > 20);
}

TEST_CASE("resultant vanishes iff the arguments share a factor in the variable") {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 25; ++i) {
        MPoly f = random_poly(rng, {"u", "v"}, 2, 3) + MPoly::variable("v").pow(3);
        MPoly a = random_poly(rng, {"u", "v"}, 2, 3) + MPoly::variable("v").pow(2);
        MPoly b = random_poly(rng, {"u", "v"}, 2, 3) + MPoly::variable("u").pow(2);
        // shared factor f of positive v-degree forces a zero resultant
        CHECK(resultant(f * a, f * b, "v").is_zero());
        // and conversely a zero resultant implies a common factor
        MPoly r = resultant_any(a, b, "v");
        MPoly g = gcd(a, b);
        if (r.is_zero())
            CHECK(g.degree_in("v") > 0);
        else
            CHECK(g.degree_in("v") == 0);
    }
}

TEST_CASE("gcd: pinned examples and normalization") {
    MPoly u = MPoly::variable("u"), v = MPoly::variable("v");
    CHECK(gcd(u.pow(2) - MPoly(1), u - MPoly(1)) == u - MPoly(1));
    CHECK(gcd(u, v) == MPoly(Rat(1)));
    CHECK(gcd(MPoly(), u + v) == u + v);
    CHECK(gcd((u + v).scaled(Rat(-3, 7)), (u + v).scaled(Rat(5))) == u + v);
    CHECK(gcd(MPoly(Rat(4)), u) == MPoly(Rat(1)));
}

TEST_CASE("gcd on random products recovers the planted factor") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 20; ++i) {
        MPoly g = random_poly(rng, {"u", "v"}, 2, 3) + MPoly::variable("u").pow(3);
        MPoly a = random_poly(rng, {"u", "v"}, 2, 3) + MPoly::variable("v").pow(2);
        MPoly b = a + MPoly(1); // gcd(a, b) = 1
        MPoly d = gcd(g * a, g * b);
        CHECK(divides(g, d));
        CHECK(divides(d, g));
    }
}

TEST_CASE("squarefree part") {
    MPoly u = MPoly::variable("u");
    CHECK(squarefree_part((u - MPoly(1)).pow(2) * (u + MPoly(2))) ==
          (u - MPoly(1)) * (u + MPoly(2)));
    CHECK(squarefree_part(u.pow(5)) == u);
    CHECK(squarefree_part(u + MPoly(1)) == u + MPoly(1));
}
