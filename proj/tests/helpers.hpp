#pragma once

#include "surfsym/classifier.hpp"
#include "surfsym/parse.hpp"

#include <random>
#include <string>
#include <vector>

namespace surfsym::testing {

inline MPoly pp(const std::string& text) { return parse_expression(text); }

inline Parametrization enneper() {
    return make_parametrization(pp("-s^3+3*s*t^2+3*s"), pp("3*s^2*t-t^3+3*t"),
                                pp("3*s^2-3*t^2"));
}

inline Parametrization circular_paraboloid() {
    return make_parametrization(pp("t"), pp("s"), pp("t^2+s^2"));
}

inline Parametrization hyperbolic_paraboloid() {
    return make_parametrization(pp("t"), pp("s"), pp("t*s"));
}

inline Parametrization monkey_saddle() {
    return make_parametrization(pp("t"), pp("s"), pp("t^3-3*t*s^2"));
}

using Mat3 = std::array<std::array<Rat, 3>, 3>;
using V3 = std::array<Rat, 3>;

inline Mat3 rot_z_345() {
    return Mat3{{{Rat(3, 5), Rat(-4, 5), Rat(0)},
                 {Rat(4, 5), Rat(3, 5), Rat(0)},
                 {Rat(0), Rat(0), Rat(1)}}};
}

inline Mat3 rot_x_51213() {
    return Mat3{{{Rat(1), Rat(0), Rat(0)},
                 {Rat(0), Rat(5, 13), Rat(-12, 13)},
                 {Rat(0), Rat(12, 13), Rat(5, 13)}}};
}

inline Mat3 mat_mul(const Mat3& a, const Mat3& b) {
    Mat3 r{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Rat acc(0);
            for (int k = 0; k < 3; ++k) acc += a[i][k] * b[k][j];
            r[i][j] = acc;
        }
    return r;
}

inline Mat3 transpose(const Mat3& a) {
    Mat3 r{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r[i][j] = a[j][i];
    return r;
}

inline V3 mat_vec(const Mat3& a, const V3& v) {
    V3 r{};
    for (int i = 0; i < 3; ++i) {
        Rat acc(0);
        for (int k = 0; k < 3; ++k) acc += a[i][k] * v[k];
        r[i] = acc;
    }
    return r;
}

// R x(t,s) + w
inline Parametrization conjugated(const Parametrization& P, const Mat3& R, const V3& w) {
    std::array<MPoly, 3> c;
    for (int i = 0; i < 3; ++i) {
        MPoly acc{w[i]};
        for (int j = 0; j < 3; ++j) acc += P.x[j].scaled(R[i][j]);
        c[i] = acc;
    }
    return make_parametrization(c[0], c[1], c[2]);
}

// Planted zero-dimensional system: three products of affine forms whose
// common real zeros are exactly the planted rational points. Cross
// intersections of lines from different equations are checked exactly
// against the third equation and the draw is resampled on any collision,
// so the planted set is guaranteed.
struct PlantedSystem {
    std::vector<MPoly> equations;
    std::vector<std::pair<Rat, Rat>> roots;
};

inline PlantedSystem plant_system(std::mt19937_64& rng, int max_roots,
                                  long coord_range = 20, long den_range = 6) {
    const MPoly U = MPoly::variable("u"), V = MPoly::variable("v");
    while (true) {
        int k = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_roots));
        std::vector<std::pair<Rat, Rat>> roots;
        while (static_cast<int>(roots.size()) < k) {
            Rat ru(static_cast<long>(rng() % static_cast<unsigned long>(2 * coord_range + 1)) -
                       coord_range,
                   1 + static_cast<long>(rng() % static_cast<unsigned long>(den_range)));
            Rat rv(static_cast<long>(rng() % static_cast<unsigned long>(2 * coord_range + 1)) -
                       coord_range,
                   1 + static_cast<long>(rng() % static_cast<unsigned long>(den_range)));
            bool dup = false;
            for (auto& [a, b] : roots) dup = dup || (a == ru && b == rv);
            if (!dup) roots.emplace_back(ru, rv);
        }
        // directions[e][i] for equation e, root i
        std::vector<std::vector<std::pair<Rat, Rat>>> dirs(3);
        for (auto& d : dirs)
            for (int i = 0; i < k; ++i) {
                long a = static_cast<long>(rng() % 19) - 9;
                long b = static_cast<long>(rng() % 19) - 9;
                if (a == 0 && b == 0) a = 1;
                d.emplace_back(Rat(a), Rat(b));
            }
        // exactness check: intersections of lines from two equations must not
        // satisfy the third unless they are planted roots
        auto line_at = [&](int e, int i, const Rat& u, const Rat& v) {
            return dirs[e][i].first * (u - roots[i].first) +
                   dirs[e][i].second * (v - roots[i].second);
        };
        bool ok = true;
        for (int e1 = 0; e1 < 3 && ok; ++e1)
            for (int e2 = e1 + 1; e2 < 3 && ok; ++e2)
                for (int i = 0; i < k && ok; ++i)
                    for (int j = 0; j < k && ok; ++j) {
                        // intersection of line i of e1 with line j of e2
                        Rat a1 = dirs[e1][i].first, b1 = dirs[e1][i].second;
                        Rat a2 = dirs[e2][j].first, b2 = dirs[e2][j].second;
                        Rat det = a1 * b2 - b1 * a2;
                        Rat c1 = a1 * roots[i].first + b1 * roots[i].second;
                        Rat c2 = a2 * roots[j].first + b2 * roots[j].second;
                        if (det.is_zero()) {
                            // parallel: reject coincident lines
                            if (line_at(e1, i, roots[j].first, roots[j].second)
                                    .is_zero() &&
                                line_at(e2, j, roots[i].first, roots[i].second)
                                    .is_zero())
                                ok = false;
                            continue;
                        }
                        Rat pu = (c1 * b2 - b1 * c2) / det;
                        Rat pv = (a1 * c2 - c1 * a2) / det;
                        bool planted = false;
                        for (auto& [ru, rv] : roots)
                            planted = planted || (ru == pu && rv == pv);
                        if (planted) continue;
                        int e3 = 3 - e1 - e2;
                        for (int m = 0; m < k; ++m)
                            if (line_at(e3, m, pu, pv).is_zero()) ok = false;
                    }
        if (!ok) continue;
        PlantedSystem out;
        out.roots = roots;
        for (int e = 0; e < 3; ++e) {
            MPoly acc{Rat(1)};
            for (int i = 0; i < k; ++i) {
                MPoly line = (U - MPoly(roots[i].first)).scaled(dirs[e][i].first) +
                             (V - MPoly(roots[i].second)).scaled(dirs[e][i].second);
                acc = acc * line;
            }
            out.equations.push_back(acc.normalized());
        }
        return out;
    }
}

// random sparse polynomial over the given variables
inline MPoly random_poly(std::mt19937_64& rng, const std::vector<std::string>& vars,
                         int max_deg, int terms, long coeff_range = 9) {
    MPoly acc;
    for (int k = 0; k < terms; ++k) {
        Expvec e;
        int budget = max_deg;
        for (size_t i = 0; i < vars.size(); ++i) {
            int d = static_cast<int>(rng() % static_cast<unsigned>(budget + 1));
            e.push_back(static_cast<uint32_t>(d));
            budget -= d;
        }
        long num = static_cast<long>(rng() % static_cast<unsigned long>(2 * coeff_range + 1)) -
                   coeff_range;
        long den = 1 + static_cast<long>(rng() % 3);
        if (num == 0) num = 1;
        acc += MPoly::monomial(Rat(num, den), vars, e);
    }
    return acc;
}

} // namespace surfsym::testing
