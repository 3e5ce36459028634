// Test-side oracles, independent of the library's computation paths:
// plain central differences, a p-circumcenter from three samples, and a
// grid+refine search for the zero-velocity point.
#pragma once

#include <cmath>
#include <cstdint>
#include <functional>

#include "gcplane/motion.hpp"

namespace oracle {

struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t s) : state(s) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    double uniform(double lo, double hi) {
        return lo + (hi - lo) * (static_cast<double>(next() >> 11) * 0x1.0p-53);
    }
    int pick(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }
};

inline double central_diff(const std::function<double(double)>& f, double x, double h) {
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

inline gcp::GCNum central_diff_vec(const std::function<gcp::GCNum(double)>& f, double x,
                                   double h) {
    return (1.0 / (2.0 * h)) * (f(x + h) - f(x - h));
}

inline gcp::GCNum second_diff_vec(const std::function<gcp::GCNum(double)>& f, double x,
                                  double h) {
    return (1.0 / (h * h)) * (f(x + h) - 2.0 * f(x) + f(x - h));
}

// Center of the p-circle through three points: <z_i - c, z_i - c>_p equal
// pairwise gives a linear system in c. Degenerate for p = 0.
inline gcp::GCNum p_circumcenter(gcp::GCNum a, gcp::GCNum b, gcp::GCNum c, gcp::PlaneParam pl) {
    const double qa = gcp::quad(a, pl);
    const double qb = gcp::quad(b, pl);
    const double qc = gcp::quad(c, pl);
    // 2 <a-b, C> = qa - qb ; 2 <b-c, C> = qb - qc with <u, C> = ux Cx - p uy Cy
    const gcp::GCNum r1 = a - b;
    const gcp::GCNum r2 = b - c;
    const double m11 = 2.0 * r1.x, m12 = -2.0 * pl.p * r1.y;
    const double m21 = 2.0 * r2.x, m22 = -2.0 * pl.p * r2.y;
    const double det = m11 * m22 - m12 * m21;
    const double rhs1 = qa - qb;
    const double rhs2 = qb - qc;
    return {(rhs1 * m22 - m12 * rhs2) / det, (m11 * rhs2 - rhs1 * m21) / det};
}

// Deterministic test battery: five synthetic polynomial motions per plane,
// each with a well-conditioned instant at t = 0 for every p in [-2, 2].
// Galilean variants keep the real translation component constant so the
// pole persists.
inline gcp::MotionSpec battery_motion(double p, int which) {
    const gcp::PlaneParam pl{p};
    const auto trim = [&](std::vector<double> c) {
        if (p == 0.0) c.resize(1);
        return gcp::Poly(c);
    };
    using gcp::Poly;
    switch (which) {
        case 0:
            return {pl, Poly({0, 1}), trim({0, 1.5}), Poly({0, 0.2, 0.4})};
        case 1:
            return {pl, Poly({-0.1, 1.1, 0, 0.1}), trim({-0.3, 1.0, 0.1}), Poly({-0.2, 0.3, 0.1})};
        case 2:
            return {pl, Poly({0, 0.7, -0.15}), trim({0.2, -0.8}), Poly({-0.4, 0.35, 0.25})};
        case 3:
            return {pl, Poly({0.3, 1.2}), trim({0, 1.4}), Poly({0.2, 0.3, 0.3})};
        default:
            return {pl, Poly({-0.2, 0.9, 0.2}), trim({0.5, 1.2, 0.2}), Poly({0, 0.4})};
    }
}

// Zero-velocity point by coarse grid search refined with a few Newton steps
// on the 2x2 linear velocity field (the field is affine in z, so one solve
// from any start lands on it; the grid makes the oracle independent of that
// observation).
inline gcp::GCNum grid_pole_search(const gcp::MotionSpec& m, double t, double box, int n) {
    gcp::GCNum best{0.0, 0.0};
    double best_speed = 1e300;
    for (int i = 0; i <= n; ++i) {
        for (int j = 0; j <= n; ++j) {
            const gcp::GCNum z{-box + 2.0 * box * i / n, -box + 2.0 * box * j / n};
            const gcp::GCNum v = gcp::absolute_velocity(m, z, t);
            const double speed = std::fabs(v.x) + std::fabs(v.y);
            if (speed < best_speed) {
                best_speed = speed;
                best = z;
            }
        }
    }
    // refine: v(z) = v(best) + A (z - best), A columns from probes
    for (int iter = 0; iter < 3; ++iter) {
        const gcp::GCNum v0 = gcp::absolute_velocity(m, best, t);
        const double eps = 1e-6;
        const gcp::GCNum vx =
            (1.0 / eps) * (gcp::absolute_velocity(m, best + gcp::GCNum{eps, 0.0}, t) - v0);
        const gcp::GCNum vy =
            (1.0 / eps) * (gcp::absolute_velocity(m, best + gcp::GCNum{0.0, eps}, t) - v0);
        const double det = vx.x * vy.y - vy.x * vx.y;
        if (std::fabs(det) < 1e-14) break; // singular field (p = 0): keep grid best
        best = best - gcp::GCNum{(v0.x * vy.y - vy.x * v0.y) / det,
                                 (vx.x * v0.y - v0.x * vx.y) / det};
    }
    return best;
}

} // namespace oracle
