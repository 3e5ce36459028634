#include <doctest.h>

#include <cmath>
#include <numbers>

#include "gcplane/euler_savary.hpp"
#include "oracles.hpp"

using namespace gcp;
using doctest::Approx;

namespace {

MotionSpec sample_motion(double p, int which) { return oracle::battery_motion(p, which); }

} // namespace

TEST_CASE("euler_savary_solve: printed examples") {
    // equal pole-curve radii leave every center where the point is
    const EulerSavaryResult same =
        euler_savary_solve(2.0, 2.0, 0.7, {0.9, Sector::Elliptic}, PlaneParam{-1});
    CHECK_FALSE(same.infinite);
    CHECK(same.value == Approx(0.7));

    const EulerSavaryResult e =
        euler_savary_solve(2.0, 3.0, 1.0, {std::numbers::pi / 2, Sector::Elliptic}, PlaneParam{-1});
    CHECK_FALSE(e.infinite);
    CHECK(e.value == Approx(6.0 / 5.0).epsilon(1e-14));

    const EulerSavaryResult g =
        euler_savary_solve(1.0, 2.0, 1.0, {0.5, Sector::GalileanRight}, PlaneParam{0});
    CHECK(g.infinite);
}

TEST_CASE("euler_savary_solve: error paths") {
    const PlaneParam pl{-1};
    CHECK_THROWS_WITH_AS(euler_savary_solve(1, 2, 0.0, {0.5, Sector::Elliptic}, pl),
                         doctest::Contains("ZeroDistance"), Error);
    CHECK_THROWS_WITH_AS(euler_savary_solve(0.0, 2, 1, {0.5, Sector::Elliptic}, pl),
                         doctest::Contains("ZeroDistance"), Error);
    CHECK_THROWS_WITH_AS(euler_savary_solve(1, 2, 1, {0.0, Sector::Elliptic}, pl),
                         doctest::Contains("TangentRay"), Error);
    // sinp(pi, -1) = 0 up to roundoff: also a tangent ray
    CHECK_THROWS_AS(euler_savary_solve(1, 2, 1, {std::numbers::pi, Sector::Elliptic}, pl), Error);
}

TEST_CASE("euler_savary_solve is involutive under the inverse motion") {
    oracle::Rng rng(41);
    for (double p : {-1.0, 0.0, 1.0, 2.0}) {
        const PlaneParam pl{p};
        for (int i = 0; i < 300; ++i) {
            const double r = rng.uniform(0.5, 3.0);
            const double rp = rng.uniform(-3.0, -0.5);
            const double a = rng.uniform(0.4, 2.0);
            const PAngle th{rng.uniform(0.2, 0.8), Sector::Elliptic};
            const EulerSavaryResult fwd = euler_savary_solve(r, rp, a, th, pl);
            if (fwd.infinite) continue;
            const EulerSavaryResult back = euler_savary_solve(rp, r, fwd.value, th, pl);
            REQUIRE_FALSE(back.infinite);
            CHECK(back.value == Approx(a).epsilon(1e-10));
        }
    }
}

TEST_CASE("rho_star_geometric: examples and errors") {
    CHECK(rho_star_geometric(1.0, 2.0) == Approx(2.0));
    CHECK(rho_star_geometric(2.0, -2.0) == Approx(1.0));
    CHECK_THROWS_WITH_AS(rho_star_geometric(3.0, 3.0), doctest::Contains("CircularTrajectory"),
                         Error);
    CHECK_THROWS_WITH_AS(rho_star_geometric(0.0, 1.0), doctest::Contains("ZeroDistance"), Error);
}

TEST_CASE("inversion image: examples") {
    PoleRayStation st;
    st.x_dir = {0, 1};
    st.rho_star = 2.0;
    const InversionImage img = inversion_image(st);
    CHECK(img.q.x == 0.0);
    CHECK(img.q.y == Approx(0.5));
    CHECK(img.height == Approx(0.5));

    PoleRayStation unit;
    unit.x_dir = exp_i(0.4, PlaneParam{-1});
    unit.rho_star = 1.0;
    const InversionImage one = inversion_image(unit);
    CHECK(one.q.x == unit.x_dir.x);
    CHECK(one.q.y == unit.x_dir.y);

    PoleRayStation bad;
    bad.x_dir = {1, 0};
    bad.rho_star = 0.0;
    CHECK_THROWS_WITH_AS(inversion_image(bad), doctest::Contains("InfiniteRadius"), Error);
}

TEST_CASE("images of inflection points sit at constant height 1/h") {
    const PlaneParam pl{1};
    const double h = 2.0;
    for (double theta : {0.2, 0.3, 0.55, 0.9, 1.3}) {
        PoleRayStation st;
        st.x_dir = exp_i(theta, pl);
        st.rho_star = h * std::sinh(theta); // sinp at p = 1
        const InversionImage img = inversion_image(st);
        CHECK(img.height == Approx(1.0 / h).epsilon(1e-12));
    }
}

TEST_CASE("collinearity residual: algebraic witnesses") {
    const InversionImage q1{{0, 1}, 1};
    CHECK(collinearity_residual(q1, q1, q1) == 0.0);
    const InversionImage a{{0, 1}, 1};
    const InversionImage b{{1, 1}, 1};
    const InversionImage c{{2, 1.5}, 1.5};
    CHECK(collinearity_residual(a, b, c) == Approx(0.5));
    const InversionImage c2{{2, 1}, 1};
    CHECK(collinearity_residual(a, b, c2) == Approx(0.0).scale(1.0));
}

TEST_CASE("images of three computed inflection points are collinear") {
    for (double p : {-1.0, -0.5, 0.0, 0.5, 1.0}) {
        const MotionSpec m = sample_motion(p, 1);
        const PlaneParam pl = m.plane();
        const InstantInvariants inv = instant_invariants(m, 0.0);
        const double span = p < 0.0 ? 0.4 * std::numbers::pi / std::sqrt(-p) : 0.8;
        InversionImage imgs[3];
        for (int k = 0; k < 3; ++k) {
            const double theta = span * (0.3 + 0.25 * k);
            PoleRayStation st;
            st.x_dir = exp_i(theta, pl);
            st.rho_star = find_inflection_point(m, inv, theta);
            imgs[k] = inversion_image(st);
        }
        CHECK(std::fabs(collinearity_residual(imgs[0], imgs[1], imgs[2])) <= 1e-10);
        // the line is parallel to the common tangent: equal heights
        CHECK(imgs[0].height == Approx(imgs[1].height).epsilon(1e-10));
        CHECK(imgs[1].height == Approx(imgs[2].height).epsilon(1e-10));
        CHECK(imgs[0].height == Approx(1.0 / inv.h).epsilon(1e-9));
    }
}

TEST_CASE("measured pole curvatures satisfy 1/r - 1/r' = 1/h") {
    // cycloid: moving curve is the unit circle (r = 1 in the oriented frame),
    // the fixed curve a straight line (1/r' = 0)
    const MotionSpec cyc(PlaneParam{-1}, Poly({0, 1}), Poly({0, 1}), Poly({0}));
    const PoleCurveRadii pc = measured_pole_curvatures(cyc, 0.0);
    CHECK(pc.moving == Approx(1.0).epsilon(1e-6));
    CHECK(std::fabs(1.0 / pc.fixed) < 1e-6);

    for (double p : {-1.0, -0.5, 0.0, 0.5, 1.0}) {
        for (int which = 0; which < 3; ++which) {
            const MotionSpec m = sample_motion(p, which);
            const InstantInvariants inv = instant_invariants(m, 0.0);
            const PoleCurveRadii radii = measured_pole_curvatures(m, 0.0);
            const double lhs = 1.0 / radii.moving - 1.0 / radii.fixed;
            CHECK(lhs == Approx(1.0 / inv.h).epsilon(1e-6));
        }
    }
}

TEST_CASE("euler_savary_solve predicts measured curvature centers") {
    // r, r' measured from the pole loci; a' measured from the trajectory's
    // osculating circle. Tolerance follows the finite-difference measurement.
    for (double p : {-1.0, 0.0, 1.0, -0.5, 0.5}) {
        for (int which = 0; which < 3; ++which) {
            const MotionSpec m = sample_motion(p, which);
            const PlaneParam pl = m.plane();
            const InstantInvariants inv = instant_invariants(m, 0.0);
            const PoleCurveRadii radii = measured_pole_curvatures(m, 0.0);
            const double theta = 0.5 * (p < 0.0 ? 0.7 : 1.0);
            const double a = 1.9 * inv.h * sinp(theta, pl);
            const PoleRayStation st = make_station(m, inv, theta, a);
            const EulerSavaryResult pred = euler_savary_solve(
                radii.moving, radii.fixed, a, {theta, Sector::Elliptic}, pl);
            REQUIRE_FALSE(pred.infinite);
            CHECK(st.rho_prime == Approx(pred.value).epsilon(1e-6));
        }
    }
}

TEST_CASE("station bundles close the harmonic relation") {
    for (double p : {-1.0, 0.0, 0.7}) {
        const MotionSpec m = sample_motion(p, 2);
        const InstantInvariants inv = instant_invariants(m, 0.0);
        const double theta = 0.45;
        const PoleRayStation st = make_station(m, inv, theta, 1.6 * inv.h * sinp(theta, m.plane()));
        const double lhs = 1.0 / st.rho_star;
        const double rhs = 1.0 / st.rho - 1.0 / st.rho_prime;
        CHECK(lhs == Approx(rhs).epsilon(1e-10));
    }
}
