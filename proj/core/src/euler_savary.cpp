#include "gcplane/euler_savary.hpp"

#include <cmath>

namespace gcp {

EulerSavaryResult euler_savary_solve(double r, double r_prime, double a, PAngle theta,
                                     PlaneParam pl) {
    if (a == 0.0 || r == 0.0 || r_prime == 0.0)
        throw Error(ErrorCode::ZeroDistance, "pole-ray distances must be nonzero");
    const double s = sinp(theta.theta, pl);
    if (std::fabs(s) <= 1e-14)
        throw Error(ErrorCode::TangentRay, "sinp of the ray angle vanishes");
    const double inv_a_prime = 1.0 / a + (1.0 / r_prime - 1.0 / r) / s;
    if (std::fabs(inv_a_prime) <= 1e-14 * std::fabs(1.0 / a))
        return {true, 0.0};
    return {false, 1.0 / inv_a_prime};
}

double rho_star_geometric(double rho, double rho_prime) {
    if (rho == 0.0 || rho_prime == 0.0)
        throw Error(ErrorCode::ZeroDistance, "pole-ray distances must be nonzero");
    const double diff = 1.0 / rho - 1.0 / rho_prime;
    if (std::fabs(diff) <= 1e-14 * std::fabs(1.0 / rho))
        throw Error(ErrorCode::CircularTrajectory,
                    "curvature center at the point's own distance");
    return 1.0 / diff;
}

InversionImage inversion_image(const PoleRayStation& station) {
    if (station.rho_star == 0.0 || !std::isfinite(station.rho_star))
        throw Error(ErrorCode::InfiniteRadius, "inflection point has no finite inversion image");
    InversionImage img;
    img.q = (1.0 / station.rho_star) * station.x_dir;
    img.height = img.q.y;
    return img;
}

double collinearity_residual(const InversionImage& q1, const InversionImage& q2,
                             const InversionImage& q3) {
    return wedge_raw(q1.q, q2.q) + wedge_raw(q3.q, q1.q) + wedge_raw(q2.q, q3.q);
}

PoleCurveRadii measured_pole_curvatures(const MotionSpec& m, double t, double rel_spacing) {
    const PlaneParam pl = m.plane();
    const InstantInvariants inv = instant_invariants(m, t);
    const double u_norm = norm(inv.transfer_vel, pl);
    const double dt = rel_spacing * inv.h / u_norm;

    // Three-point parabolic fit y = c1 x + c2 x^2 through the origin-anchored
    // frame samples (the middle sample is the pole itself), Richardson-
    // refined over two spacings to cancel the cubic locus term.
    const auto quad_coef = [&](GCNum before, GCNum after) {
        const GCNum b = inv.frame.to_frame(before, pl);
        const GCNum a = inv.frame.to_frame(after, pl);
        return ((a.y - b.y) / (a.x - b.x) - b.y / b.x) / a.x;
    };
    const auto fixed_at = [&](double step) {
        return quad_coef(instantaneous_pole(m, t - step), instantaneous_pole(m, t + step));
    };
    const auto moving_at = [&](double step) {
        return quad_coef(trajectory(m, instantaneous_pole_moving(m, t - step), t),
                         trajectory(m, instantaneous_pole_moving(m, t + step), t));
    };
    const auto refine = [](double coarse, double fine) { return (4.0 * fine - coarse) / 3.0; };

    PoleCurveRadii radii;
    radii.fixed = 1.0 / (2.0 * refine(fixed_at(dt), fixed_at(0.5 * dt)));
    radii.moving = 1.0 / (2.0 * refine(moving_at(dt), moving_at(0.5 * dt)));
    return radii;
}

PoleRayStation make_station(const MotionSpec& m, const InstantInvariants& inv, double theta,
                            double a) {
    const PlaneParam pl = m.plane();
    PoleRayStation st;
    st.x_dir = exp_i(theta, pl);
    switch (pl.kind()) {
        case GeometryKind::Elliptical: st.theta = {theta, Sector::Elliptic}; break;
        case GeometryKind::Parabolic: st.theta = {theta, Sector::GalileanRight}; break;
        case GeometryKind::Hyperbolic: st.theta = {theta, Sector::HyperbolicRight}; break;
    }
    st.rho = a;
    st.rho_star = inv.h * sinp(theta, pl);
    if (pl.p == 0.0) {
        // Galilean circles carry no curvature; the center distance is fixed
        // by the harmonic relation instead of an osculating measurement.
        st.rho_prime = st.rho * st.rho_star / (st.rho_star - st.rho);
    } else {
        const GCNum pos = inv.frame.from_frame(a * st.x_dir, pl);
        const GCNum z = moving_point_at(m, pos, inv.t);
        const GCNum center = trajectory_curvature_center(m, z, inv.t);
        const GCNum center_f = inv.frame.to_frame(center, pl);
        st.rho_prime = scalar(center_f, st.x_dir, pl);
    }
    return st;
}

} // namespace gcp
