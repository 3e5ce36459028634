#include "gcplane/motion.hpp"

#include <cmath>
#include <numbers>

namespace gcp {

namespace {

// i * e^{i theta} = (p sinp, cosp): the direction of the rotation velocity
// field. Multiplying by it realizes w ^_p in C_p.
GCNum i_exp(double theta, PlaneParam pl) {
    return {pl.p * sinp(theta, pl), cosp(theta, pl)};
}

GCNum i_times(GCNum z, PlaneParam pl) { return {pl.p * z.y, z.x}; }

} // namespace

GCNum trajectory(const MotionSpec& m, GCNum z, double t) {
    return m.translation(t) + mul(exp_i(m.theta(t), m.plane()), z, m.plane());
}

GCNum moving_point_at(const MotionSpec& m, GCNum pos, double t) {
    return mul(exp_i(-m.theta(t), m.plane()), pos - m.translation(t), m.plane());
}

GCNum absolute_velocity(const MotionSpec& m, GCNum z, double t) {
    const PlaneParam pl = m.plane();
    return m.translation_vel(t) + m.omega(t) * mul(i_exp(m.theta(t), pl), z, pl);
}

GCNum acceleration(const MotionSpec& m, GCNum z, double t) {
    const PlaneParam pl = m.plane();
    const double w = m.omega(t);
    const GCNum rotated = mul(exp_i(m.theta(t), pl), z, pl);
    return m.translation_acc(t) + m.omega_dot(t) * i_times(rotated, pl) +
           (w * w * pl.p) * rotated;
}

GCNum instantaneous_pole_moving(const MotionSpec& m, double t) {
    const PlaneParam pl = m.plane();
    const double w = m.omega(t);
    if (w == 0.0)
        throw Error(ErrorCode::NoPole, "angular velocity vanishes at this instant");
    const GCNum tv = m.translation_vel(t);
    if (pl.p == 0.0) {
        // The rotation field is vertical for p = 0; a finite pole exists only
        // when the translation does not drift along the real axis. The pole
        // is then a whole null line; the representative continuous with the
        // p -> 0 limit of the unique p != 0 pole is returned.
        const double scale = std::fmax(std::fmax(std::fabs(tv.x), std::fabs(tv.y)), std::fabs(w));
        if (std::fabs(tv.x) > 1e-12 * scale)
            throw Error(ErrorCode::NullDivisor,
                        "pole at infinity along the null direction (drifting Galilean translation)");
        const double qx = -tv.y / w;
        return {qx, -qx * m.theta(t)};
    }
    const GCNum divisor = w * i_exp(m.theta(t), pl);
    return -1.0 * mul(inverse(divisor, pl), tv, pl);
}

GCNum instantaneous_pole(const MotionSpec& m, double t) {
    return trajectory(m, instantaneous_pole_moving(m, t), t);
}

KinematicState velocity(const MotionSpec& m, GCNum z, double t) {
    const PlaneParam pl = m.plane();
    KinematicState st;
    st.absolute = absolute_velocity(m, z, t);
    st.acceleration = acceleration(m, z, t);
    const GCNum pole = instantaneous_pole(m, t);
    const GCNum delta = trajectory(m, z, t) - pole;
    st.sliding = m.omega(t) * i_times(delta, pl);
    st.relative = st.absolute - st.sliding;
    return st;
}

AccelTerms acceleration_terms(const MotionSpec& m, GCNum z, double t) {
    const PlaneParam pl = m.plane();
    const GCNum pole_moving = instantaneous_pole_moving(m, t);
    const GCNum pole_fixed = trajectory(m, pole_moving, t);
    const GCNum delta = trajectory(m, z, t) - pole_fixed;
    const double w = m.omega(t);
    AccelTerms terms;
    terms.pole = acceleration(m, pole_moving, t);
    terms.angular = m.omega_dot(t) * i_times(delta, pl);
    terms.radial = (w * w * pl.p) * delta;
    return terms;
}

namespace {

// Transfer velocity of the pole: u = d/dt [fixed pole locus]. Closed form
// from differentiating the pole identity: w i u = -J_r(I), solved through
// i^{-1} for p != 0 and through the explicit Galilean pole for p = 0.
GCNum transfer_velocity(const MotionSpec& m, double t, double w, GCNum pole_accel) {
    const PlaneParam pl = m.plane();
    if (pl.p != 0.0)
        return (-1.0 / w) * GCNum{pole_accel.y, pole_accel.x / pl.p};
    // p = 0: differentiate the limit pole locus; the null component of the
    // transfer velocity is the vertical translation rate.
    const GCNum ta = m.translation_acc(t);
    const GCNum tv = m.translation_vel(t);
    const double w_dot = m.omega_dot(t);
    const double qdot_x = -ta.y / w + tv.y * w_dot / (w * w);
    return {qdot_x, tv.y};
}

double inflection_root_on_ray(const MotionSpec& m, const PoleFrame& frame, double t, double h,
                              double theta) {
    const PlaneParam pl = m.plane();
    const auto wedge_va_ja = [&](double rho) {
        const GCNum pos = frame.from_frame(rho * exp_i(theta, pl), pl);
        const GCNum z = moving_point_at(m, pos, t);
        return wedge_raw(absolute_velocity(m, z, t), acceleration(m, z, t));
    };
    double lo = 1e-9 * h;
    double hi = 1e3 * h;
    double flo = wedge_va_ja(lo);
    double fhi = wedge_va_ja(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo > 0.0) == (fhi > 0.0))
        throw Error(ErrorCode::NoRoot, "ray does not meet the inflection locus");
    while (hi - lo > 1e-12 * hi) {
        const double mid = 0.5 * (lo + hi);
        const double fm = wedge_va_ja(mid);
        if (fm == 0.0) return mid;
        if ((fm > 0.0) == (flo > 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

} // namespace

InstantInvariants instant_invariants(const MotionSpec& m, double t) {
    const PlaneParam pl = m.plane();
    InstantInvariants inv;
    inv.t = t;
    inv.w = m.omega(t);
    inv.w_dot = m.omega_dot(t);

    const GCNum pole_moving = instantaneous_pole_moving(m, t); // throws NoPole/NullDivisor
    inv.pole = trajectory(m, pole_moving, t);
    inv.pole_accel = acceleration(m, pole_moving, t);
    inv.transfer_vel = transfer_velocity(m, t, inv.w, inv.pole_accel);

    const double u_mag = std::fmax(std::fabs(inv.transfer_vel.x), std::fabs(inv.transfer_vel.y));
    if (u_mag <= 1e-12 * std::fmax(1.0, std::fabs(inv.w)))
        throw Error(ErrorCode::DegenerateMotion,
                    "pole locus stationary to first order (every trajectory is a p-circle)");
    if (is_null(inv.transfer_vel, pl))
        throw Error(ErrorCode::DegenerateMotion, "common tangent lies on the null cone");
    if (pl.p > 0.0 && quad(inv.transfer_vel, pl) < 0.0)
        throw Error(ErrorCode::DegenerateMotion,
                    "common tangent in the cosp-negative sector is not supported");

    const double u_norm = norm(inv.transfer_vel, pl);
    inv.tangent_dir = (1.0 / u_norm) * inv.transfer_vel;

    // Canonical frame: rotate the tangent onto +x; conjugate if needed so the
    // pole acceleration lands on the +y side (then h > 0 and the frame
    // angular velocity is -|w|).
    const PolarForm tp = to_polar(inv.tangent_dir, pl);
    const double sign =
        (tp.angle.sector == Sector::GalileanLeft || tp.angle.sector == Sector::HyperbolicLeft)
            ? -1.0
            : 1.0;
    inv.frame.origin = inv.pole;
    inv.frame.rot = sign * exp_i(-tp.angle.theta, pl);
    inv.frame.rot_inv = sign * exp_i(tp.angle.theta, pl);
    inv.frame.flipped = inv.w > 0.0;

    const double h_analytic = u_norm / std::fabs(inv.w);
    if (pl.p == 0.0) {
        // The wedge inflection condition is identically zero at p = 0; the
        // limit locus is the parabola y = x^2/h with this diameter.
        inv.h = h_analytic;
        return inv;
    }

    // Fit rho*(theta) = h sinp(theta) over sampled rays; the rays' inflection
    // points come from the sign-change root of the normal-acceleration wedge.
    const double cap = pl.p < 0.0 ? 0.45 * std::numbers::pi / pl.root() : 0.9;
    const double span = std::fmin(0.9, cap);
    double num = 0.0;
    double den = 0.0;
    double roots[5];
    double sines[5];
    for (int k = 0; k < 5; ++k) {
        const double theta = span * (0.2 + 0.2 * k);
        roots[k] = inflection_root_on_ray(m, inv.frame, t, h_analytic, theta);
        sines[k] = sinp(theta, pl);
        num += roots[k] * sines[k];
        den += sines[k] * sines[k];
    }
    const double h_fit = num / den;
    for (int k = 0; k < 5; ++k)
        if (std::fabs(roots[k] - h_fit * sines[k]) > 1e-8 * std::fabs(h_fit))
            throw Error(ErrorCode::DegenerateMotion,
                        "inflection locus is not the p-circle rho* = h sinp(theta)");
    inv.h = h_fit;
    return inv;
}

double find_inflection_point(const MotionSpec& m, const InstantInvariants& inv, double theta) {
    const PlaneParam pl = m.plane();
    if (!std::isfinite(theta))
        throw Error(ErrorCode::OutOfRange, "ray angle must be finite");
    const double lo = 1e-9 * inv.h;
    const double hi = 1e3 * inv.h;
    if (pl.p == 0.0) {
        // Limit root of the vanishing wedge condition (see instant_invariants).
        const double rho = inv.h * theta;
        if (rho <= lo || rho > hi)
            throw Error(ErrorCode::NoRoot, "ray does not meet the inflection locus");
        return rho;
    }
    return inflection_root_on_ray(m, inv.frame, inv.t, inv.h, theta);
}

double find_inflection_point(const MotionSpec& m, double t, PAngle direction) {
    return find_inflection_point(m, instant_invariants(m, t), direction.theta);
}

GCNum trajectory_curvature_center(const MotionSpec& m, GCNum z, double t) {
    const PlaneParam pl = m.plane();
    if (pl.p == 0.0)
        throw Error(ErrorCode::DegenerateMotion,
                    "Galilean circles carry no curvature; no osculating center at p = 0");
    const GCNum v = absolute_velocity(m, z, t);
    const GCNum a = acceleration(m, z, t);
    const double denom = pl.p * wedge_raw(v, a);
    const double scale = std::fabs(pl.p) * (std::fabs(v.x) + std::fabs(v.y)) *
                         (std::fabs(a.x) + std::fabs(a.y));
    if (std::fabs(denom) <= 1e-14 * std::fmax(scale, 1e-300))
        throw Error(ErrorCode::InfiniteRadius, "trajectory is momentarily straight");
    const double alpha = quad(v, pl) / denom;
    return trajectory(m, z, t) - alpha * i_times(v, pl);
}

} // namespace gcp
