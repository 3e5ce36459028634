#pragma once

#include "gcplane/angle.hpp"
#include "gcplane/polynomial.hpp"

namespace gcp {

/// One-parameter planar motion of the moving plane K_p over the fixed plane
/// K'_p: a point z fixed in K_p sits at
///
///     z'(t) = T(t) + M^p(e^{i theta(t)}, z)
///
/// in the fixed plane. The rotation angle theta(t) and the translation
/// components T(t) are polynomials so every time derivative is exact.
class MotionSpec {
public:
    MotionSpec(PlaneParam plane, Poly theta, Poly tx, Poly ty)
        : plane_(plane), theta_(std::move(theta)), tx_(std::move(tx)), ty_(std::move(ty)) {
        if (theta_.effective_degree() < 1)
            throw Error(ErrorCode::InvalidMotion,
                        "rotation angle polynomial must have degree >= 1");
        dtheta_ = theta_.derivative();
        ddtheta_ = dtheta_.derivative();
        dtx_ = tx_.derivative();
        dty_ = ty_.derivative();
        ddtx_ = dtx_.derivative();
        ddty_ = dty_.derivative();
    }

    PlaneParam plane() const { return plane_; }
    double theta(double t) const { return theta_(t); }
    double omega(double t) const { return dtheta_(t); }
    double omega_dot(double t) const { return ddtheta_(t); }
    GCNum translation(double t) const { return {tx_(t), ty_(t)}; }
    GCNum translation_vel(double t) const { return {dtx_(t), dty_(t)}; }
    GCNum translation_acc(double t) const { return {ddtx_(t), ddty_(t)}; }

    const Poly& theta_poly() const { return theta_; }
    const Poly& tx_poly() const { return tx_; }
    const Poly& ty_poly() const { return ty_; }

private:
    PlaneParam plane_;
    Poly theta_, tx_, ty_;
    Poly dtheta_, ddtheta_, dtx_, dty_, ddtx_, ddty_;
};

/// Velocity decomposition at one instant, all in fixed-plane coordinates.
/// absolute = relative + sliding holds componentwise; for points fixed in
/// the moving plane the relative part is zero up to roundoff.
struct KinematicState {
    GCNum absolute;     // exact time derivative of the trajectory
    GCNum sliding;      // w ^_p (X - I), the rotation field about the pole
    GCNum relative;     // absolute - sliding
    GCNum acceleration; // exact second time derivative
};

/// The three terms of the acceleration about the pole:
///   J_a(N) = J_r(I) + w_dot i D + w^2 p D,   D = fixed-frame offset from I.
/// (The radial term carries the factor p; at p = -1 it is the classical
/// centripetal -w^2 D.)
struct AccelTerms {
    GCNum pole;    // J_r(I), acceleration of the material point at the pole
    GCNum angular; // w_dot i D
    GCNum radial;  // w^2 p D
};

/// Canonical frame of an instant: origin at the pole, +x along the common
/// tangent of the pole curves, +y chosen so the pole acceleration points to
/// the +y side (the inflection circle then has positive diameter h and
/// rho*(theta) = h sinp(theta) with theta measured from +x). The map is a
/// p-isometry: a unit-modulus multiplication, optionally composed with
/// conjugation. In frame coordinates the effective angular velocity is
/// -|w| when the conjugation flip is applied.
struct PoleFrame {
    GCNum origin;     // pole, fixed-plane coordinates
    GCNum rot;        // unit factor applied as  mul(rot, z - origin)
    GCNum rot_inv;    // inverse factor
    bool flipped = false;

    GCNum to_frame(GCNum z, PlaneParam pl) const {
        GCNum f = mul(rot, z - origin, pl);
        return flipped ? conj(f) : f;
    }
    GCNum from_frame(GCNum f, PlaneParam pl) const {
        if (flipped) f = conj(f);
        return mul(rot_inv, f, pl) + origin;
    }
    /// Directions transform without the translation part.
    GCNum dir_to_frame(GCNum v, PlaneParam pl) const {
        GCNum f = mul(rot, v, pl);
        return flipped ? conj(f) : f;
    }
    GCNum dir_from_frame(GCNum f, PlaneParam pl) const {
        if (flipped) f = conj(f);
        return mul(rot_inv, f, pl);
    }
};

/// Instantaneous invariants of the motion at time t.
struct InstantInvariants {
    double t = 0.0;
    GCNum pole;           // fixed-plane coordinates of I
    double w = 0.0;       // angular velocity theta'(t), nonzero
    double w_dot = 0.0;   // theta''(t)
    GCNum pole_accel;     // J_r(I), fixed-plane coordinates
    double h = 0.0;       // inflection circle diameter, > 0 in the oriented frame
    GCNum tangent_dir;    // p-unit common tangent of the pole curves (fixed plane)
    GCNum transfer_vel;   // pole transfer velocity u = d/dt [pole locus]
    PoleFrame frame;

    /// Angular velocity as seen in frame coordinates (the conjugation flip
    /// reverses it; with the +y-toward-pole-accel orientation this is -|w|).
    double frame_w() const { return frame.flipped ? -w : w; }
};

/// Fixed-plane position of the moving point z at time t.
GCNum trajectory(const MotionSpec& m, GCNum z, double t);

/// Moving-plane point currently occupying the fixed-plane position `pos`.
GCNum moving_point_at(const MotionSpec& m, GCNum pos, double t);

/// Exact time derivative of the trajectory. Never fails.
GCNum absolute_velocity(const MotionSpec& m, GCNum z, double t);

/// Exact second time derivative of the trajectory. Never fails.
GCNum acceleration(const MotionSpec& m, GCNum z, double t);

/// Full velocity decomposition about the instantaneous pole.
/// Throws NoPole / NullDivisor when the pole does not exist at t.
KinematicState velocity(const MotionSpec& m, GCNum z, double t);

/// Acceleration split into the pole / angular / radial terms; the terms sum
/// to the exact acceleration. Same pole-existence requirements as velocity().
AccelTerms acceleration_terms(const MotionSpec& m, GCNum z, double t);

/// The unique moving-plane point with zero absolute velocity, returned in
/// fixed-plane coordinates. Throws NoPole when theta'(t) = 0 and NullDivisor
/// when the pole lies at infinity along a null direction (p = 0 with
/// horizontally drifting translation).
GCNum instantaneous_pole(const MotionSpec& m, double t);

/// Same point in moving-plane coordinates (for p = 0 the pole is determined
/// only up to the null direction; the representative with zero imaginary
/// part is returned).
GCNum instantaneous_pole_moving(const MotionSpec& m, double t);

/// Pole, angular velocity, pole acceleration, common tangent, transfer
/// velocity, inflection-circle diameter and the canonical frame.
/// h is the least-squares fit of rho*(theta) = h sinp(theta) over sampled
/// rays (the analytic candidate ||u||/|w| is asserted against it in tests).
/// Throws NoPole / NullDivisor / DegenerateMotion.
InstantInvariants instant_invariants(const MotionSpec& m, double t);

/// Signed distance along the canonical-frame ray at `direction` where the
/// trajectory normal acceleration vanishes (wedge_raw(V_a, J_a) = 0), root
/// isolated by sign change and refined by bisection to relative 1e-12.
/// The bracket is (1e-9 h, 1e3 h]; no root there is NoRoot (in particular
/// the tangent ray theta = 0, whose only inflection point is the pole).
/// At p = 0 the wedge condition is identically zero; the p -> 0 limit of the
/// root, h * theta, is returned instead.
double find_inflection_point(const MotionSpec& m, double t, PAngle direction);
double find_inflection_point(const MotionSpec& m, const InstantInvariants& inv, double theta);

/// Center of the osculating p-circle of the trajectory of z at time t:
///   C = z' - <V,V> iV / (p wedge_raw(V, J)).
/// Throws DegenerateMotion for p = 0 (first-definition circles carry no
/// curvature) and InfiniteRadius when the trajectory is momentarily straight.
GCNum trajectory_curvature_center(const MotionSpec& m, GCNum z, double t);

} // namespace gcp
