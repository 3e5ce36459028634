#pragma once

#include "gcplane/motion.hpp"

namespace gcp {

/// Per-ray bundle measured in the canonical pole frame: p-unit direction X,
/// the signed p-distances rho (point), rho_prime (its trajectory curvature
/// center) and rho_star (the ray's inflection point). Distances are signed
/// with the ray orientation; when all three are present they satisfy
/// 1/rho_star = 1/rho - 1/rho_prime.
struct PoleRayStation {
    GCNum x_dir;
    PAngle theta;
    double rho = 0.0;
    double rho_prime = 0.0;
    double rho_star = 0.0;
};

/// Result of an Euler-Savary solve: either a finite curvature-center
/// distance, or the inflection outcome (the queried point lies on the
/// inflection locus, so the center recedes to infinity). InfiniteRadius is
/// a distinguished success value, not an error.
struct EulerSavaryResult {
    bool infinite = false;
    double value = 0.0;
};

/// Euler-Savary relation 1/r' - 1/r = sinp(theta) (1/a' - 1/a), solved for
/// a'. r, r' are the signed curvature radii of the moving and fixed pole
/// curves, a the signed p-distance of the queried point along the ray at
/// `theta` from the common tangent. Throws TangentRay when sinp(theta) = 0
/// and ZeroDistance when a, r or r' vanishes.
EulerSavaryResult euler_savary_solve(double r, double r_prime, double a, PAngle theta,
                                     PlaneParam pl);

/// rho* = 1/(1/rho - 1/rho'). Throws CircularTrajectory when rho = rho'
/// (curvature center at the point's own distance) and ZeroDistance on zero
/// input.
double rho_star_geometric(double rho, double rho_prime);

/// Inversion image Q = X / rho* of a ray's inflection point, with its
/// coordinate on the common normal. Images of one instant's inflection
/// points line up on a straight line parallel to the common tangent at
/// height 1/h.
struct InversionImage {
    GCNum q;
    double height = 0.0;
};

InversionImage inversion_image(const PoleRayStation& station);

/// wedge(Q1,Q2) + wedge(Q3,Q1) + wedge(Q2,Q3); zero iff the images are
/// collinear.
double collinearity_residual(const InversionImage& q1, const InversionImage& q2,
                             const InversionImage& q3);

/// Signed curvature radii of the moving (r) and fixed (r') pole curves,
/// measured by a three-point parabolic fit of each sampled locus in the
/// canonical frame. The sample spacing is adaptive: rel_spacing of the
/// instant's length scale h divided by the transfer speed.
struct PoleCurveRadii {
    double moving = 0.0; // r
    double fixed = 0.0;  // r'
};

PoleCurveRadii measured_pole_curvatures(const MotionSpec& m, double t,
                                        double rel_spacing = 1e-3);

/// Full station measurement at signed distance `a` along the frame ray at
/// `theta`: rho = a, rho' from the trajectory's osculating center (for
/// p = 0 from the harmonic relation, where circles carry no curvature),
/// rho* from the motion's inflection point on that ray.
PoleRayStation make_station(const MotionSpec& m, const InstantInvariants& inv, double theta,
                            double a);

} // namespace gcp
