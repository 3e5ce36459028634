#pragma once

#include <array>

#include "gcplane/euler_savary.hpp"

namespace gcp {

/// Three pole rays of one instant with their inflection distances and the
/// pairwise p-angles theta23 = theta3 - theta2, theta31 = theta1 - theta3,
/// theta12 = theta2 - theta1. The last one is computed as -(theta23 +
/// theta31) so the cyclic sum is exactly zero in floating point.
struct BobillierConfig {
    PlaneParam plane;
    std::array<PoleRayStation, 3> stations;
    double theta23 = 0.0;
    double theta31 = 0.0;
    double theta12 = 0.0;

    static BobillierConfig make(PlaneParam pl, std::array<PoleRayStation, 3> stations);
};

/// Convenience constructor from raw (rho*, theta) triples, station angles in
/// the canonical frame.
BobillierConfig make_bobillier_config(PlaneParam pl, std::array<double, 3> rho_star,
                                      std::array<double, 3> theta);

/// Left-hand side of the Bobillier identity
///   rho1* sinp(theta23) + rho2* sinp(theta31) + rho3* sinp(theta12);
/// zero (to tolerance) certifies the configuration belongs to one instant of
/// one motion.
double bobillier_residual(const BobillierConfig& cfg);

/// Inflection distance of the frame ray with p-unit direction X, from the
/// instant's invariants:  rho* = wedge_raw(X, u) / w  evaluated in frame
/// coordinates, which equals -<J_r(I), X>_p / (p w^2) for p != 0 and extends
/// it continuously to p = 0. Matches find_inflection_point's root wherever
/// that root exists.
double rho_star_kinematic(const InstantInvariants& inv, GCNum x_dir, PlaneParam pl);

/// Coefficients (sinp(theta23), sinp(theta31), sinp(theta12)) of the linear
/// dependence l1 X1 + l2 X2 + l3 X3 = 0, extracted from wedge_raw pairs.
/// All directions must be p-unit, non-null and (for p > 0) in one sector.
std::array<double, 3> dependence_coefficients(GCNum x1, GCNum x2, GCNum x3, PlaneParam pl);

/// End-to-end kinematic route: build rho*_k from the invariants of (m, t)
/// on the rays at `angles` (canonical frame), assemble the configuration and
/// return its Bobillier residual. The velocity/acceleration derivation
/// guarantees the result vanishes to roundoff.
double bobillier_kinematic_check(const MotionSpec& m, double t, std::array<double, 3> angles);

enum class SpecialCase { Elliptical, Parabolic, Hyperbolic };

/// The printed special forms of the identity: sin at p = -1, plain angles at
/// p = 0, sinh at p = +1. `pairwise` holds (theta23, theta31, theta12).
double specialized_residual(SpecialCase which, std::array<double, 3> rho_star,
                            std::array<double, 3> pairwise);

} // namespace gcp
