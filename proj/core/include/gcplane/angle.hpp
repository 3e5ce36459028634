#pragma once

#include "gcplane/number.hpp"
#include "gcplane/ptrig.hpp"

namespace gcp {

/// Region of the plane a p-angle parameterizes. For p < 0 the whole plane is
/// one region (Elliptic). For p = 0 the imaginary axis splits it in two; for
/// p > 0 the asymptotes cut four sectors. Within a sector, unit vectors are
///   Right:  +exp_i(theta)              Up:    +(sinh(ts), cosh(ts)/s)
///   Left:   -exp_i(theta)              Down:  -(sinh(ts), cosh(ts)/s)
/// with s = sqrt(p). p-rotations never leave a sector.
enum class Sector {
    Elliptic,
    GalileanRight,
    GalileanLeft,
    HyperbolicRight,
    HyperbolicUp,
    HyperbolicLeft,
    HyperbolicDown,
};

const char* sector_name(Sector s) noexcept;

/// A p-rotation angle plus the sector it lives in. For p < 0 angles produced
/// by to_polar are reduced modulo the period 2*pi/sqrt(|p|); kernels accept
/// unreduced angles (kinematics differentiates them).
struct PAngle {
    double theta = 0.0;
    Sector sector = Sector::Elliptic;
};

/// Magnitude-plus-angle decomposition z = (+-) r_p e^{i theta_p}, r_p >= 0.
/// The sector carries the sign/branch needed to reconstruct.
struct PolarForm {
    double r = 0.0;
    PAngle angle;
};

/// Generalized Euler formula: e^{i theta} = cosp(theta) + i sinp(theta).
/// Always a p-unit vector; exp_i(a)*exp_i(b) = exp_i(a+b).
inline GCNum exp_i(double theta, PlaneParam pl) {
    return {cosp(theta, pl), sinp(theta, pl)};
}

/// Polar decomposition. Null input has no polar form (NullDivisor; the
/// message names the null cone that was hit).
PolarForm to_polar(GCNum z, PlaneParam pl);

GCNum from_polar(PolarForm f, PlaneParam pl);

/// The p-rotation angle from z1 to z2: the theta satisfying both
/// <z1,z2> = |z1||z2| cosp(theta) and wedge_raw(z1,z2) = |z1||z2| sinp(theta).
/// For p >= 0 both vectors must share a sector (otherwise no real p-angle
/// exists: SectorMismatch). Reduced to the principal period for p < 0.
PAngle angle_between(GCNum z1, GCNum z2, PlaneParam pl);

} // namespace gcp
