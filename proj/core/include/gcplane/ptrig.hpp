#pragma once

#include "gcplane/plane.hpp"

namespace gcp {

// The p-trigonometric kernel, uniform over all real p:
//
//   cosp(t) = cos(t*sqrt(|p|))            p < 0
//             1                           p = 0
//             cosh(t*sqrt(p))             p > 0
//
//   sinp(t) = sin(t*sqrt(|p|))/sqrt(|p|)  p < 0
//             t                           p = 0
//             sinh(t*sqrt(p))/sqrt(p)     p > 0
//
// Branch dispatch on p = 0 is by exact comparison; both kernels are
// continuous in p (covered by a property test).

double cosp(double theta, PlaneParam pl);
double sinp(double theta, PlaneParam pl);

/// sinp/cosp. Throws PoleOfTangent when cosp vanishes (possible only for
/// p < 0, where cosp is bounded by 1; the pole test is |cosp| <= 1e-12).
double tanp(double theta, PlaneParam pl);

struct TrigDerivatives {
    double dcos; // d(cosp)/dtheta = p * sinp(theta)
    double dsin; // d(sinp)/dtheta = cosp(theta)
};

TrigDerivatives p_trig_derivatives(double theta, PlaneParam pl);

/// Inverse of tanp. Principal value in (-pi/(2 sqrt|p|), pi/(2 sqrt|p|)) for
/// p < 0; the identity map for p = 0; artanh-based for p > 0 where the range
/// of one hyperbolic sector is |v| < 1/sqrt(p) (outside it: OutOfRange).
double atanp(double v, PlaneParam pl);

} // namespace gcp
