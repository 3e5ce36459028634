#pragma once

#include <cmath>

#include "gcplane/error.hpp"

namespace gcp {

enum class GeometryKind { Elliptical, Parabolic, Hyperbolic };

/// Selector of the plane geometry: the real number p in i^2 = p.
/// p < 0 is elliptical, p = 0 parabolic (Galilean), p > 0 hyperbolic
/// (Lorentzian). Classification is exact, no epsilon band.
struct PlaneParam {
    double p;

    explicit PlaneParam(double value) : p(value) {
        if (!std::isfinite(value))
            throw Error(ErrorCode::OutOfRange, "plane parameter must be finite");
    }

    GeometryKind kind() const noexcept {
        if (p < 0.0) return GeometryKind::Elliptical;
        if (p > 0.0) return GeometryKind::Hyperbolic;
        return GeometryKind::Parabolic;
    }

    /// sqrt(|p|); the frequency/rapidity scale of the p-trig kernels.
    double root() const noexcept { return std::sqrt(std::fabs(p)); }
};

// Relative tolerance used for null detection; anything closer to the null
// cone than this is treated as a zero divisor because downstream division
// amplifies it.
inline constexpr double kNullTol = 1e-12;

} // namespace gcp
