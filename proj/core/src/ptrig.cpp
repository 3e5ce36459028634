#include "gcplane/ptrig.hpp"

#include <cmath>

namespace gcp {

double cosp(double theta, PlaneParam pl) {
    if (pl.p < 0.0) return std::cos(theta * pl.root());
    if (pl.p > 0.0) return std::cosh(theta * pl.root());
    return 1.0;
}

double sinp(double theta, PlaneParam pl) {
    if (pl.p < 0.0) {
        const double s = pl.root();
        return std::sin(theta * s) / s;
    }
    if (pl.p > 0.0) {
        const double s = pl.root();
        return std::sinh(theta * s) / s;
    }
    return theta;
}

double tanp(double theta, PlaneParam pl) {
    const double c = cosp(theta, pl);
    // cosp is bounded by 1 for p < 0 and >= 1 otherwise, so an absolute
    // pole test suffices.
    if (std::fabs(c) <= 1e-12)
        throw Error(ErrorCode::PoleOfTangent, "cosp vanishes at this angle");
    return sinp(theta, pl) / c;
}

TrigDerivatives p_trig_derivatives(double theta, PlaneParam pl) {
    return {pl.p * sinp(theta, pl), cosp(theta, pl)};
}

double atanp(double v, PlaneParam pl) {
    if (pl.p < 0.0) {
        const double s = pl.root();
        return std::atan(v * s) / s;
    }
    if (pl.p > 0.0) {
        const double s = pl.root();
        if (std::fabs(v) * s >= 1.0)
            throw Error(ErrorCode::OutOfRange,
                        "direction at or beyond the asymptote, tanp range is (-1/sqrt(p), 1/sqrt(p))");
        return std::atanh(v * s) / s;
    }
    return v;
}

} // namespace gcp
