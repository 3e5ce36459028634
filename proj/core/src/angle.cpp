#include "gcplane/angle.hpp"

#include <cmath>
#include <numbers>

namespace gcp {

const char* sector_name(Sector s) noexcept {
    switch (s) {
        case Sector::Elliptic: return "Elliptic";
        case Sector::GalileanRight: return "GalileanRight";
        case Sector::GalileanLeft: return "GalileanLeft";
        case Sector::HyperbolicRight: return "HyperbolicRight";
        case Sector::HyperbolicUp: return "HyperbolicUp";
        case Sector::HyperbolicLeft: return "HyperbolicLeft";
        case Sector::HyperbolicDown: return "HyperbolicDown";
    }
    return "UnknownSector";
}

namespace {

// Reduce an elliptic angle to the principal period (-pi/s, pi/s].
double reduce_elliptic(double theta, double s) {
    const double two_pi = 2.0 * std::numbers::pi;
    double r = std::remainder(theta * s, two_pi);
    if (r <= -std::numbers::pi) r += two_pi;
    return r / s;
}

} // namespace

PolarForm to_polar(GCNum z, PlaneParam pl) {
    if (pl.p < 0.0) {
        if (is_null(z, pl))
            throw Error(ErrorCode::NullDivisor, "the origin has no polar form");
        const double s = pl.root();
        const double theta = std::atan2(z.y * s, z.x) / s;
        return {norm(z, pl), {theta, Sector::Elliptic}};
    }
    if (pl.p == 0.0) {
        if (is_null(z, pl))
            throw Error(ErrorCode::NullDivisor,
                        "point on the imaginary axis (x = 0), the Galilean null line");
        return {std::fabs(z.x),
                {z.y / z.x, z.x > 0.0 ? Sector::GalileanRight : Sector::GalileanLeft}};
    }
    // p > 0
    if (is_null(z, pl))
        throw Error(ErrorCode::NullDivisor, "point on an asymptote y = +-x/sqrt(p)");
    const double s = pl.root();
    const double q = quad(z, pl);
    if (q > 0.0) {
        const double theta = std::atanh(z.y * s / z.x) / s;
        return {std::sqrt(q),
                {theta, z.x > 0.0 ? Sector::HyperbolicRight : Sector::HyperbolicLeft}};
    }
    const double theta = std::atanh(z.x / (z.y * s)) / s;
    return {std::sqrt(-q), {theta, z.y > 0.0 ? Sector::HyperbolicUp : Sector::HyperbolicDown}};
}

GCNum from_polar(PolarForm f, PlaneParam pl) {
    const double th = f.angle.theta;
    switch (f.angle.sector) {
        case Sector::Elliptic:
        case Sector::GalileanRight:
        case Sector::HyperbolicRight:
            return f.r * exp_i(th, pl);
        case Sector::GalileanLeft:
        case Sector::HyperbolicLeft:
            return (-f.r) * exp_i(th, pl);
        case Sector::HyperbolicUp:
        case Sector::HyperbolicDown: {
            const double s = pl.root();
            GCNum up{std::sinh(th * s), std::cosh(th * s) / s};
            return (f.angle.sector == Sector::HyperbolicUp ? f.r : -f.r) * up;
        }
    }
    return {};
}

PAngle angle_between(GCNum z1, GCNum z2, PlaneParam pl) {
    const PolarForm f1 = to_polar(z1, pl);
    const PolarForm f2 = to_polar(z2, pl);
    if (pl.p >= 0.0 && f1.angle.sector != f2.angle.sector)
        throw Error(ErrorCode::SectorMismatch,
                    std::string("no real p-angle between sectors ") +
                        sector_name(f1.angle.sector) + " and " + sector_name(f2.angle.sector));
    double theta = f2.angle.theta - f1.angle.theta;
    if (pl.p < 0.0) theta = reduce_elliptic(theta, pl.root());
    return {theta, f1.angle.sector};
}

} // namespace gcp
