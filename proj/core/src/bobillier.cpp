#include "gcplane/bobillier.hpp"

#include <cmath>

namespace gcp {

namespace {

void validate_ray(GCNum x, PlaneParam pl) {
    if (is_null(x, pl))
        throw Error(ErrorCode::NullDivisor, "pole ray on the null cone has no p-angle");
    const double q = quad(x, pl);
    if (pl.p > 0.0 && q < 0.0)
        throw Error(ErrorCode::SectorMismatch, "pole ray in the cosp-negative sector");
    if (std::fabs(q - 1.0) > 1e-9)
        throw Error(ErrorCode::OutOfRange, "pole ray direction must be a p-unit vector");
}

} // namespace

BobillierConfig BobillierConfig::make(PlaneParam pl, std::array<PoleRayStation, 3> stations) {
    for (const auto& st : stations) validate_ray(st.x_dir, pl);
    if (pl.p > 0.0) {
        const Sector s0 = to_polar(stations[0].x_dir, pl).angle.sector;
        for (int k = 1; k < 3; ++k)
            if (to_polar(stations[k].x_dir, pl).angle.sector != s0)
                throw Error(ErrorCode::SectorMismatch, "pole rays span different sectors");
    }
    BobillierConfig cfg{pl, stations, 0.0, 0.0, 0.0};
    cfg.theta23 = stations[2].theta.theta - stations[1].theta.theta;
    cfg.theta31 = stations[0].theta.theta - stations[2].theta.theta;
    cfg.theta12 = -(cfg.theta23 + cfg.theta31); // cyclic sum exactly zero
    return cfg;
}

BobillierConfig make_bobillier_config(PlaneParam pl, std::array<double, 3> rho_star,
                                      std::array<double, 3> theta) {
    std::array<PoleRayStation, 3> stations;
    for (int k = 0; k < 3; ++k) {
        stations[k].x_dir = exp_i(theta[k], pl);
        Sector s = Sector::Elliptic;
        if (pl.p == 0.0) s = Sector::GalileanRight;
        if (pl.p > 0.0) s = Sector::HyperbolicRight;
        stations[k].theta = {theta[k], s};
        stations[k].rho = 0.0; // not measured in raw mode
        stations[k].rho_prime = 0.0;
        stations[k].rho_star = rho_star[k];
    }
    return BobillierConfig::make(pl, stations);
}

double bobillier_residual(const BobillierConfig& cfg) {
    return cfg.stations[0].rho_star * sinp(cfg.theta23, cfg.plane) +
           cfg.stations[1].rho_star * sinp(cfg.theta31, cfg.plane) +
           cfg.stations[2].rho_star * sinp(cfg.theta12, cfg.plane);
}

double rho_star_kinematic(const InstantInvariants& inv, GCNum x_dir, PlaneParam pl) {
    validate_ray(x_dir, pl);
    const GCNum u_f = inv.frame.dir_to_frame(inv.transfer_vel, pl);
    return wedge_raw(x_dir, u_f) / inv.frame_w();
}

std::array<double, 3> dependence_coefficients(GCNum x1, GCNum x2, GCNum x3, PlaneParam pl) {
    validate_ray(x1, pl);
    validate_ray(x2, pl);
    validate_ray(x3, pl);
    if (pl.p > 0.0) {
        const Sector s1 = to_polar(x1, pl).angle.sector;
        if (to_polar(x2, pl).angle.sector != s1 || to_polar(x3, pl).angle.sector != s1)
            throw Error(ErrorCode::SectorMismatch, "pole rays span different sectors");
    }
    return {wedge_raw(x2, x3), wedge_raw(x3, x1), wedge_raw(x1, x2)};
}

double bobillier_kinematic_check(const MotionSpec& m, double t, std::array<double, 3> angles) {
    const PlaneParam pl = m.plane();
    const InstantInvariants inv = instant_invariants(m, t);
    std::array<PoleRayStation, 3> stations;
    for (int k = 0; k < 3; ++k) {
        stations[k].x_dir = exp_i(angles[k], pl);
        Sector s = Sector::Elliptic;
        if (pl.p == 0.0) s = Sector::GalileanRight;
        if (pl.p > 0.0) s = Sector::HyperbolicRight;
        stations[k].theta = {angles[k], s};
        stations[k].rho_star = rho_star_kinematic(inv, stations[k].x_dir, pl);
    }
    return bobillier_residual(BobillierConfig::make(pl, stations));
}

double specialized_residual(SpecialCase which, std::array<double, 3> rho_star,
                            std::array<double, 3> pairwise) {
    switch (which) {
        case SpecialCase::Elliptical:
            return rho_star[0] * std::sin(pairwise[0]) + rho_star[1] * std::sin(pairwise[1]) +
                   rho_star[2] * std::sin(pairwise[2]);
        case SpecialCase::Parabolic:
            return rho_star[0] * pairwise[0] + rho_star[1] * pairwise[1] +
                   rho_star[2] * pairwise[2];
        case SpecialCase::Hyperbolic:
            return rho_star[0] * std::sinh(pairwise[0]) + rho_star[1] * std::sinh(pairwise[1]) +
                   rho_star[2] * std::sinh(pairwise[2]);
    }
    return 0.0;
}

} // namespace gcp
