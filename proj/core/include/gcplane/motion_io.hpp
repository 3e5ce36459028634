#pragma once

#include <array>
#include <optional>
#include <string>

#include "gcplane/motion.hpp"

namespace gcp {

// MotionSpec wire format (UTF-8 JSON, ascending coefficient order):
//   { "p": real, "theta": [c0,c1,...], "tx": [...], "ty": [...] }

MotionSpec parse_motion_spec(const std::string& json_text);
MotionSpec load_motion_spec(const std::string& path);
std::string motion_spec_to_json(const MotionSpec& m);

enum class BobillierMode { Raw, Motion };

// Bobillier configuration wire format:
//   { "p": real, "mode": "raw"|"motion",
//     "raw":    { "rho_star": [r1,r2,r3], "theta": [t1,t2,t3] },
//     "motion": { "spec": MotionSpec, "t": real, "angles": [a1,a2,a3] } }
struct BobillierInput {
    PlaneParam plane{-1.0};
    BobillierMode mode = BobillierMode::Raw;
    std::array<double, 3> rho_star{};
    std::array<double, 3> theta{};
    std::optional<MotionSpec> spec;
    double t = 0.0;
    std::array<double, 3> angles{};
};

BobillierInput parse_bobillier_input(const std::string& json_text);
BobillierInput load_bobillier_input(const std::string& path);

} // namespace gcp
