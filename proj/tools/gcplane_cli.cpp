// gcplane: arithmetic, p-trigonometry and planar kinematics in the
// generalized complex plane, with figure emission and a property-based
// verification sweep.

#include <array>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <numbers>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gcplane/bobillier.hpp"
#include "gcplane/motion_io.hpp"
#include "gcplane/svg.hpp"
#include "gcplane/verify.hpp"

namespace {

int exit_code_for(gcp::ErrorCode code) {
    switch (code) {
        case gcp::ErrorCode::ParseError:
        case gcp::ErrorCode::IoError:
        case gcp::ErrorCode::InvalidMotion:
        case gcp::ErrorCode::OutOfRange:
            return 2;
        default:
            return 3;
    }
}

std::string json_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string csv_sibling(const std::string& out_path) {
    std::filesystem::path p(out_path);
    p.replace_extension(".csv");
    return p.string();
}

int run_circle(double p, const std::string& out, int samples) {
    gcp::write_circle_figure(gcp::PlaneParam(p), samples, out, csv_sibling(out));
    std::cerr << "wrote " << out << " and " << csv_sibling(out) << "\n";
    return 0;
}

int run_inflection(const std::string& config, double t, const std::string& out,
                   std::vector<double> angles) {
    const gcp::MotionSpec m = gcp::load_motion_spec(config);
    const double span =
        m.plane().p < 0.0 ? 0.45 * std::numbers::pi / m.plane().root() : 0.9;
    std::array<double, 3> rays{0.35 * span, 0.65 * span, 0.95 * span};
    if (!angles.empty()) {
        if (angles.size() != 3)
            throw gcp::Error(gcp::ErrorCode::OutOfRange, "--angles needs exactly three values");
        rays = {angles[0], angles[1], angles[2]};
    }
    gcp::write_inflection_figure(m, t, rays, out, csv_sibling(out));
    std::cerr << "wrote " << out << " and " << csv_sibling(out) << "\n";
    return 0;
}

int run_verify(std::vector<double> p_values, std::uint64_t seed, std::int64_t cases, double tol,
               bool timings, const std::string& inject) {
    gcp::VerifyOptions opts;
    if (!p_values.empty()) opts.p_values = std::move(p_values);
    opts.seed = seed;
    opts.cases = cases;
    opts.tol = tol;
    opts.inject = inject;
    const gcp::VerifyReport report = gcp::run_verify(opts);
    std::cout << gcp::verify_report_to_json(report, timings);
    if (!report.ok()) {
        std::cerr << report.failures.size() << " failing cases, first in check '"
                  << report.failures.front().check << "'\n";
        return 1;
    }
    return 0;
}

int run_bobillier(const std::string& config) {
    const gcp::BobillierInput input = gcp::load_bobillier_input(config);
    const gcp::PlaneParam pl = input.plane;

    std::array<double, 3> rho_star{};
    std::array<double, 3> theta{};
    std::string h_field = "null";
    if (input.mode == gcp::BobillierMode::Raw) {
        rho_star = input.rho_star;
        theta = input.theta;
    } else {
        const gcp::InstantInvariants inv = gcp::instant_invariants(*input.spec, input.t);
        theta = input.angles;
        for (int k = 0; k < 3; ++k)
            rho_star[k] = gcp::rho_star_kinematic(inv, gcp::exp_i(theta[k], pl), pl);
        h_field = json_number(inv.h);
    }

    const gcp::BobillierConfig cfg = gcp::make_bobillier_config(pl, rho_star, theta);
    const double geometric = gcp::bobillier_residual(cfg);

    // second route: wedge-extracted dependence coefficients
    const auto lambda = gcp::dependence_coefficients(cfg.stations[0].x_dir, cfg.stations[1].x_dir,
                                                     cfg.stations[2].x_dir, pl);
    const double kinematic =
        lambda[0] * rho_star[0] + lambda[1] * rho_star[1] + lambda[2] * rho_star[2];

    std::string specialized = "null";
    if (pl.p == -1.0 || pl.p == 0.0 || pl.p == 1.0) {
        const gcp::SpecialCase sc = pl.p < 0.0   ? gcp::SpecialCase::Elliptical
                                    : pl.p > 0.0 ? gcp::SpecialCase::Hyperbolic
                                                 : gcp::SpecialCase::Parabolic;
        const double value =
            gcp::specialized_residual(sc, rho_star, {cfg.theta23, cfg.theta31, cfg.theta12});
        const char* name = pl.p < 0.0 ? "elliptical" : (pl.p > 0.0 ? "hyperbolic" : "parabolic");
        specialized = std::string("{\"case\":\"") + name + "\",\"value\":" + json_number(value) + "}";
    }

    std::string out = "{\"p\":" + json_number(pl.p);
    out += std::string(",\"mode\":\"") + (input.mode == gcp::BobillierMode::Raw ? "raw" : "motion") + "\"";
    out += ",\"rho_star\":[" + json_number(rho_star[0]) + "," + json_number(rho_star[1]) + "," +
           json_number(rho_star[2]) + "]";
    out += ",\"theta\":[" + json_number(theta[0]) + "," + json_number(theta[1]) + "," +
           json_number(theta[2]) + "]";
    out += ",\"pairwise\":[" + json_number(cfg.theta23) + "," + json_number(cfg.theta31) + "," +
           json_number(cfg.theta12) + "]";
    out += ",\"residual_geometric\":" + json_number(geometric);
    out += ",\"residual_kinematic\":" + json_number(kinematic);
    out += ",\"difference\":" + json_number(geometric - kinematic);
    out += ",\"specialized\":" + specialized;
    out += ",\"h\":" + h_field;
    out += "}\n";
    std::cout << out;
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"generalized complex plane toolkit"};
    app.require_subcommand(1);

    double p = -1.0;
    double t = 0.0;
    std::string out;
    std::string config;
    int samples = 256;
    std::vector<double> p_list;
    std::vector<double> angles;
    std::uint64_t seed = 42;
    std::int64_t cases = 10000;
    double tol = 1e-8;
    bool timings = false;
    std::string inject;

    auto* circle = app.add_subcommand("circle", "emit the unit circle figure of C_p");
    circle->add_option("--p", p, "plane parameter")->required();
    circle->add_option("--out", out, "output SVG path (CSV written alongside)")->required();
    circle->add_option("--samples", samples, "locus sample count")->check(CLI::Range(16, 1 << 20));

    auto* inflection = app.add_subcommand("inflection", "emit the inflection circle figure of a motion instant");
    inflection->add_option("--config", config, "motion spec JSON")->required();
    inflection->add_option("--t", t, "instant");
    inflection->add_option("--out", out, "output SVG path (CSV written alongside)")->required();
    inflection
        ->add_option("--angles", angles,
                     "three pole-ray angles from the common tangent (avoid the tangent ray)")
        ->delimiter(',');

    auto* verify = app.add_subcommand("verify", "run the property battery and print a JSON report");
    verify->add_option("--p", p_list, "plane parameters to sweep")->delimiter(',');
    verify->add_option("--seed", seed, "RNG seed (reported for reproducibility)");
    verify->add_option("--cases", cases, "cases per check and plane")->check(CLI::PositiveNumber);
    verify->add_option("--tol", tol, "failure threshold on normalized residuals");
    verify->add_flag("--timings", timings, "append per-check timings (breaks byte-reproducibility)");
    verify->add_option("--inject", inject, "testing hook: inject a known bug")
        ->check(CLI::IsMember({"bobillier-sign"}));

    auto* bobillier = app.add_subcommand("bobillier", "evaluate the Bobillier identity by both routes");
    bobillier->add_option("--config", config, "configuration JSON (raw or motion mode)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    try {
        if (circle->parsed()) return run_circle(p, out, samples);
        if (inflection->parsed()) return run_inflection(config, t, out, angles);
        if (verify->parsed()) return run_verify(p_list, seed, cases, tol, timings, inject);
        if (bobillier->parsed()) return run_bobillier(config);
    } catch (const gcp::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
