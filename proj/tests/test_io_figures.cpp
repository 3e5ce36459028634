#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "gcplane/motion_io.hpp"
#include "gcplane/svg.hpp"
#include "gcplane/verify.hpp"

using namespace gcp;
using doctest::Approx;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::filesystem::path temp_file(const char* name) {
    return std::filesystem::temp_directory_path() / name;
}

} // namespace

TEST_CASE("motion spec JSON round trip") {
    const std::string text = R"({"p": -1.0, "theta": [0, 1], "tx": [0, 1], "ty": [0]})";
    const MotionSpec m = parse_motion_spec(text);
    CHECK(m.plane().p == -1.0);
    CHECK(m.theta(2.0) == 2.0);
    CHECK(m.translation(3.0).x == 3.0);

    const MotionSpec back = parse_motion_spec(motion_spec_to_json(m));
    CHECK(back.plane().p == m.plane().p);
    CHECK(back.theta_poly().coeffs() == m.theta_poly().coeffs());
    CHECK(back.tx_poly().coeffs() == m.tx_poly().coeffs());
}

TEST_CASE("decimal coefficients parse exactly") {
    const MotionSpec m =
        parse_motion_spec(R"({"p": 0.1, "theta": [0, 0.30000000000000004], "tx": [0], "ty": [0]})");
    CHECK(m.theta_poly().coeffs()[1] == 0.30000000000000004);
    CHECK(m.plane().p == 0.1);
}

TEST_CASE("malformed JSON reports line and column") {
    try {
        parse_motion_spec("{\"p\": -1.0,\n  \"theta\": [0, }");
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ParseError);
        CHECK(std::string(e.what()).find("line") != std::string::npos);
        CHECK(std::string(e.what()).find("column") != std::string::npos);
    }
}

TEST_CASE("schema violations are parse errors") {
    CHECK_THROWS_AS(parse_motion_spec(R"({"theta": [0,1], "tx": [0], "ty": [0]})"), Error);
    CHECK_THROWS_AS(parse_motion_spec(R"({"p": -1, "theta": [], "tx": [0], "ty": [0]})"), Error);
    CHECK_THROWS_AS(parse_motion_spec(R"({"p": -1, "theta": [0, "x"], "tx": [0], "ty": [0]})"),
                    Error);
    // degree-zero rotation is invalid input
    CHECK_THROWS_AS(parse_motion_spec(R"({"p": -1, "theta": [1], "tx": [0], "ty": [0]})"), Error);
}

TEST_CASE("bobillier input: both modes") {
    const BobillierInput raw = parse_bobillier_input(
        R"({"p": 1.0, "mode": "raw", "raw": {"rho_star": [1, 2, 3], "theta": [0.1, 0.2, 0.3]}})");
    CHECK(raw.mode == BobillierMode::Raw);
    CHECK(raw.rho_star[2] == 3.0);

    const BobillierInput motion = parse_bobillier_input(R"({
        "p": -1.0, "mode": "motion",
        "motion": {"spec": {"p": -1.0, "theta": [0,1], "tx": [0,1], "ty": [0]},
                   "t": 0.0, "angles": [0.5, 1.0, 1.5]}})");
    CHECK(motion.mode == BobillierMode::Motion);
    REQUIRE(motion.spec.has_value());
    CHECK(motion.angles[1] == 1.0);

    CHECK_THROWS_AS(parse_bobillier_input(R"({"p": 1.0, "mode": "nope"})"), Error);
    // inconsistent plane parameters
    CHECK_THROWS_AS(parse_bobillier_input(R"({
        "p": 1.0, "mode": "motion",
        "motion": {"spec": {"p": -1.0, "theta": [0,1], "tx": [0], "ty": [0]},
                   "t": 0.0, "angles": [0.5, 1.0, 1.5]}})"),
                    Error);
}

TEST_CASE("verify report JSON: stable keys, no timings by default") {
    VerifyOptions opts;
    opts.p_values = {-1.0, 1.0};
    opts.cases = 20;
    const VerifyReport report = run_verify(opts);
    CHECK(report.ok());
    const std::string json = verify_report_to_json(report);
    CHECK(json.find("\"p_values\":[-1,1]") != std::string::npos);
    CHECK(json.find("\"seed\":42") != std::string::npos);
    CHECK(json.find("\"timing_ms\"") == std::string::npos);
    CHECK(verify_report_to_json(report, true).find("\"timing_ms\"") != std::string::npos);

    // identical options, identical bytes
    const VerifyReport again = run_verify(opts);
    CHECK(verify_report_to_json(again) == json);
}

TEST_CASE("verify flags injected bugs") {
    VerifyOptions opts;
    opts.cases = 300;
    opts.inject = "bobillier-sign";
    const VerifyReport report = run_verify(opts);
    CHECK_FALSE(report.ok());
    bool found = false;
    for (const auto& f : report.failures)
        if (f.check == std::string("bobillier_inflection_circle")) found = true;
    CHECK(found);
}

TEST_CASE("circle figure: CSV locus points satisfy the unit equation") {
    for (double p : {-1.0, 0.0, 2.0}) {
        const auto svg = temp_file("gcp_test_circle.svg");
        const auto csv = temp_file("gcp_test_circle.csv");
        write_circle_figure(PlaneParam{p}, 128, svg.string(), csv.string());
        std::ifstream in(csv);
        std::string line;
        std::getline(in, line);
        CHECK(line == "x,y");
        int rows = 0;
        while (std::getline(in, line)) {
            double x, y;
            REQUIRE(std::sscanf(line.c_str(), "%lf,%lf", &x, &y) == 2);
            CHECK(std::fabs(std::fabs(x * x - p * y * y) - 1.0) <= 1e-9);
            ++rows;
        }
        CHECK(rows >= 128);
        const std::string svg_text = slurp(svg.string());
        CHECK(svg_text.find("gcplane figure format v1") != std::string::npos);
        if (p == 2.0)
            CHECK(svg_text.find("asymptote-slope: +-0.70710678118654746") != std::string::npos);
    }
}

TEST_CASE("inflection figure: emitted stations reproduce their equations") {
    const auto svg = temp_file("gcp_test_inflection.svg");
    const auto csv = temp_file("gcp_test_inflection.csv");
    const MotionSpec m = parse_motion_spec(R"({"p":-1,"theta":[0,1],"tx":[0,1],"ty":[0]})");
    write_inflection_figure(m, 0.0, {0.5, 0.9, 1.3}, svg.string(), csv.string());

    std::ifstream in(csv);
    std::string line;
    std::getline(in, line);
    CHECK(line == "label,x,y");
    GCNum pole{}, q1{}, q2{}, q3{};
    int locus_rows = 0;
    double locus_residual = 0.0;
    while (std::getline(in, line)) {
        char label[32];
        double x, y;
        REQUIRE(std::sscanf(line.c_str(), "%31[^,],%lf,%lf", label, &x, &y) == 3);
        const std::string l = label;
        if (l == "pole") pole = {x, y};
        if (l == "Q1") q1 = {x, y};
        if (l == "Q2") q2 = {x, y};
        if (l == "Q3") q3 = {x, y};
        if (l == "locus") {
            // cycloid inflection circle: center (0, 1/2), diameter 1
            locus_residual = std::fmax(
                locus_residual, std::fabs(x * x + (y - 0.5) * (y - 0.5) - 0.25));
            ++locus_rows;
        }
    }
    CHECK(locus_rows >= 64);
    CHECK(locus_residual <= 1e-9);
    CHECK(pole.y == Approx(1.0));
    // inversion images line up parallel to the tangent (constant y)
    CHECK(q1.y == Approx(q2.y).epsilon(1e-9));
    CHECK(q2.y == Approx(q3.y).epsilon(1e-9));
}

TEST_CASE("figures are byte-deterministic") {
    const auto a_svg = temp_file("gcp_det_a.svg");
    const auto a_csv = temp_file("gcp_det_a.csv");
    const auto b_svg = temp_file("gcp_det_b.svg");
    const auto b_csv = temp_file("gcp_det_b.csv");
    write_circle_figure(PlaneParam{-0.5}, 64, a_svg.string(), a_csv.string());
    write_circle_figure(PlaneParam{-0.5}, 64, b_svg.string(), b_csv.string());
    CHECK(slurp(a_svg.string()) == slurp(b_svg.string()));
    CHECK(slurp(a_csv.string()) == slurp(b_csv.string()));
}

TEST_CASE("figure writers surface filesystem failures") {
    CHECK_THROWS_WITH_AS(
        write_circle_figure(PlaneParam{-1}, 64, "/nonexistent-dir/x.svg", "/nonexistent-dir/x.csv"),
        doctest::Contains("IoError"), Error);
}
