#include "gcplane/motion_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace gcp {

namespace {

using json = nlohmann::json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::IoError, "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        // nlohmann reports "parse error at line L, column C: ..."
        throw Error(ErrorCode::ParseError, e.what());
    }
}

double require_number(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number())
        throw Error(ErrorCode::ParseError, std::string("missing or non-numeric field '") + key + "'");
    return j[key].get<double>();
}

std::vector<double> require_array(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_array() || j[key].empty())
        throw Error(ErrorCode::ParseError,
                    std::string("missing or empty coefficient array '") + key + "'");
    std::vector<double> out;
    out.reserve(j[key].size());
    for (const auto& v : j[key]) {
        if (!v.is_number())
            throw Error(ErrorCode::ParseError, std::string("non-numeric entry in '") + key + "'");
        out.push_back(v.get<double>());
    }
    return out;
}

std::array<double, 3> require_triple(const json& j, const char* key) {
    const auto v = require_array(j, key);
    if (v.size() != 3)
        throw Error(ErrorCode::ParseError, std::string("'") + key + "' must hold exactly 3 values");
    return {v[0], v[1], v[2]};
}

MotionSpec motion_from_json(const json& j) {
    const double p = require_number(j, "p");
    return MotionSpec(PlaneParam(p), Poly(require_array(j, "theta")), Poly(require_array(j, "tx")),
                      Poly(require_array(j, "ty")));
}

void append_number(std::string& out, double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    out += buf;
}

void append_coeffs(std::string& out, const char* key, const std::vector<double>& c) {
    out += '"';
    out += key;
    out += "\":[";
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) out += ',';
        append_number(out, c[i]);
    }
    out += ']';
}

} // namespace

MotionSpec parse_motion_spec(const std::string& json_text) {
    return motion_from_json(parse_json(json_text));
}

MotionSpec load_motion_spec(const std::string& path) {
    return parse_motion_spec(read_file(path));
}

std::string motion_spec_to_json(const MotionSpec& m) {
    std::string out = "{\"p\":";
    append_number(out, m.plane().p);
    out += ',';
    append_coeffs(out, "theta", m.theta_poly().coeffs());
    out += ',';
    append_coeffs(out, "tx", m.tx_poly().coeffs());
    out += ',';
    append_coeffs(out, "ty", m.ty_poly().coeffs());
    out += '}';
    return out;
}

BobillierInput parse_bobillier_input(const std::string& json_text) {
    const json j = parse_json(json_text);
    BobillierInput input;
    input.plane = PlaneParam(require_number(j, "p"));
    if (!j.contains("mode") || !j["mode"].is_string())
        throw Error(ErrorCode::ParseError, "missing 'mode' (\"raw\" or \"motion\")");
    const std::string mode = j["mode"].get<std::string>();
    if (mode == "raw") {
        input.mode = BobillierMode::Raw;
        if (!j.contains("raw") || !j["raw"].is_object())
            throw Error(ErrorCode::ParseError, "raw mode requires a 'raw' object");
        input.rho_star = require_triple(j["raw"], "rho_star");
        input.theta = require_triple(j["raw"], "theta");
    } else if (mode == "motion") {
        input.mode = BobillierMode::Motion;
        if (!j.contains("motion") || !j["motion"].is_object())
            throw Error(ErrorCode::ParseError, "motion mode requires a 'motion' object");
        const json& jm = j["motion"];
        if (!jm.contains("spec") || !jm["spec"].is_object())
            throw Error(ErrorCode::ParseError, "motion mode requires 'motion.spec'");
        input.spec = motion_from_json(jm["spec"]);
        if (input.spec->plane().p != input.plane.p)
            throw Error(ErrorCode::ParseError, "top-level 'p' disagrees with motion.spec.p");
        input.t = require_number(jm, "t");
        input.angles = require_triple(jm, "angles");
    } else {
        throw Error(ErrorCode::ParseError, "mode must be \"raw\" or \"motion\"");
    }
    return input;
}

BobillierInput load_bobillier_input(const std::string& path) {
    return parse_bobillier_input(read_file(path));
}

} // namespace gcp
