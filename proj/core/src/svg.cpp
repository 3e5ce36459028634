#include "gcplane/svg.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>

#include "gcplane/euler_savary.hpp"

namespace gcp {

namespace {

std::string fmt(double v, const char* spec = "%.8g") {
    char buf[40];
    std::snprintf(buf, sizeof(buf), spec, v);
    return buf;
}

std::string fmt17(double v) { return fmt(v, "%.17g"); }

} // namespace

void SvgBuilder::add_polyline(const std::vector<GCNum>& pts, const std::string& stroke,
                              double width, bool dashed) {
    if (pts.size() < 2) return;
    lines_.push_back({pts, stroke, width, dashed});
}

void SvgBuilder::add_segment(GCNum a, GCNum b, const std::string& stroke, double width,
                             bool dashed) {
    add_polyline({a, b}, stroke, width, dashed);
}

void SvgBuilder::add_marker(GCNum at, double radius, const std::string& fill) {
    markers_.push_back({at, radius, fill});
}

void SvgBuilder::add_label(GCNum at, const std::string& text) { labels_.push_back({at, text}); }

void SvgBuilder::add_metadata(const std::string& comment) { metadata_.push_back(comment); }

std::string SvgBuilder::render() const {
    double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
    const auto grow = [&](GCNum p) {
        xmin = std::fmin(xmin, p.x);
        xmax = std::fmax(xmax, p.x);
        ymin = std::fmin(ymin, p.y);
        ymax = std::fmax(ymax, p.y);
    };
    for (const auto& l : lines_)
        for (const auto& p : l.pts) grow(p);
    for (const auto& m : markers_) grow(m.at);
    for (const auto& l : labels_) grow(l.at);
    if (xmin > xmax) {
        xmin = ymin = -1.0;
        xmax = ymax = 1.0;
    }
    const double margin = 0.1 * std::fmax(xmax - xmin, ymax - ymin) + 1e-9;
    xmin -= margin;
    xmax += margin;
    ymin -= margin;
    ymax += margin;

    std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" + fmt(xmin) + " " +
                      fmt(-ymax) + " " + fmt(xmax - xmin) + " " + fmt(ymax - ymin) + "\">\n";
    out += "<!-- gcplane figure format v1 -->\n";
    for (const auto& c : metadata_) out += "<!-- " + c + " -->\n";
    // math coordinates: y grows upward
    out += "<g transform=\"scale(1,-1)\">\n";
    for (const auto& l : lines_) {
        out += "<polyline fill=\"none\" stroke=\"" + l.stroke + "\" stroke-width=\"" +
               fmt(l.width) + "\"";
        if (l.dashed) out += " stroke-dasharray=\"" + fmt(4.0 * l.width) + "\"";
        out += " points=\"";
        for (std::size_t i = 0; i < l.pts.size(); ++i) {
            if (i) out += ' ';
            out += fmt(l.pts[i].x) + "," + fmt(l.pts[i].y);
        }
        out += "\"/>\n";
    }
    for (const auto& m : markers_)
        out += "<circle cx=\"" + fmt(m.at.x) + "\" cy=\"" + fmt(m.at.y) + "\" r=\"" +
               fmt(m.radius) + "\" fill=\"" + m.fill + "\"/>\n";
    out += "</g>\n";
    const double text_size = 0.04 * std::fmax(xmax - xmin, ymax - ymin);
    for (const auto& l : labels_)
        out += "<text x=\"" + fmt(l.at.x) + "\" y=\"" + fmt(-l.at.y) + "\" font-size=\"" +
               fmt(text_size) + "\" font-family=\"sans-serif\">" + l.text + "</text>\n";
    out += "</svg>\n";
    return out;
}

void SvgBuilder::write(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorCode::IoError, "cannot write " + path);
    out << render();
    if (!out) throw Error(ErrorCode::IoError, "failed writing " + path);
}

namespace {

void write_csv(const std::string& path, const std::string& header,
               const std::vector<std::pair<std::string, GCNum>>& rows) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorCode::IoError, "cannot write " + path);
    out << header << "\n";
    for (const auto& [label, p] : rows) {
        if (!label.empty()) out << label << ",";
        out << fmt17(p.x) << "," << fmt17(p.y) << "\n";
    }
    if (!out) throw Error(ErrorCode::IoError, "failed writing " + path);
}

} // namespace

void write_circle_figure(PlaneParam pl, int samples, const std::string& svg_path,
                         const std::string& csv_path) {
    SvgBuilder svg;
    std::vector<std::pair<std::string, GCNum>> csv_rows;
    const auto locus = [&](const std::vector<GCNum>& pts) {
        svg.add_polyline(pts, "black", 0.012);
        for (const auto& p : pts) csv_rows.emplace_back("", p);
    };

    svg.add_metadata("plane p = " + fmt17(pl.p));
    svg.add_segment({-2.2, 0.0}, {2.2, 0.0}, "#bbbbbb", 0.006);
    svg.add_segment({0.0, -2.2}, {0.0, 2.2}, "#bbbbbb", 0.006);

    if (pl.p < 0.0) {
        // ellipse x^2 + |p| y^2 = 1, parameterized by the unit p-rotation
        std::vector<GCNum> pts;
        pts.reserve(samples + 1);
        const double period = 2.0 * std::numbers::pi / pl.root();
        for (int i = 0; i <= samples; ++i)
            pts.push_back(exp_i(period * i / samples, pl));
        locus(pts);
    } else if (pl.p == 0.0) {
        // first-definition circle: the two lines x = +-1
        const int half = samples / 2;
        std::vector<GCNum> right, left;
        for (int i = 0; i <= half; ++i) {
            const double y = -2.0 + 4.0 * i / half;
            right.push_back({1.0, y});
            left.push_back({-1.0, y});
        }
        locus(right);
        locus(left);
        // second-definition circle (cycle): drawn for reference only
        std::vector<GCNum> cycle;
        for (int i = 0; i <= 64; ++i) {
            const double x = -1.5 + 3.0 * i / 64;
            cycle.push_back({x, 0.5 * x * x});
        }
        svg.add_polyline(cycle, "red", 0.009);
        svg.add_label({1.0, 1.6}, "cycle");
    } else {
        // conjugate hyperbolas |x^2 - p y^2| = 1 with dashed asymptotes
        const double s = pl.root();
        const double tmax = std::asinh(2.0 * s) / s;
        const int quarter = samples / 4;
        std::vector<GCNum> branches[4];
        for (int i = 0; i <= quarter; ++i) {
            const double th = -tmax + 2.0 * tmax * i / quarter;
            const GCNum r = exp_i(th, pl);
            const GCNum u{std::sinh(th * s), std::cosh(th * s) / s};
            branches[0].push_back(r);
            branches[1].push_back(-r);
            branches[2].push_back(u);
            branches[3].push_back(-u);
        }
        for (auto& b : branches) locus(b);
        const double slope = 1.0 / s;
        svg.add_metadata("asymptote-slope: +-" + fmt17(slope));
        svg.add_segment({-2.0, -2.0 * slope}, {2.0, 2.0 * slope}, "red", 0.008, true);
        svg.add_segment({-2.0, 2.0 * slope}, {2.0, -2.0 * slope}, "red", 0.008, true);
    }
    svg.add_label({1.4, 2.0}, "p = " + fmt(pl.p, "%g"));
    svg.write(svg_path);
    write_csv(csv_path, "x,y", csv_rows);
}

void write_inflection_figure(const MotionSpec& m, double t,
                             const std::array<double, 3>& ray_angles,
                             const std::string& svg_path, const std::string& csv_path) {
    const PlaneParam pl = m.plane();
    const InstantInvariants inv = instant_invariants(m, t);

    SvgBuilder svg;
    std::vector<std::pair<std::string, GCNum>> rows;
    svg.add_metadata("plane p = " + fmt17(pl.p) + ", t = " + fmt17(t) +
                     ", inflection diameter h = " + fmt17(inv.h));

    rows.emplace_back("pole", inv.pole);
    rows.emplace_back("tangent_dir", inv.tangent_dir);

    // common tangent and normal through the pole
    const double axis_len = 2.2 * inv.h;
    const GCNum ex = inv.frame.dir_from_frame({1.0, 0.0}, pl);
    const GCNum ey = inv.frame.dir_from_frame({0.0, 1.0}, pl);
    rows.emplace_back("normal_dir", ey);
    svg.add_segment(inv.pole - axis_len * ex, inv.pole + axis_len * ex, "#888888", 0.008);
    svg.add_segment(inv.pole - axis_len * ey, inv.pole + axis_len * ey, "#888888", 0.008, true);
    svg.add_marker(inv.pole, 0.02 * inv.h, "black");
    svg.add_label(inv.pole + (0.07 * inv.h) * ey, "I");

    // inflection locus: frame points rho*(theta) exp_i(theta), rho* = h sinp(theta)
    std::vector<GCNum> locus;
    const int n_locus = 128;
    double lo, hi;
    if (pl.p < 0.0) {
        lo = 0.0;
        hi = std::numbers::pi / pl.root();
    } else {
        lo = -1.25;
        hi = 1.25;
    }
    for (int i = 0; i <= n_locus; ++i) {
        const double th = lo + (hi - lo) * i / n_locus;
        const GCNum f = (inv.h * sinp(th, pl)) * exp_i(th, pl);
        locus.push_back(inv.frame.from_frame(f, pl));
    }
    svg.add_polyline(locus, "blue", 0.012);
    for (const auto& p : locus) rows.emplace_back("locus", p);

    // pole rays with N, N*, gamma and the inversion image Q
    const char* ray_names[3] = {"1", "2", "3"};
    double q_heights = 0.0;
    for (int k = 0; k < 3; ++k) {
        const double theta = ray_angles[k];
        const PoleRayStation st = make_station(m, inv, theta, 1.55 * inv.h * sinp(theta, pl));
        const GCNum dir = inv.frame.dir_from_frame(st.x_dir, pl);
        const double reach = 1.8 * std::fmax(inv.h, std::fabs(st.rho));
        svg.add_segment(inv.pole, inv.pole + reach * dir, "#444444", 0.006);
        rows.emplace_back(std::string("ray") + ray_names[k], dir);

        const GCNum n_pt = inv.frame.from_frame(st.rho * st.x_dir, pl);
        const GCNum nstar = inv.frame.from_frame(st.rho_star * st.x_dir, pl);
        const GCNum gamma = inv.frame.from_frame(st.rho_prime * st.x_dir, pl);
        const InversionImage img = inversion_image(st);
        const GCNum q_pt = inv.frame.from_frame(img.q, pl);
        q_heights = img.height;

        svg.add_marker(n_pt, 0.018 * inv.h, "black");
        svg.add_label(n_pt + (0.05 * inv.h) * ey, "N" + std::string(ray_names[k]));
        svg.add_marker(nstar, 0.018 * inv.h, "blue");
        svg.add_label(nstar + (0.05 * inv.h) * ey, "N" + std::string(ray_names[k]) + "*");
        svg.add_marker(gamma, 0.018 * inv.h, "green");
        svg.add_label(gamma + (0.05 * inv.h) * ey, "g" + std::string(ray_names[k]));
        svg.add_marker(q_pt, 0.018 * inv.h, "purple");
        svg.add_label(q_pt + (0.05 * inv.h) * ey, "Q" + std::string(ray_names[k]));

        rows.emplace_back(std::string("N") + ray_names[k], n_pt);
        rows.emplace_back(std::string("Nstar") + ray_names[k], nstar);
        rows.emplace_back(std::string("gamma") + ray_names[k], gamma);
        rows.emplace_back(std::string("Q") + ray_names[k], q_pt);
    }

    // the line D: inversion image of the inflection locus, parallel to the
    // common tangent at frame height 1/h
    const GCNum d_a = inv.frame.from_frame({-1.6 * inv.h, q_heights}, pl);
    const GCNum d_b = inv.frame.from_frame({1.6 * inv.h, q_heights}, pl);
    svg.add_segment(d_a, d_b, "purple", 0.008, true);
    svg.add_label(d_b, "D");
    rows.emplace_back("lineD_a", d_a);
    rows.emplace_back("lineD_b", d_b);

    svg.write(svg_path);
    write_csv(csv_path, "label,x,y", rows);
}

} // namespace gcp
