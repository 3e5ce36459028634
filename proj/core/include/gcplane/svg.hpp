#pragma once

#include <array>
#include <string>
#include <vector>

#include "gcplane/motion.hpp"

namespace gcp {

/// Minimal deterministic SVG writer: polylines, markers and labels in math
/// coordinates (y up), viewBox fitted to the content plus a 10% margin.
/// Output is byte-stable apart from nothing at all; the only comment is the
/// fixed format-version line.
class SvgBuilder {
public:
    void add_polyline(const std::vector<GCNum>& pts, const std::string& stroke,
                      double width = 0.01, bool dashed = false);
    void add_segment(GCNum a, GCNum b, const std::string& stroke, double width = 0.01,
                     bool dashed = false);
    void add_marker(GCNum at, double radius, const std::string& fill);
    void add_label(GCNum at, const std::string& text);
    void add_metadata(const std::string& comment);

    std::string render() const;
    void write(const std::string& path) const;

private:
    struct Line {
        std::vector<GCNum> pts;
        std::string stroke;
        double width;
        bool dashed;
    };
    struct Marker {
        GCNum at;
        double radius;
        std::string fill;
    };
    struct Label {
        GCNum at;
        std::string text;
    };
    std::vector<Line> lines_;
    std::vector<Marker> markers_;
    std::vector<Label> labels_;
    std::vector<std::string> metadata_;
};

/// Unit-circle figure of C_p (ellipse / the two lines x = +-1 with the cycle
/// annotation / conjugate hyperbolas with dashed asymptotes) plus a CSV of
/// sampled locus points, each satisfying ||x^2 - p y^2| - 1| <= 1e-9.
void write_circle_figure(PlaneParam pl, int samples, const std::string& svg_path,
                         const std::string& csv_path);

/// One instant of a motion: pole, common tangent and normal, the inflection
/// locus (circle / parabola / hyperbola of diameter h), three pole rays with
/// the points N, N*, gamma and the inversion images Q on the line D. The CSV
/// dump carries every drawn coordinate as label,x,y rows.
void write_inflection_figure(const MotionSpec& m, double t,
                             const std::array<double, 3>& ray_angles,
                             const std::string& svg_path, const std::string& csv_path);

} // namespace gcp
