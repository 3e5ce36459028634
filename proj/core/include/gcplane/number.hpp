#pragma once

#include <cmath>

#include "gcplane/plane.hpp"

namespace gcp {

/// A point/vector of the generalized complex plane, z = x + iy with i^2 = p.
/// Values do not carry p; the caller's PlaneParam is authoritative.
struct GCNum {
    double x = 0.0;
    double y = 0.0;
};

inline GCNum operator+(GCNum a, GCNum b) { return {a.x + b.x, a.y + b.y}; }
inline GCNum operator-(GCNum a, GCNum b) { return {a.x - b.x, a.y - b.y}; }
inline GCNum operator-(GCNum a) { return {-a.x, -a.y}; }
inline GCNum operator*(double s, GCNum a) { return {s * a.x, s * a.y}; }
inline GCNum operator*(GCNum a, double s) { return {s * a.x, s * a.y}; }

/// Generalized product M^p(z1, z2) = (x1 x2 + p y1 y2) + i (x1 y2 + x2 y1).
/// Reproduces the ordinary, Study and Clifford products at p = -1, 0, 1.
/// Grouped so the rounding pattern is symmetric: commutativity is exact.
inline GCNum mul(GCNum a, GCNum b, PlaneParam pl) {
    return {a.x * b.x + pl.p * (a.y * b.y), a.x * b.y + b.x * a.y};
}

inline GCNum conj(GCNum z) { return {z.x, -z.y}; }

/// Scalar product <z1, z2>_p = Re(M^p(z1, conj(z2))) = x1 x2 - p y1 y2.
inline double scalar(GCNum a, GCNum b, PlaneParam pl) {
    return a.x * b.x - pl.p * (a.y * b.y);
}

/// Quadratic form <z, z>_p = x^2 - p y^2 (signed; zero exactly on the null cone).
inline double quad(GCNum z, PlaneParam pl) { return scalar(z, z, pl); }

/// p-magnitude ||z||_p = sqrt(|x^2 - p y^2|); multiplicative over M^p.
inline double norm(GCNum z, PlaneParam pl) { return std::sqrt(std::fabs(quad(z, pl))); }

/// Signed determinant x1 y2 - x2 y1. p-independent; for p-unit vectors at
/// angles a, b in one sector it equals sinp(b - a). The magnitude form of the
/// wedge is sqrt(|-p|) * |wedge_raw| for p != 0 and |wedge_raw| for p = 0.
inline double wedge_raw(GCNum a, GCNum b) { return a.x * b.y - b.x * a.y; }

/// True when z is a zero divisor of C_p: |x^2 - p y^2| below the relative
/// null tolerance. For p < 0 only the origin; for p = 0 the imaginary axis;
/// for p > 0 the asymptote lines y = +-x/sqrt(p).
inline bool is_null(GCNum z, PlaneParam pl) {
    const double q = quad(z, pl);
    const double scale = std::fmax(z.x * z.x, std::fabs(pl.p) * z.y * z.y);
    return std::fabs(q) <= kNullTol * scale;
}

/// Multiplicative inverse: conj(z) / (x^2 - p y^2).
/// Near-null input is an error, never a huge finite value.
GCNum inverse(GCNum z, PlaneParam pl);

} // namespace gcp
