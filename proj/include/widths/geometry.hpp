#pragma once

#include <complex>
#include <cstddef>
#include <numbers>
#include <span>
#include <vector>

namespace widths {

/// A point or displacement in the plane, identified with a complex number.
using PlanarVector = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Reduces any real angle to the branch (-pi, pi]; -pi maps to +pi.
double normalize_angle(double radians);

/// Argument of a nonzero vector on the branch (-pi, pi].
double arg(PlanarVector v);

/// 2D cross product (signed parallelogram area).
inline double cross(PlanarVector a, PlanarVector b) { return a.real() * b.imag() - a.imag() * b.real(); }
inline double dot(PlanarVector a, PlanarVector b) { return a.real() * b.real() + a.imag() * b.imag(); }

/// Angle in radians, always stored on the branch (-pi, pi].
class Angle {
public:
    constexpr Angle() = default;
    explicit Angle(double radians) : value_(normalize_angle(radians)) {}

    double radians() const noexcept { return value_; }

private:
    double value_ = 0.0;
};

/// Counterclockwise convex polygon with n >= 2 extremal vertices.
///
/// Edges are e_j = v_{j+1} - v_j (indices mod n); their arguments increase
/// strictly around the cycle with total turning 2*pi. The 2-gon has the edge
/// cycle {e, -e}.
class ConvexPolygon {
public:
    std::span<const PlanarVector> vertices() const noexcept { return vertices_; }
    std::size_t size() const noexcept { return vertices_.size(); }
    PlanarVector vertex(std::size_t i) const { return vertices_[i % vertices_.size()]; }
    PlanarVector edge(std::size_t i) const { return vertex(i + 1) - vertex(i); }
    std::vector<PlanarVector> edges() const;

private:
    explicit ConvexPolygon(std::vector<PlanarVector> vertices) : vertices_(std::move(vertices)) {}

    friend ConvexPolygon make_polygon(std::vector<PlanarVector> vertices);

    std::vector<PlanarVector> vertices_;
};

/// Validates and normalizes a counterclockwise vertex cycle.
///
/// Consecutive duplicates are dropped and collinear (non-extremal) vertices
/// merged; a fully collinear input collapses to the 2-gon of its endpoints.
/// Throws Error{DegenerateInput} for fewer than two distinct points,
/// Error{NotClosedCycle} when a point repeats non-consecutively, and
/// Error{NotConvex} for clockwise, reflex or multiply-winding input.
ConvexPolygon make_polygon(std::vector<PlanarVector> vertices);

/// Builds a polygon from an edge cycle, anchored with the first vertex at `origin`.
///
/// A closure defect below 1e-9 x perimeter is spread uniformly over the edges;
/// larger defects throw Error{NotClosedCycle}. Zero edges throw Error{DegenerateInput}.
ConvexPolygon polygon_from_edges(std::span<const PlanarVector> edges, PlanarVector origin = {});

/// Width of the shadow cast under light from direction omega:
/// sum_j |e_j| sin(arg(e_j) - omega)_+.
double shadow_width(const ConvexPolygon& polygon, Angle omega);

/// Same sum evaluated over a raw edge cycle.
double shadow_width(std::span<const PlanarVector> edges, double omega);

/// Vertices circumradius * exp(i(phase + 2 pi k / n)), k = 0..n-1.
ConvexPolygon regular_polygon(int n, double circumradius, Angle phase = Angle{});

double perimeter(const ConvexPolygon& polygon);

/// Minimum of shadow_width over all directions (attained at an edge normal).
double minimal_width(const ConvexPolygon& polygon);

/// Image under z -> scale * exp(i rotation) * z + translation.
ConvexPolygon similarity_image(const ConvexPolygon& polygon, double scale, double rotation,
                               PlanarVector translation);

/// Sum of the normalized exterior angles; 2 pi for every accepted polygon.
double total_turning(const ConvexPolygon& polygon);

} // namespace widths
