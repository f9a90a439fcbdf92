#pragma once

#include "widths/geometry.hpp"

#include <span>
#include <vector>

namespace widths {

/// True when v lies in the closed upper half plane H: Im > 0, or Im = 0 and Re >= 0.
bool in_upper_half_plane(PlanarVector v);

/// Argument-sorted pre-edges b_1..b_m with 0 <= arg(b_1) < ... < arg(b_m) < pi.
///
/// Equality is lexicographic over (argument, magnitude) at the tolerances used
/// by is_realization.
class PreEdgeBundle {
public:
    /// Sorts by argument; throws Error{ZeroVector} for a zero pre-edge,
    /// Error{BadParameter} for a vector outside H or two equal arguments.
    explicit PreEdgeBundle(std::vector<PlanarVector> pre_edges);

    std::span<const PlanarVector> pre_edges() const noexcept { return pre_edges_; }
    std::size_t size() const noexcept { return pre_edges_.size(); }

    friend bool operator==(const PreEdgeBundle& a, const PreEdgeBundle& b);

private:
    std::vector<PlanarVector> pre_edges_;
};

/// The regular bundle R_m: m pre-edges of the given magnitude at arguments
/// phase + j pi / m, phase in [0, pi / m).
PreEdgeBundle regular_bundle(int m, double magnitude = 1.0, double phase = 0.0);

/// a if a is in H, else -a. Throws Error{ZeroVector}.
PlanarVector iota(PlanarVector a);

/// Applies iota to every edge, sums parallel pre-edges (arguments within
/// 1e-9 rad, mod pi) and sorts by argument.
PreEdgeBundle asymmetrize(const ConvexPolygon& polygon);

/// Centrally symmetric 2m-gon realizing the bundle:
/// g, g + b_1/2, ..., g + (b_1 + ... + b_m)/2, g + (b_2 + ... + b_m)/2, ..., g + b_m/2
/// with g = -(b_1 + ... + b_m)/4.
ConvexPolygon symmetrize(const PreEdgeBundle& bundle);

/// sum_j (|b_j| / 2) |sin(arg b_j - omega)|.
double bundle_width(const PreEdgeBundle& bundle, Angle omega);

/// v_{k+m} = -v_k for all k (even size 2m), within 1e-12 x max(1, max |v|).
bool is_symmetric(const ConvexPolygon& polygon);

/// Shadow width of a centrally symmetric polygon from its vertex sectors:
/// 2 |g_j| sin(arg g_j - omega) for arg(g_{j-1} - g_j) <= omega <= arg(g_j - g_{j+1}).
/// A boundary direction belongs to the earlier sector. Throws Error{NotSymmetric}.
double diagonal_width(const ConvexPolygon& polygon, Angle omega);

/// True iff asymmetrize(polygon) matches the bundle to 1e-9 in argument and
/// 1e-9 relative in magnitude.
bool is_realization(const ConvexPolygon& polygon, const PreEdgeBundle& bundle);

} // namespace widths
