#pragma once

#include "widths/geometry.hpp"

#include <cstdint>
#include <span>

namespace widths {

/// First two moments of a width random variable and the derived ratios.
struct MomentSummary {
    double mean = 0.0;
    double second_moment = 0.0;
    double kappa = 0.0; // second_moment / mean^2
    double delta = 0.0; // sqrt(kappa - 1), the deviation rate

    static MomentSummary from_moments(double mean, double second_moment);
};

/// V(x) = (pi - |x|) cos x + sin|x| on (-pi, pi], extended 2 pi-periodically.
double v_kernel(double x);

/// E(X_a X_b) = |a||b| V(arg(b) - arg(a)) / (4 pi). Throws Error{ZeroVector}.
double pair_moment(PlanarVector a, PlanarVector b);

/// E(X_A X_B) for two edge multisets, by bilinearity of pair_moment.
double cross_moment(std::span<const PlanarVector> a, std::span<const PlanarVector> b);

/// E(X_T) = perimeter / pi.
double first_moment(const ConvexPolygon& polygon);

/// E(X_T^2) = (1/4pi) sum_{j,k} |e_j||e_k| V(arg e_j - arg e_k).
double second_moment(const ConvexPolygon& polygon);

MomentSummary moment_summary(const ConvexPolygon& polygon);

/// Closed-form summary for an arbitrary closed edge cycle (no convexity check).
MomentSummary moment_summary(std::span<const PlanarVector> edges);

/// Minimum deviation rate over convex n-gons (n not a power of 2); equals
/// delta of the regular pre-edge bundle R_n. Throws Error{BadParameter} for n < 1.
double nu(int n);

/// Composite Simpson over [0, 2pi) with the partition split at every edge
/// argument and its antipode; about `panels` Simpson panels (two subintervals
/// each) in total, distributed by segment length. Throws Error{BadParameter} for panels < 16.
MomentSummary quadrature_moments(const ConvexPolygon& polygon, int panels);

struct MonteCarloEstimate {
    MomentSummary summary;
    double mean_se = 0.0;
    double second_moment_se = 0.0;
    double delta_se = 0.0; // delta-method propagation through kappa
    std::int64_t samples = 0;
};

/// Sample moments over i.i.d. uniform directions omega = 2 pi u.
/// Deterministic for a fixed seed. Throws Error{BadParameter} for samples < 1000.
MonteCarloEstimate monte_carlo_moments(const ConvexPolygon& polygon, std::int64_t samples, std::uint64_t seed);

} // namespace widths
