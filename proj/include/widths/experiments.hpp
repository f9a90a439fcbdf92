#pragma once

#include "widths/geometry.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace widths {

/// Equilateral triangle with vertices 0, 1, exp(i pi / 3).
ConvexPolygon unit_triangle();

/// Cut of vertex `vertex_index` (alpha) of an equilateral triangle alpha, beta, gamma:
/// beta_t = (1 - t) alpha + t beta, gamma_t = (1 - lambda t) alpha + lambda t gamma.
/// lambda = 1 cuts parallel to the opposite side.
struct TruncationSpec {
    double t = 0.0;
    double lambda = 1.0;
    int vertex_index = 0;
};

/// The quadrilateral (beta_t, beta, gamma, gamma_t).
/// Throws Error{BadParameter} if the input is not equilateral (1e-12 relative)
/// or t, lambda <= 0, and Error{CutTooLarge} unless t < 1/2 and lambda t < 1/2.
ConvexPolygon truncate(const ConvexPolygon& triangle, const TruncationSpec& spec);

struct TrendPoint {
    double t = 0.0;
    double delta = 0.0;
    double delta_diff = 0.0; // delta(V_t) - delta(T_3)
};

/// delta(V_t) - delta(T_3) on the unit triangle for every t in the grid.
/// Throws Error{BadParameter} for t outside (0, 0.2].
std::vector<TrendPoint> truncation_trend(double lambda, std::span<const double> t_grid);

/// Second-order behaviour of the parallel truncation X_{V_t} = X_T - t Y.
struct CurvatureRatio {
    double fitted = 0.0;     // E(Y^2)/E(X_T^2) recovered from a t^2 + t^3 fit of kappa(V_t)/kappa(T) - 1
    double exact = 0.0;      // the same ratio from closed-form cross moments
    double mean_ratio = 0.0; // E(Y)/E(X_T)
};

/// Throws Error{BadParameter} for fewer than 2 grid points.
CurvatureRatio parallel_curvature_ratio(std::span<const double> t_grid);

struct EvenOddReport {
    int even_m = 0;
    int odd_n = 0;
    bool equality_case = false; // n = m/2, else n = m/2 + 1
    double delta_even = 0.0;
    double delta_odd = 0.0;
    bool holds = false;
};

/// Regular T_m (m even >= 4) against the regular T_n for the odd n in
/// {m/2, m/2 + 1}. Throws Error{BadParameter} for odd or small m.
EvenOddReport even_odd_comparison(int m);

/// Seeded convex n-gon (n >= 3) with exactly n extremal vertices. Throws
/// Error{RetryExhausted} after 100 rejected draws.
ConvexPolygon random_convex_polygon(int n, std::uint64_t seed);

struct SearchConfig {
    int n = 4;
    int iterations = 20000;
    int restarts = 20;
    std::uint64_t seed = 7;
    double simplex_scale = 0.1;
};

struct SearchResult {
    ConvexPolygon polygon;
    double delta = 0.0;
    int best_restart = 0;
    std::vector<double> restart_deltas;
};

/// Multi-restart Nelder-Mead over vertex coordinates with vertex 1 pinned at
/// (1, 0) and vertex 1 + n/2 at (-1, 0); non-convex points are penalized.
SearchResult minimize_delta(const SearchConfig& config);

/// Kite reported as the numerical delta-minimizer over quadrilaterals.
ConvexPolygon reference_kite();
inline constexpr double kReferenceKiteDelta = 0.035306425305;

/// Largest vertex deviation after normalizing both polygons (vertex centroid
/// at the origin, unit RMS radius) and optimally aligning them over cyclic
/// relabelings, rotations and reflections. Infinity if sizes differ.
double similarity_distance(const ConvexPolygon& a, const ConvexPolygon& b);

struct NeedlePoint {
    double epsilon = 0.0;
    double delta = 0.0;
};

struct MaxPropertyReport {
    int samples = 0;
    int violations = 0;
    double bound = 0.0; // sqrt(pi^2 / 8 - 1)
    double max_delta = 0.0;
    double square_delta = 0.0;
    std::vector<NeedlePoint> needle;
};

/// Checks delta < sqrt(pi^2/8 - 1) over random polygons of sizes 3..12 and
/// tracks the needle family T((0,0), (1,0), (1 - eps, eps)) as eps -> 0.
MaxPropertyReport max_property_suite(int samples, std::uint64_t seed);

} // namespace widths
