#include "widths/experiments.hpp"

#include "widths/error.hpp"
#include "widths/moments.hpp"
#include "widths/nelder_mead.hpp"
#include "widths/random.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace widths {

namespace {

constexpr int kMaxDraws = 100;

// Penalty floor for non-convex trial points; every convex polygon has delta < 0.49.
constexpr double kPenalty = 1.0;

std::vector<PlanarVector> normalized_vertices(const ConvexPolygon& p) {
    PlanarVector centroid{};
    for (const auto& v : p.vertices()) {
        centroid += v;
    }
    centroid /= static_cast<double>(p.size());
    std::vector<PlanarVector> out;
    double rms = 0.0;
    for (const auto& v : p.vertices()) {
        out.push_back(v - centroid);
        rms += std::norm(out.back());
    }
    rms = std::sqrt(rms / static_cast<double>(p.size()));
    for (auto& v : out) {
        v /= rms;
    }
    return out;
}

// delta of the closed polygon through `vertices`, or a penalty above every
// attainable delta when the cycle is not strictly convex and counterclockwise.
double penalized_delta(const std::vector<PlanarVector>& vertices) {
    const std::size_t n = vertices.size();
    std::vector<PlanarVector> edges(n);
    for (std::size_t j = 0; j < n; ++j) {
        edges[j] = vertices[(j + 1) % n] - vertices[j];
    }
    double violation = 0.0;
    double turning = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        const PlanarVector a = edges[(j + n - 1) % n];
        const PlanarVector b = edges[j];
        const double la = std::abs(a);
        const double lb = std::abs(b);
        if (la == 0.0 || lb == 0.0) {
            violation += 1.0;
            continue;
        }
        const double c = cross(a, b) / (la * lb);
        if (c <= 1e-12) {
            violation += 1e-12 - c;
        }
        turning += normalize_angle(arg(b) - arg(a));
    }
    if (violation > 0.0 || std::abs(turning - kTwoPi) > 1e-9) {
        return kPenalty + violation + std::abs(turning - kTwoPi);
    }
    return moment_summary(edges).delta;
}

} // namespace

ConvexPolygon unit_triangle() { return make_polygon({{0.0, 0.0}, {1.0, 0.0}, std::polar(1.0, kPi / 3.0)}); }

ConvexPolygon truncate(const ConvexPolygon& triangle, const TruncationSpec& spec) {
    if (triangle.size() != 3) {
        throw Error(ErrorKind::BadParameter, "truncation needs a triangle");
    }
    const double a = std::abs(triangle.edge(0));
    const double b = std::abs(triangle.edge(1));
    const double c = std::abs(triangle.edge(2));
    if (std::abs(a - b) > 1e-12 * a || std::abs(b - c) > 1e-12 * a) {
        throw Error(ErrorKind::BadParameter, "truncation needs an equilateral triangle");
    }
    if (!(spec.t > 0.0) || !(spec.lambda > 0.0)) {
        throw Error(ErrorKind::BadParameter, "t and lambda must be positive");
    }
    if (spec.t >= 0.5 || spec.lambda * spec.t >= 0.5) {
        throw Error(ErrorKind::CutTooLarge, "cut must satisfy t < 1/2 and lambda t < 1/2");
    }
    const auto k = static_cast<std::size_t>(((spec.vertex_index % 3) + 3) % 3);
    const PlanarVector alpha = triangle.vertex(k);
    const PlanarVector beta = triangle.vertex(k + 1);
    const PlanarVector gamma = triangle.vertex(k + 2);
    const PlanarVector beta_t = (1.0 - spec.t) * alpha + spec.t * beta;
    const PlanarVector gamma_t = (1.0 - spec.lambda * spec.t) * alpha + spec.lambda * spec.t * gamma;
    return make_polygon({beta_t, beta, gamma, gamma_t});
}

std::vector<TrendPoint> truncation_trend(double lambda, std::span<const double> t_grid) {
    const ConvexPolygon triangle = unit_triangle();
    const double base = moment_summary(triangle).delta;
    std::vector<TrendPoint> out;
    for (double t : t_grid) {
        if (!(t > 0.0) || t > 0.2) {
            throw Error(ErrorKind::BadParameter, "trend grid must lie in (0, 0.2]");
        }
        const double d = moment_summary(truncate(triangle, {t, lambda, 0})).delta;
        out.push_back({t, d, d - base});
    }
    return out;
}

CurvatureRatio parallel_curvature_ratio(std::span<const double> t_grid) {
    if (t_grid.size() < 2) {
        throw Error(ErrorKind::BadParameter, "curvature fit needs at least 2 grid points");
    }
    const ConvexPolygon triangle = unit_triangle();
    const MomentSummary base = moment_summary(triangle);
    const auto tri_edges = triangle.edges();

    // Least squares for g(t) = kappa(V_t)/kappa(T) - 1 ~ a2 t^2 + a3 t^3.
    double s44 = 0.0, s45 = 0.0, s55 = 0.0, r4 = 0.0, r5 = 0.0;
    double mean_ratio = 0.0;
    for (double t : t_grid) {
        const ConvexPolygon cut = truncate(triangle, {t, 1.0, 0});
        const MomentSummary m = moment_summary(cut);
        const double g = m.kappa / base.kappa - 1.0;
        const double t2 = t * t;
        const double t3 = t2 * t;
        s44 += t2 * t2;
        s45 += t2 * t3;
        s55 += t3 * t3;
        r4 += g * t2;
        r5 += g * t3;
        mean_ratio += (base.mean - m.mean) / (t * base.mean);
    }
    mean_ratio /= static_cast<double>(t_grid.size());
    const double det = s44 * s55 - s45 * s45;
    const double a2 = (r4 * s55 - r5 * s45) / det;

    // Y = (X_T - X_{V_t}) / t, independent of t.
    const double t = t_grid.front();
    const auto cut_edges = truncate(triangle, {t, 1.0, 0}).edges();
    const double ey2 = (base.second_moment - 2.0 * cross_moment(tri_edges, cut_edges) +
                        cross_moment(cut_edges, cut_edges)) /
                       (t * t);

    CurvatureRatio out;
    out.mean_ratio = mean_ratio;
    out.fitted = a2 + mean_ratio * mean_ratio;
    out.exact = ey2 / base.second_moment;
    return out;
}

EvenOddReport even_odd_comparison(int m) {
    if (m < 4 || m % 2 != 0) {
        throw Error(ErrorKind::BadParameter, "even/odd comparison needs an even m >= 4");
    }
    EvenOddReport r;
    r.even_m = m;
    r.equality_case = (m / 2) % 2 == 1;
    r.odd_n = r.equality_case ? m / 2 : m / 2 + 1;
    r.delta_even = moment_summary(regular_polygon(m, 1.0)).delta;
    r.delta_odd = moment_summary(regular_polygon(r.odd_n, 1.0)).delta;
    r.holds = r.equality_case ? std::abs(r.delta_even - r.delta_odd) <= 1e-12 : r.delta_even > r.delta_odd;
    return r;
}

ConvexPolygon random_convex_polygon(int n, std::uint64_t seed) {
    if (n < 3) {
        throw Error(ErrorKind::BadParameter, "random polygons need n >= 3");
    }
    Rng rng(seed);
    for (int attempt = 0; attempt < kMaxDraws; ++attempt) {
        std::vector<PlanarVector> edges;
        PlanarVector sum{};
        double length = 0.0;
        for (int j = 0; j < n; ++j) {
            const double theta = kTwoPi * rng.uniform();
            const double r = rng.uniform(0.05, 1.0);
            edges.push_back(std::polar(r, theta));
            sum += edges.back();
            length += r;
        }
        // Remove the closure defect in proportion to edge length.
        bool degenerate = false;
        for (auto& e : edges) {
            e -= (std::abs(e) / length) * sum;
            degenerate = degenerate || std::abs(e) < 1e-9;
        }
        if (degenerate) {
            continue;
        }
        std::sort(edges.begin(), edges.end(), [](PlanarVector a, PlanarVector b) { return arg(a) < arg(b); });
        try {
            ConvexPolygon p = polygon_from_edges(edges);
            if (static_cast<int>(p.size()) == n) {
                return p;
            }
        } catch (const Error&) {
            // resample
        }
    }
    throw Error(ErrorKind::RetryExhausted, "could not draw a convex polygon");
}

SearchResult minimize_delta(const SearchConfig& config) {
    if (config.n < 3 || config.iterations <= 0 || config.restarts <= 0 || !(config.simplex_scale > 0.0)) {
        throw Error(ErrorKind::BadParameter, "search needs n >= 3 and positive iterations, restarts, scale");
    }
    const auto n = static_cast<std::size_t>(config.n);
    const std::size_t pin_a = 1;
    const std::size_t pin_b = 1 + n / 2;

    auto unpack = [&](const std::vector<double>& x) {
        std::vector<PlanarVector> v(n);
        std::size_t k = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == pin_a) {
                v[j] = {1.0, 0.0};
            } else if (j == pin_b) {
                v[j] = {-1.0, 0.0};
            } else {
                v[j] = {x[k], x[k + 1]};
                k += 2;
            }
        }
        return v;
    };
    auto objective = [&](const std::vector<double>& x) { return penalized_delta(unpack(x)); };

    SearchResult best{unit_triangle(), std::numeric_limits<double>::infinity(), 0, {}};
    for (int r = 0; r < config.restarts; ++r) {
        const ConvexPolygon start = random_convex_polygon(config.n, derive_seed(config.seed, static_cast<std::uint64_t>(r)));
        // Similarity placing the pinned vertices at (1, 0) and (-1, 0).
        const PlanarVector pa = start.vertex(pin_a);
        const PlanarVector pb = start.vertex(pin_b);
        const PlanarVector mid = 0.5 * (pa + pb);
        const PlanarVector factor = 2.0 / (pa - pb);
        std::vector<double> x;
        for (std::size_t j = 0; j < n; ++j) {
            if (j != pin_a && j != pin_b) {
                const PlanarVector w = factor * (start.vertex(j) - mid);
                x.push_back(w.real());
                x.push_back(w.imag());
            }
        }

        NelderMeadOptions opts;
        opts.initial_scale = config.simplex_scale;
        int budget = config.iterations;
        NelderMeadResult res{x, objective(x), 0, false};
        // Re-seed the simplex around the incumbent until a round stops improving.
        for (int round = 0; round < 8 && budget > 0; ++round) {
            opts.max_iterations = budget;
            NelderMeadResult next = nelder_mead(objective, res.x, opts);
            budget -= std::max(1, next.iterations);
            const bool improved = next.value < res.value - 1e-15;
            if (next.value <= res.value) {
                res = std::move(next);
            }
            if (!improved && round > 0) {
                break;
            }
            opts.initial_scale = std::max(1e-6, opts.initial_scale * 0.1);
        }
        best.restart_deltas.push_back(res.value);
        if (res.value < best.delta) {
            best.delta = res.value;
            best.best_restart = r;
            best.polygon = make_polygon(unpack(res.x));
        }
    }
    best.delta = moment_summary(best.polygon).delta;
    return best;
}

ConvexPolygon reference_kite() {
    return make_polygon({{0.0, -0.24213332485}, {1.0, 0.0}, {0.0, 1.67502597318}, {-1.0, 0.0}});
}

double similarity_distance(const ConvexPolygon& a, const ConvexPolygon& b) {
    if (a.size() != b.size()) {
        return std::numeric_limits<double>::infinity();
    }
    const auto na = normalized_vertices(a);
    const auto nb = normalized_vertices(b);
    const std::size_t n = na.size();
    double best = std::numeric_limits<double>::infinity();
    for (bool reflect : {false, true}) {
        std::vector<PlanarVector> target = nb;
        if (reflect) {
            // Mirror, then reverse to restore counterclockwise order.
            for (auto& v : target) {
                v = std::conj(v);
            }
            std::reverse(target.begin(), target.end());
        }
        for (std::size_t shift = 0; shift < n; ++shift) {
            PlanarVector corr{};
            for (std::size_t k = 0; k < n; ++k) {
                corr += target[(k + shift) % n] * std::conj(na[k]);
            }
            const PlanarVector rot = std::abs(corr) > 0.0 ? corr / std::abs(corr) : PlanarVector{1.0, 0.0};
            double worst = 0.0;
            for (std::size_t k = 0; k < n; ++k) {
                worst = std::max(worst, std::abs(rot * na[k] - target[(k + shift) % n]));
            }
            best = std::min(best, worst);
        }
    }
    return best;
}

MaxPropertyReport max_property_suite(int samples, std::uint64_t seed) {
    if (samples < 1) {
        throw Error(ErrorKind::BadParameter, "max property suite needs samples >= 1");
    }
    MaxPropertyReport r;
    r.samples = samples;
    r.bound = std::sqrt(kPi * kPi / 8.0 - 1.0);
    for (int i = 0; i < samples; ++i) {
        const int n = 3 + i % 10;
        const double d = moment_summary(random_convex_polygon(n, derive_seed(seed, static_cast<std::uint64_t>(i)))).delta;
        r.max_delta = std::max(r.max_delta, d);
        if (!(d < r.bound)) {
            ++r.violations;
        }
    }
    r.square_delta = moment_summary(make_polygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}})).delta;
    for (double eps : {1e-1, 1e-2, 1e-3, 1e-4, 1e-5}) {
        const ConvexPolygon needle = make_polygon({{0.0, 0.0}, {1.0, 0.0}, {1.0 - eps, eps}});
        r.needle.push_back({eps, moment_summary(needle).delta});
    }
    return r;
}

} // namespace widths
