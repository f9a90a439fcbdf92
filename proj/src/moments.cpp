#include "widths/moments.hpp"

#include "widths/error.hpp"
#include "widths/random.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace widths {

MomentSummary MomentSummary::from_moments(double mean, double second_moment) {
    MomentSummary s;
    s.mean = mean;
    s.second_moment = second_moment;
    s.kappa = second_moment / (mean * mean);
    s.delta = std::sqrt(std::max(0.0, s.kappa - 1.0));
    return s;
}

double v_kernel(double x) {
    const double r = normalize_angle(x);
    const double a = std::abs(r);
    return (kPi - a) * std::cos(r) + std::sin(a);
}

double pair_moment(PlanarVector a, PlanarVector b) {
    const double la = std::abs(a);
    const double lb = std::abs(b);
    if (la == 0.0 || lb == 0.0) {
        throw Error(ErrorKind::ZeroVector, "pair_moment of a zero vector");
    }
    // arg(b / a) computed directly avoids the normalization of a difference.
    const double eta = arg(b * std::conj(a));
    return la * lb * v_kernel(eta) / (4.0 * kPi);
}

double cross_moment(std::span<const PlanarVector> a, std::span<const PlanarVector> b) {
    double sum = 0.0;
    for (const auto& x : a) {
        for (const auto& y : b) {
            sum += pair_moment(x, y);
        }
    }
    return sum;
}

double first_moment(const ConvexPolygon& polygon) { return perimeter(polygon) / kPi; }

double second_moment(const ConvexPolygon& polygon) {
    const auto edges = polygon.edges();
    return cross_moment(edges, edges);
}

MomentSummary moment_summary(std::span<const PlanarVector> edges) {
    double length = 0.0;
    for (const auto& e : edges) {
        length += std::abs(e);
    }
    return MomentSummary::from_moments(length / kPi, cross_moment(edges, edges));
}

MomentSummary moment_summary(const ConvexPolygon& polygon) {
    return MomentSummary::from_moments(first_moment(polygon), second_moment(polygon));
}

double nu(int n) {
    if (n < 1) {
        throw Error(ErrorKind::BadParameter, "nu requires n >= 1");
    }
    const double m = n;
    const double x = kPi / (2.0 * m);
    const double s = std::sin(x);
    return std::sqrt(kPi / (4.0 * m * std::tan(x)) + kPi * kPi / (8.0 * m * m * s * s) - 1.0);
}

MomentSummary quadrature_moments(const ConvexPolygon& polygon, int panels) {
    if (panels < 16) {
        throw Error(ErrorKind::BadParameter, "quadrature needs at least 16 panels");
    }
    const auto edges = polygon.edges();

    // Kinks of sin(theta - omega)_+ sit at omega = theta and theta - pi.
    std::vector<double> breaks{0.0, kTwoPi};
    for (const auto& e : edges) {
        for (double b : {arg(e), arg(e) - kPi}) {
            double w = std::fmod(b, kTwoPi);
            if (w < 0.0) {
                w += kTwoPi;
            }
            breaks.push_back(w);
        }
    }
    std::sort(breaks.begin(), breaks.end());
    breaks.erase(std::unique(breaks.begin(), breaks.end(),
                             [](double a, double b) { return b - a < 1e-14; }),
                 breaks.end());
    breaks.back() = kTwoPi;

    double int1 = 0.0;
    double int2 = 0.0;
    for (std::size_t k = 0; k + 1 < breaks.size(); ++k) {
        const double lo = breaks[k];
        const double hi = breaks[k + 1];
        const double len = hi - lo;
        if (len <= 0.0) {
            continue;
        }
        // A Simpson panel is one parabola over two subintervals.
        const int m = 2 * std::max(1, static_cast<int>(std::ceil(panels * len / kTwoPi)));
        const double h = len / m;
        double s1 = 0.0;
        double s2 = 0.0;
        for (int i = 0; i <= m; ++i) {
            const double f = shadow_width(edges, lo + i * h);
            const double w = (i == 0 || i == m) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
            s1 += w * f;
            s2 += w * f * f;
        }
        int1 += s1 * h / 3.0;
        int2 += s2 * h / 3.0;
    }
    return MomentSummary::from_moments(int1 / kTwoPi, int2 / kTwoPi);
}

MonteCarloEstimate monte_carlo_moments(const ConvexPolygon& polygon, std::int64_t samples, std::uint64_t seed) {
    if (samples < 1000) {
        throw Error(ErrorKind::BadParameter, "Monte Carlo needs at least 1000 samples");
    }
    const auto edges = polygon.edges();
    Rng rng(seed);
    long double s1 = 0.0L;
    long double s2 = 0.0L;
    long double s3 = 0.0L;
    long double s4 = 0.0L;
    for (std::int64_t i = 0; i < samples; ++i) {
        const double x = shadow_width(edges, kTwoPi * rng.uniform());
        const long double x2 = static_cast<long double>(x) * x;
        s1 += x;
        s2 += x2;
        s3 += x2 * x;
        s4 += x2 * x2;
    }
    const long double n = static_cast<long double>(samples);
    const long double m1 = s1 / n;
    const long double m2 = s2 / n;
    const long double var1 = (m2 - m1 * m1) * n / (n - 1);
    const long double var2 = (s4 / n - m2 * m2) * n / (n - 1);
    const long double cov12 = (s3 / n - m1 * m2) * n / (n - 1);

    MonteCarloEstimate est;
    est.samples = samples;
    est.summary = MomentSummary::from_moments(static_cast<double>(m1), static_cast<double>(m2));
    est.mean_se = static_cast<double>(std::sqrt(std::max(0.0L, var1) / n));
    est.second_moment_se = static_cast<double>(std::sqrt(std::max(0.0L, var2) / n));
    // kappa = m2 / m1^2; gradient (-2 m2 / m1^3, 1 / m1^2).
    const long double g1 = -2.0L * m2 / (m1 * m1 * m1);
    const long double g2 = 1.0L / (m1 * m1);
    const long double var_kappa = (g1 * g1 * var1 + 2.0L * g1 * g2 * cov12 + g2 * g2 * var2) / n;
    const double delta = est.summary.delta;
    est.delta_se = delta > 0.0 ? static_cast<double>(std::sqrt(std::max(0.0L, var_kappa))) / (2.0 * delta) : 0.0;
    return est;
}

} // namespace widths
