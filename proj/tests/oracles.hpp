#pragma once

// Test-only reference computations. None of these go through the library's
// edge-sum formulas: widths come from vertex projections, moments from
// Gauss-Legendre integration of those projections, and P(n) membership from a
// floating complex sum.

#include "widths/geometry.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <span>
#include <vector>

namespace oracle {

using widths::PlanarVector;

// Shadow under light from omega = extent of the vertices along omega + pi/2.
inline double projection_width(std::span<const PlanarVector> vertices, double omega) {
    const double ux = std::cos(omega + widths::kPi / 2);
    const double uy = std::sin(omega + widths::kPi / 2);
    double lo = 1e300;
    double hi = -1e300;
    for (const auto& v : vertices) {
        const double p = v.real() * ux + v.imag() * uy;
        lo = std::min(lo, p);
        hi = std::max(hi, p);
    }
    return hi - lo;
}

struct Moments {
    double mean;
    double second;
};

// Integrates projection_width and its square over [0, 2pi) with 8-point
// Gauss-Legendre on every interval between directions where two vertices
// project to the same point (the only places the integrand can kink).
inline Moments projection_moments(std::span<const PlanarVector> vertices, int sub = 4) {
    static constexpr std::array<double, 8> x{-0.9602898564975363, -0.7966664774136267, -0.5255324099163290,
                                             -0.1834346424956498, 0.1834346424956498,  0.5255324099163290,
                                             0.7966664774136267,  0.9602898564975363};
    static constexpr std::array<double, 8> w{0.1012285362903763, 0.2223810344533745, 0.3137066458778873,
                                             0.3626837833783620, 0.3626837833783620, 0.3137066458778873,
                                             0.2223810344533745, 0.1012285362903763};
    std::vector<double> cuts{0.0, widths::kTwoPi};
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        for (std::size_t j = 0; j < vertices.size(); ++j) {
            if (i == j) {
                continue;
            }
            const PlanarVector d = vertices[j] - vertices[i];
            double a = std::atan2(d.imag(), d.real());
            a = std::fmod(a + 2 * widths::kTwoPi, widths::kTwoPi);
            cuts.push_back(a);
        }
    }
    std::sort(cuts.begin(), cuts.end());
    double m1 = 0.0;
    double m2 = 0.0;
    for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
        const double len = (cuts[k + 1] - cuts[k]) / sub;
        if (len <= 0.0) {
            continue;
        }
        for (int s = 0; s < sub; ++s) {
            const double lo = cuts[k] + s * len;
            for (std::size_t q = 0; q < x.size(); ++q) {
                const double f = projection_width(vertices, lo + 0.5 * len * (x[q] + 1.0));
                m1 += 0.5 * len * w[q] * f;
                m2 += 0.5 * len * w[q] * f * f;
            }
        }
    }
    return {m1 / widths::kTwoPi, m2 / widths::kTwoPi};
}

inline double projection_delta(std::span<const PlanarVector> vertices) {
    const auto m = projection_moments(vertices);
    return std::sqrt(m.second / (m.mean * m.mean) - 1.0);
}

// |sum_j c_j exp(i j pi / n)| in floating point.
inline double root_sum_magnitude(std::span<const int> signs) {
    const auto n = static_cast<double>(signs.size());
    std::complex<double> s{};
    for (std::size_t j = 0; j < signs.size(); ++j) {
        s += static_cast<double>(signs[j]) * std::polar(1.0, widths::kPi * static_cast<double>(j) / n);
    }
    return std::abs(s);
}

// All c in {-1, 1}^n with a vanishing floating sum, lexicographic with +1 first.
inline std::vector<std::vector<int>> brute_force_P(int n) {
    std::vector<std::vector<int>> out;
    for (long mask = 0; mask < (1L << n); ++mask) {
        std::vector<int> c(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j) {
            c[static_cast<std::size_t>(j)] = ((mask >> (n - 1 - j)) & 1) ? -1 : 1;
        }
        if (root_sum_magnitude(c) < 1e-9) {
            out.push_back(std::move(c));
        }
    }
    return out;
}

inline bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

} // namespace oracle
