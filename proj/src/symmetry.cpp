#include "widths/symmetry.hpp"

#include "widths/error.hpp"

#include <algorithm>
#include <cmath>

namespace widths {

namespace {

constexpr double kArgTol = 1e-9;
constexpr double kMagTol = 1e-9;
constexpr double kSymTol = 1e-12;

// Argument of a pre-edge on [0, pi).
double pre_edge_arg(PlanarVector v) {
    const double a = arg(v);
    return a >= kPi ? 0.0 : a;
}

bool bundles_match(const PreEdgeBundle& a, const PreEdgeBundle& b) {
    if (a.size() != b.size()) {
        return false;
    }
    for (std::size_t k = 0; k < a.size(); ++k) {
        const PlanarVector x = a.pre_edges()[k];
        const PlanarVector y = b.pre_edges()[k];
        if (std::abs(pre_edge_arg(x) - pre_edge_arg(y)) >= kArgTol) {
            return false;
        }
        const double scale = std::max(std::abs(x), std::abs(y));
        if (std::abs(std::abs(x) - std::abs(y)) > kMagTol * scale) {
            return false;
        }
    }
    return true;
}

} // namespace

bool in_upper_half_plane(PlanarVector v) { return v.imag() > 0.0 || (v.imag() == 0.0 && v.real() >= 0.0); }

PreEdgeBundle::PreEdgeBundle(std::vector<PlanarVector> pre_edges) : pre_edges_(std::move(pre_edges)) {
    for (const auto& b : pre_edges_) {
        if (std::abs(b) == 0.0) {
            throw Error(ErrorKind::ZeroVector, "zero pre-edge");
        }
        if (!in_upper_half_plane(b)) {
            throw Error(ErrorKind::BadParameter, "pre-edge outside the upper half plane");
        }
    }
    std::sort(pre_edges_.begin(), pre_edges_.end(),
              [](PlanarVector a, PlanarVector b) { return pre_edge_arg(a) < pre_edge_arg(b); });
    for (std::size_t k = 1; k < pre_edges_.size(); ++k) {
        if (pre_edge_arg(pre_edges_[k]) <= pre_edge_arg(pre_edges_[k - 1])) {
            throw Error(ErrorKind::BadParameter, "pre-edge arguments must be distinct");
        }
    }
}

bool operator==(const PreEdgeBundle& a, const PreEdgeBundle& b) { return bundles_match(a, b); }

PreEdgeBundle regular_bundle(int m, double magnitude, double phase) {
    if (m < 1 || !(magnitude > 0.0) || phase < 0.0 || phase >= kPi / m) {
        throw Error(ErrorKind::BadParameter, "regular bundle needs m >= 1, magnitude > 0, phase in [0, pi/m)");
    }
    std::vector<PlanarVector> pre;
    for (int j = 0; j < m; ++j) {
        pre.push_back(std::polar(magnitude, phase + kPi * j / m));
    }
    return PreEdgeBundle(std::move(pre));
}

PlanarVector iota(PlanarVector a) {
    if (std::abs(a) == 0.0) {
        throw Error(ErrorKind::ZeroVector, "iota of the zero vector");
    }
    return in_upper_half_plane(a) ? a : -a;
}

PreEdgeBundle asymmetrize(const ConvexPolygon& polygon) {
    std::vector<std::pair<double, PlanarVector>> items;
    for (const auto& e : polygon.edges()) {
        PlanarVector b = iota(e);
        double a = pre_edge_arg(b);
        // Arguments just below pi are parallel to the nonnegative real axis.
        if (kPi - a < kArgTol) {
            b = -b;
            a = 0.0;
        }
        items.emplace_back(a, b);
    }
    std::sort(items.begin(), items.end(), [](const auto& x, const auto& y) { return x.first < y.first; });

    std::vector<PlanarVector> merged;
    double group_arg = 0.0;
    for (const auto& [a, b] : items) {
        if (!merged.empty() && a - group_arg < kArgTol) {
            merged.back() += b;
        } else {
            merged.push_back(b);
            group_arg = a;
        }
    }
    // A merged sum near the real axis can land a rounding step below it.
    for (auto& b : merged) {
        if (!in_upper_half_plane(b)) {
            b = PlanarVector(b.real() >= 0.0 ? b.real() : -b.real(), 0.0);
        }
    }
    return PreEdgeBundle(std::move(merged));
}

ConvexPolygon symmetrize(const PreEdgeBundle& bundle) {
    const auto pre = bundle.pre_edges();
    const std::size_t m = pre.size();
    if (m == 0) {
        throw Error(ErrorKind::BadParameter, "empty bundle");
    }
    PlanarVector total{};
    for (const auto& b : pre) {
        total += b;
    }
    const PlanarVector gamma = -0.25 * total;
    std::vector<PlanarVector> vertices;
    vertices.reserve(2 * m);
    PlanarVector prefix{};
    vertices.push_back(gamma);
    for (std::size_t k = 0; k < m; ++k) {
        prefix += pre[k];
        vertices.push_back(gamma + 0.5 * prefix);
    }
    // Descending half: g + (b_{k+1} + ... + b_m)/2 for k = 1..m-1.
    PlanarVector suffix = total;
    for (std::size_t k = 0; k + 1 < m; ++k) {
        suffix -= pre[k];
        vertices.push_back(gamma + 0.5 * suffix);
    }
    return make_polygon(std::move(vertices));
}

double bundle_width(const PreEdgeBundle& bundle, Angle omega) {
    const double c = std::cos(omega.radians());
    const double s = std::sin(omega.radians());
    double width = 0.0;
    for (const auto& b : bundle.pre_edges()) {
        width += 0.5 * std::abs(b.imag() * c - b.real() * s);
    }
    return width;
}

bool is_symmetric(const ConvexPolygon& polygon) {
    const std::size_t n = polygon.size();
    if (n % 2 != 0) {
        return false;
    }
    double scale = 1.0;
    for (const auto& v : polygon.vertices()) {
        scale = std::max(scale, std::abs(v));
    }
    const std::size_t m = n / 2;
    for (std::size_t k = 0; k < m; ++k) {
        if (std::abs(polygon.vertex(k + m) + polygon.vertex(k)) > kSymTol * scale) {
            return false;
        }
    }
    return true;
}

double diagonal_width(const ConvexPolygon& polygon, Angle omega) {
    if (!is_symmetric(polygon)) {
        throw Error(ErrorKind::NotSymmetric, "diagonal representation needs a centrally symmetric polygon");
    }
    const std::size_t n = polygon.size();
    const double w = omega.radians();
    for (std::size_t j = 0; j < n; ++j) {
        const PlanarVector g = polygon.vertex(j);
        const double lo = arg(polygon.vertex(j + n - 1) - g);
        const double hi = arg(g - polygon.vertex(j + 1));
        // Sector [lo, hi] measured counterclockwise on the circle.
        double span_len = hi - lo;
        if (span_len < 0.0) {
            span_len += kTwoPi;
        }
        double offset = w - lo;
        if (offset < 0.0) {
            offset += kTwoPi;
        }
        if (kTwoPi - offset < 1e-12) {
            offset = 0.0;
        }
        if (offset <= span_len) {
            return 2.0 * std::abs(g) * std::sin(arg(g) - w);
        }
    }
    // Unreachable for a valid polygon: the sectors cover the circle.
    throw Error(ErrorKind::NotSymmetric, "direction not covered by any vertex sector");
}

bool is_realization(const ConvexPolygon& polygon, const PreEdgeBundle& bundle) {
    return bundles_match(asymmetrize(polygon), bundle);
}

} // namespace widths
