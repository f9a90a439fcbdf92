#include "widths/geometry.hpp"

#include "widths/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace widths {

namespace {

constexpr double kCollinearTol = 1e-12;
constexpr double kClosureTol = 1e-9;
constexpr double kTurningTol = 1e-9;

bool same_point(PlanarVector a, PlanarVector b) { return a == b; }

// Turn at the shared vertex of consecutive edges a then b, classified relative
// to the scale-free collinearity tolerance.
enum class Turn { Left, Right, Straight, Reverse };

Turn classify(PlanarVector a, PlanarVector b) {
    const double scale = std::abs(a) * std::abs(b);
    const double c = cross(a, b);
    if (std::abs(c) < kCollinearTol * scale) {
        return dot(a, b) > 0.0 ? Turn::Straight : Turn::Reverse;
    }
    return c > 0.0 ? Turn::Left : Turn::Right;
}

double turning_sum(std::span<const PlanarVector> edges) {
    double sum = 0.0;
    const std::size_t n = edges.size();
    for (std::size_t j = 0; j < n; ++j) {
        PlanarVector prev = edges[(j + n - 1) % n];
        sum += normalize_angle(arg(edges[j]) - arg(prev));
    }
    return sum;
}

std::vector<PlanarVector> edge_cycle(std::span<const PlanarVector> vertices) {
    std::vector<PlanarVector> edges(vertices.size());
    for (std::size_t j = 0; j < vertices.size(); ++j) {
        edges[j] = vertices[(j + 1) % vertices.size()] - vertices[j];
    }
    return edges;
}

} // namespace

double normalize_angle(double radians) {
    if (!std::isfinite(radians)) {
        throw Error(ErrorKind::BadParameter, "non-finite angle");
    }
    double r = std::remainder(radians, kTwoPi); // [-pi, pi]
    if (r <= -kPi) {
        r += kTwoPi;
    }
    return r;
}

double arg(PlanarVector v) {
    double a = std::atan2(v.imag(), v.real());
    return a == -kPi ? kPi : a;
}

std::vector<PlanarVector> ConvexPolygon::edges() const { return edge_cycle(vertices_); }

ConvexPolygon make_polygon(std::vector<PlanarVector> vertices) {
    for (const auto& v : vertices) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
            throw Error(ErrorKind::DegenerateInput, "non-finite coordinate");
        }
    }
    // Drop consecutive duplicates (cyclically).
    std::vector<PlanarVector> pts;
    for (const auto& v : vertices) {
        if (pts.empty() || !same_point(pts.back(), v)) {
            pts.push_back(v);
        }
    }
    while (pts.size() > 1 && same_point(pts.front(), pts.back())) {
        pts.pop_back();
    }
    if (pts.size() < 2) {
        throw Error(ErrorKind::DegenerateInput, "fewer than 2 distinct points");
    }
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            if (same_point(pts[i], pts[j])) {
                throw Error(ErrorKind::NotClosedCycle, "point repeated at positions " + std::to_string(i) +
                                                           " and " + std::to_string(j));
            }
        }
    }

    // Merge non-extremal vertices lying inside a straight run.
    bool merged = true;
    while (merged && pts.size() > 2) {
        merged = false;
        const std::size_t n = pts.size();
        for (std::size_t j = 0; j < n; ++j) {
            PlanarVector in = pts[j] - pts[(j + n - 1) % n];
            PlanarVector out = pts[(j + 1) % n] - pts[j];
            if (classify(in, out) == Turn::Straight) {
                pts.erase(pts.begin() + static_cast<std::ptrdiff_t>(j));
                merged = true;
                break;
            }
        }
    }

    if (pts.size() > 2) {
        const auto edges = edge_cycle(pts);
        const std::size_t n = edges.size();
        bool all_collinear = true;
        for (std::size_t j = 0; j < n; ++j) {
            if (std::abs(cross(edges[0], edges[j])) >= kCollinearTol * std::abs(edges[0]) * std::abs(edges[j])) {
                all_collinear = false;
                break;
            }
        }
        if (all_collinear) {
            // Degenerate polygon: keep the two extremal points along the line.
            const PlanarVector dir = edges[0] / std::abs(edges[0]);
            auto key = [&](PlanarVector p) { return dot(p - pts[0], dir); };
            auto [lo, hi] = std::minmax_element(pts.begin(), pts.end(),
                                                [&](PlanarVector a, PlanarVector b) { return key(a) < key(b); });
            const std::size_t ilo = static_cast<std::size_t>(lo - pts.begin());
            const std::size_t ihi = static_cast<std::size_t>(hi - pts.begin());
            std::vector<PlanarVector> two = ilo < ihi ? std::vector{*lo, *hi} : std::vector{*hi, *lo};
            return ConvexPolygon(std::move(two));
        }
        for (std::size_t j = 0; j < n; ++j) {
            const Turn turn = classify(edges[(j + n - 1) % n], edges[j]);
            if (turn != Turn::Left) {
                throw Error(ErrorKind::NotConvex, "turn at vertex " + std::to_string(j) + " is not counterclockwise");
            }
        }
        const double turning = turning_sum(edges);
        if (std::abs(turning - kTwoPi) > kTurningTol) {
            throw Error(ErrorKind::NotConvex, "total turning " + std::to_string(turning) + " != 2 pi");
        }
    }
    return ConvexPolygon(std::move(pts));
}

ConvexPolygon polygon_from_edges(std::span<const PlanarVector> edges, PlanarVector origin) {
    if (edges.size() < 2) {
        throw Error(ErrorKind::DegenerateInput, "need at least 2 edges");
    }
    PlanarVector defect{};
    double length = 0.0;
    for (const auto& e : edges) {
        if (std::abs(e) == 0.0) {
            throw Error(ErrorKind::DegenerateInput, "zero edge");
        }
        defect += e;
        length += std::abs(e);
    }
    if (std::abs(defect.real()) > kClosureTol * length || std::abs(defect.imag()) > kClosureTol * length) {
        throw Error(ErrorKind::NotClosedCycle, "edge cycle does not close");
    }
    const PlanarVector share = defect / static_cast<double>(edges.size());
    std::vector<PlanarVector> vertices;
    vertices.reserve(edges.size());
    PlanarVector p = origin;
    for (const auto& e : edges) {
        vertices.push_back(p);
        p += e - share;
    }
    return make_polygon(std::move(vertices));
}

double shadow_width(std::span<const PlanarVector> edges, double omega) {
    // |e| sin(arg e - omega) = Im(e * exp(-i omega)).
    const double c = std::cos(omega);
    const double s = std::sin(omega);
    double width = 0.0;
    for (const auto& e : edges) {
        const double h = e.imag() * c - e.real() * s;
        if (h > 0.0) {
            width += h;
        }
    }
    return width;
}

double shadow_width(const ConvexPolygon& polygon, Angle omega) {
    return shadow_width(polygon.edges(), omega.radians());
}

ConvexPolygon regular_polygon(int n, double circumradius, Angle phase) {
    if (n < 2) {
        throw Error(ErrorKind::BadParameter, "regular polygon needs n >= 2");
    }
    if (!(circumradius > 0.0) || !std::isfinite(circumradius)) {
        throw Error(ErrorKind::BadParameter, "circumradius must be positive");
    }
    std::vector<PlanarVector> vertices;
    vertices.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        vertices.push_back(std::polar(circumradius, phase.radians() + kTwoPi * k / n));
    }
    return make_polygon(std::move(vertices));
}

double perimeter(const ConvexPolygon& polygon) {
    double sum = 0.0;
    for (std::size_t j = 0; j < polygon.size(); ++j) {
        sum += std::abs(polygon.edge(j));
    }
    return sum;
}

double minimal_width(const ConvexPolygon& polygon) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < polygon.size(); ++j) {
        const PlanarVector e = polygon.edge(j);
        const PlanarVector unit = e / std::abs(e);
        double far = 0.0;
        for (const auto& v : polygon.vertices()) {
            far = std::max(far, std::abs(cross(unit, v - polygon.vertex(j))));
        }
        best = std::min(best, far);
    }
    return best;
}

ConvexPolygon similarity_image(const ConvexPolygon& polygon, double scale, double rotation,
                               PlanarVector translation) {
    if (!(scale > 0.0)) {
        throw Error(ErrorKind::BadParameter, "similarity scale must be positive");
    }
    const PlanarVector factor = std::polar(scale, rotation);
    std::vector<PlanarVector> out;
    out.reserve(polygon.size());
    for (const auto& v : polygon.vertices()) {
        out.push_back(factor * v + translation);
    }
    return make_polygon(std::move(out));
}

double total_turning(const ConvexPolygon& polygon) { return turning_sum(polygon.edges()); }

} // namespace widths
