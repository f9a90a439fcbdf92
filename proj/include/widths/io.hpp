#pragma once

#include "widths/geometry.hpp"
#include "widths/moments.hpp"
#include "widths/reinhardt.hpp"
#include "widths/symmetry.hpp"

#include <string>
#include <string_view>

namespace widths::io {

/// 17 significant digits ("%.17g"); round-trips every finite double exactly.
std::string format_number(double x);

/// Parses {"vertices": [[x, y], ...]} or headerless "x,y" lines; the format is
/// detected from the first non-blank character. Throws Error{ParseError} on
/// malformed input; geometric validation errors propagate from make_polygon.
ConvexPolygon parse_polygon(std::string_view text);
ConvexPolygon read_polygon_file(const std::string& path);

/// [[x, y], ...]
std::string points_to_json(std::span<const PlanarVector> points);

std::string polygon_to_json(const ConvexPolygon& polygon);
std::string polygon_to_csv(const ConvexPolygon& polygon);

/// {"mean":..., "second_moment":..., "kappa":..., "delta":...}
std::string summary_to_json(const MomentSummary& summary);

/// {"pre_edges": [[x, y], ...]} sorted by argument.
std::string bundle_to_json(const PreEdgeBundle& bundle);
PreEdgeBundle parse_bundle(std::string_view text);

/// {"n":..., "classes":[{"cyclic":[...], "sign_vector":[...], "delta":...}]}
std::string reinhardt_to_json(int n, const std::vector<ReinhardtClass>& classes);

std::string int_list_to_json(const std::vector<int>& values);

} // namespace widths::io
