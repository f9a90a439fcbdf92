#include "widths/io.hpp"

#include "widths/error.hpp"

#include <json.hpp>

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace widths::io {

namespace {

std::vector<PlanarVector> parse_point_array(const nlohmann::json& arr, const char* what) {
    if (!arr.is_array()) {
        throw Error(ErrorKind::ParseError, std::string(what) + " must be an array");
    }
    std::vector<PlanarVector> pts;
    for (const auto& p : arr) {
        if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number()) {
            throw Error(ErrorKind::ParseError, std::string(what) + " entries must be [x, y] number pairs");
        }
        const double x = p[0].get<double>();
        const double y = p[1].get<double>();
        if (!std::isfinite(x) || !std::isfinite(y)) {
            throw Error(ErrorKind::ParseError, "non-finite coordinate");
        }
        pts.emplace_back(x, y);
    }
    return pts;
}

nlohmann::json parse_json(std::string_view text) {
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorKind::ParseError, e.what());
    }
}

double parse_double(const std::string& field, std::size_t line) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(field, &used);
    } catch (const std::exception&) {
        throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": not a number");
    }
    while (used < field.size() && std::isspace(static_cast<unsigned char>(field[used]))) {
        ++used;
    }
    if (used != field.size() || !std::isfinite(v)) {
        throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": bad number '" + field + "'");
    }
    return v;
}

} // namespace

std::string points_to_json(std::span<const PlanarVector> pts) {
    std::string out = "[";
    for (std::size_t i = 0; i < pts.size(); ++i) {
        out += (i ? "," : "");
        out += "[" + format_number(pts[i].real()) + "," + format_number(pts[i].imag()) + "]";
    }
    return out + "]";
}

std::string format_number(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

ConvexPolygon parse_polygon(std::string_view text) {
    std::size_t first = 0;
    while (first < text.size() && std::isspace(static_cast<unsigned char>(text[first]))) {
        ++first;
    }
    if (first == text.size()) {
        throw Error(ErrorKind::ParseError, "empty polygon input");
    }
    if (text[first] == '{') {
        const auto doc = parse_json(text);
        if (!doc.is_object() || !doc.contains("vertices")) {
            throw Error(ErrorKind::ParseError, "expected an object with a \"vertices\" array");
        }
        return make_polygon(parse_point_array(doc["vertices"], "vertices"));
    }
    std::vector<PlanarVector> pts;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) {
            continue;
        }
        const auto comma = line.find(',');
        if (comma == std::string::npos || line.find(',', comma + 1) != std::string::npos) {
            throw Error(ErrorKind::ParseError, "line " + std::to_string(lineno) + ": expected x,y");
        }
        pts.emplace_back(parse_double(line.substr(0, comma), lineno), parse_double(line.substr(comma + 1), lineno));
    }
    return make_polygon(std::move(pts));
}

ConvexPolygon read_polygon_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorKind::ParseError, "cannot open " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_polygon(ss.str());
}

std::string polygon_to_json(const ConvexPolygon& polygon) {
    return "{\"vertices\":" + points_to_json(polygon.vertices()) + "}";
}

std::string polygon_to_csv(const ConvexPolygon& polygon) {
    std::string out;
    for (const auto& v : polygon.vertices()) {
        out += format_number(v.real()) + "," + format_number(v.imag()) + "\n";
    }
    return out;
}

std::string summary_to_json(const MomentSummary& s) {
    return "{\"mean\":" + format_number(s.mean) + ",\"second_moment\":" + format_number(s.second_moment) +
           ",\"kappa\":" + format_number(s.kappa) + ",\"delta\":" + format_number(s.delta) + "}";
}

std::string bundle_to_json(const PreEdgeBundle& bundle) {
    return "{\"pre_edges\":" + points_to_json(bundle.pre_edges()) + "}";
}

PreEdgeBundle parse_bundle(std::string_view text) {
    const auto doc = parse_json(text);
    if (!doc.is_object() || !doc.contains("pre_edges")) {
        throw Error(ErrorKind::ParseError, "expected an object with a \"pre_edges\" array");
    }
    return PreEdgeBundle(parse_point_array(doc["pre_edges"], "pre_edges"));
}

std::string int_list_to_json(const std::vector<int>& values) {
    std::string out = "[";
    for (std::size_t i = 0; i < values.size(); ++i) {
        out += (i ? "," : "") + std::to_string(values[i]);
    }
    return out + "]";
}

std::string reinhardt_to_json(int n, const std::vector<ReinhardtClass>& classes) {
    std::string out = "{\"n\":" + std::to_string(n) + ",\"classes\":[";
    for (std::size_t i = 0; i < classes.size(); ++i) {
        const auto& c = classes[i];
        out += (i ? "," : "");
        out += "{\"cyclic\":" + int_list_to_json(c.cyclic.runs()) +
               ",\"sign_vector\":" + int_list_to_json(c.representative.signs()) +
               ",\"delta\":" + format_number(moment_summary(realize(c.representative)).delta) + "}";
    }
    return out + "]}";
}

} // namespace widths::io
