#include "widths/error.hpp"
#include "widths/experiments.hpp"
#include "widths/io.hpp"

#include <gtest/gtest.h>

#include <json.hpp>

using namespace widths;

namespace {

ErrorKind parse_error_kind(std::string_view text) {
    try {
        io::parse_polygon(text);
    } catch (const Error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "no Error for: " << text;
    return ErrorKind::BadParameter;
}

} // namespace

TEST(Io, FormatNumberRoundTrips) {
    for (double x : {0.1, 1.0 / 3.0, 0.035306425305172494, -1e-300, 12345.678}) {
        EXPECT_EQ(std::stod(io::format_number(x)), x);
    }
}

TEST(Io, JsonRoundTrip) {
    const auto p = random_convex_polygon(8, 17);
    const auto q = io::parse_polygon(io::polygon_to_json(p));
    ASSERT_EQ(p.size(), q.size());
    for (std::size_t k = 0; k < p.size(); ++k) {
        EXPECT_EQ(p.vertex(k), q.vertex(k));
    }
}

TEST(Io, CsvRoundTrip) {
    const auto p = random_convex_polygon(6, 18);
    const auto q = io::parse_polygon(io::polygon_to_csv(p));
    ASSERT_EQ(p.size(), q.size());
    for (std::size_t k = 0; k < p.size(); ++k) {
        EXPECT_EQ(p.vertex(k), q.vertex(k));
    }
}

TEST(Io, ParsesWhitespaceAndBlankLines) {
    EXPECT_EQ(io::parse_polygon("\n 0, 0\n1,0\n\n1 ,1\n0,1\r\n").size(), 4u);
    EXPECT_EQ(io::parse_polygon("  {\"vertices\": [[0,0],[1,0],[0,1]]}").size(), 3u);
}

TEST(Io, ParseErrors) {
    EXPECT_EQ(parse_error_kind(""), ErrorKind::ParseError);
    EXPECT_EQ(parse_error_kind("{\"vertices\": [[0,0],[1,0]"), ErrorKind::ParseError);
    EXPECT_EQ(parse_error_kind("{\"points\": []}"), ErrorKind::ParseError);
    EXPECT_EQ(parse_error_kind("{\"vertices\": [[0,0,1]]}"), ErrorKind::ParseError);
    EXPECT_EQ(parse_error_kind("{\"vertices\": [[0,\"a\"]]}"), ErrorKind::ParseError);
    EXPECT_EQ(parse_error_kind("0,0\n1\n"), ErrorKind::ParseError);
    EXPECT_EQ(parse_error_kind("0,0\n1,x\n"), ErrorKind::ParseError);
    EXPECT_EQ(parse_error_kind("0,0\n1,0,2\n"), ErrorKind::ParseError);
    EXPECT_EQ(parse_error_kind("0,0\n1,nan\n1,1\n"), ErrorKind::ParseError);
    // Geometric errors pass through with their own kind.
    EXPECT_EQ(parse_error_kind("0,0\n1,1\n1,0\n"), ErrorKind::NotConvex);
    EXPECT_THROW(io::read_polygon_file("/nonexistent/polygon.json"), Error);
}

TEST(Io, SummaryJson) {
    const auto doc = nlohmann::json::parse(io::summary_to_json(MomentSummary::from_moments(1.0, 1.25)));
    EXPECT_DOUBLE_EQ(doc["kappa"].get<double>(), 1.25);
    EXPECT_DOUBLE_EQ(doc["delta"].get<double>(), 0.5);
}

TEST(Io, BundleRoundTrip) {
    const PreEdgeBundle b({{1, 0}, {2, 2}, {0, 1}, {-1, 1}});
    EXPECT_TRUE(io::parse_bundle(io::bundle_to_json(b)) == b);
    EXPECT_THROW(io::parse_bundle("{\"pre_edges\": [[0,-1]]}"), Error);
    EXPECT_THROW(io::parse_bundle("[]"), Error);
}

TEST(Io, ReinhardtJson) {
    const auto doc = nlohmann::json::parse(io::reinhardt_to_json(6, enumerate_reinhardt(6)));
    EXPECT_EQ(doc["n"], 6);
    ASSERT_EQ(doc["classes"].size(), 1u);
    EXPECT_EQ(doc["classes"][0]["cyclic"], nlohmann::json({2, 2, 2}));
    EXPECT_NEAR(doc["classes"][0]["delta"].get<double>(), nu(6), 1e-12);
}
