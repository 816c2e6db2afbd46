#include <gtest/gtest.h>

#include <cmath>
#include <stdexcept>

#include "innerkit/json_io.hpp"

namespace innerkit {
namespace {

using nlohmann::json;
using C = Complex;

TEST(JsonIo, SeriesRoundTrip) {
    const TruncatedSeries f{C(0.5, -1.0), C(0.0), C(2.0, 3.25)};
    const json j = to_json(f);
    EXPECT_EQ(j, json::parse("[[0.5,-1.0],[0.0,0.0],[2.0,3.25]]"));
    EXPECT_EQ(series_from_json(j), f);
    EXPECT_THROW((void)series_from_json(json::parse("[[1]]")), std::invalid_argument);
    EXPECT_THROW((void)series_from_json(json::parse("{}")), std::invalid_argument);
}

TEST(JsonIo, Weights) {
    const json j = to_json(bergman_weights(3));
    EXPECT_EQ(j["spec"], "bergman");
    EXPECT_EQ(j["rule"], "bergman");
    EXPECT_EQ(j["expansive"], false);
    EXPECT_EQ(j["first_violation"], 0);
    EXPECT_EQ(j["values"].size(), 4u);
    EXPECT_EQ(to_json(dirichlet_weights(3))["first_violation"], nullptr);
}

TEST(JsonIo, VerdictAndWitness) {
    const SpaceContext S{dirichlet_weights(8)};
    const auto f = scale(1.0 / std::sqrt(3.0), TruncatedSeries({1.0, 1.0}));
    json v = to_json(is_inner(f, S));
    round_floats(v);
    EXPECT_EQ(v["is_inner"], false);
    EXPECT_EQ(v["first_bad"]["j"], 1);
    EXPECT_EQ(v["first_bad"]["abs"], 0.666666666667);
    EXPECT_EQ(v["moments"][0][0], 1);

    json w = to_json(*refute(f, S));
    round_floats(w);
    EXPECT_EQ(w["k"], 1);
    EXPECT_EQ(w["lambda"], json::parse("[1.5, 0.0]"));
    EXPECT_EQ(w["margin"], 1.66666666667);
}

TEST(JsonIo, RoundFloats) {
    json doc = {{"a", 0.1 + 0.2}, {"b", {1.0 / 3.0, -0.0, 7}}, {"c", "text"}, {"d", 1e-20 / 3.0}};
    round_floats(doc);
    EXPECT_EQ(doc.dump(), R"({"a":0.3,"b":[0.333333333333,0.0,7],"c":"text","d":3.33333333333e-21})");
    json inf = std::nan("");
    round_floats(inf);
    EXPECT_TRUE(inf.is_null() || inf.is_number_float());
}

}  // namespace
}  // namespace innerkit
