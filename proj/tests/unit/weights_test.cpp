#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <stdexcept>

#include "innerkit/weights.hpp"
#include "oracles.hpp"

namespace innerkit {
namespace {

std::vector<double> as_vector(const WeightSequence& w) { return {w.values().begin(), w.values().end()}; }

RadialMeasure point_mass(double r, double mass) {
    RadialMeasure mu;
    mu.atoms.push_back({r, mass});
    return mu;
}

TEST(Weights, Hardy) {
    EXPECT_EQ(as_vector(hardy_weights(2)), (std::vector<double>{1, 1, 1}));
    EXPECT_EQ(as_vector(hardy_weights(0)), (std::vector<double>{1}));
    const auto w = hardy_weights(20);
    EXPECT_FALSE(check_expansive(w, 19).has_value());
    EXPECT_TRUE(w.expansive());
    EXPECT_EQ(w.spec(), "hardy");
}

TEST(Weights, DirichletMatchesAreaQuadrature) {
    const auto w = dirichlet_weights(3);
    EXPECT_EQ(as_vector(w), (std::vector<double>{1, 2, 3, 4}));
    EXPECT_EQ(w[0], 1.0);
    for (std::size_t k = 0; k <= 3; ++k) EXPECT_NEAR(w[k], 1.0 + oracle::area_dirichlet_integral(k), 1e-12);
}

TEST(Weights, DirichletGrowthConstantTwo) {
    const auto w = dirichlet_weights(10);
    for (std::size_t k = 1; k <= 10; ++k) EXPECT_LE(w[k], 2.0 * static_cast<double>(k * k));
    EXPECT_DOUBLE_EQ(growth_constant(w, 10), 2.0);
}

TEST(Weights, Bergman) {
    const auto w = bergman_weights(2);
    EXPECT_EQ(w[0], 1.0);
    EXPECT_DOUBLE_EQ(w[1], 0.5);
    EXPECT_DOUBLE_EQ(w[2], 1.0 / 3.0);
    const auto v = check_expansive(w, 1);
    ASSERT_TRUE(v.has_value());
    EXPECT_EQ(*v, 0u);
    EXPECT_FALSE(w.expansive());
}

TEST(Weights, PowerFamily) {
    EXPECT_EQ(as_vector(power_weights(0.0, 6)), as_vector(hardy_weights(6)));
    const auto b = power_weights(-1.0, 6);
    for (std::size_t k = 0; k <= 6; ++k) EXPECT_DOUBLE_EQ(b[k], bergman_weights(6)[k]);
    EXPECT_EQ(as_vector(power_weights(1.0, 2)), (std::vector<double>{1, 2, 3}));
    EXPECT_TRUE(power_weights(3.0, 4).super_quadratic());
    EXPECT_FALSE(power_weights(2.0, 4).super_quadratic());
    EXPECT_EQ(power_weights(0.5, 2).spec(), "power:0.5");
    EXPECT_THROW((void)power_weights(std::numeric_limits<double>::quiet_NaN(), 2), std::invalid_argument);
}

TEST(Weights, FromNormalizedAreaIsDirichlet) {
    const auto w = weights_from_radial_measure(RadialMeasure::normalized_area(), 12);
    const auto d = dirichlet_weights(12);
    for (std::size_t k = 0; k <= 12; ++k) EXPECT_NEAR(w[k] / d[k], 1.0, 1e-12);
}

TEST(Weights, FromZeroMeasureIsHardy) {
    const auto w = weights_from_radial_measure(RadialMeasure{}, 8);
    EXPECT_EQ(as_vector(w), as_vector(hardy_weights(8)));
    EXPECT_EQ(as_vector(parse_weight_spec("atoms:", 8)), as_vector(hardy_weights(8)));
}

TEST(Weights, FromUnitCircleMassMatchesShrinkingCircleQuadrature) {
    const auto w = weights_from_radial_measure(point_mass(1.0, 1.0), 10);
    for (std::size_t k = 0; k <= 10; ++k) {
        EXPECT_DOUBLE_EQ(w[k], 1.0 + static_cast<double>(k * k));
        double prev_err = std::numeric_limits<double>::infinity();
        for (double eps : {1e-2, 1e-4, 1e-6, 1e-9}) {
            const double err = std::abs(1.0 + oracle::circle_dirichlet_integral(k, 1.0 - eps) - w[k]);
            EXPECT_LE(err, prev_err + 1e-12);
            prev_err = err;
        }
        EXPECT_LE(prev_err, 1e-5);
    }
}

TEST(Weights, SmallCircleMassViolationByDirectScan) {
    const auto w = weights_from_radial_measure(point_mass(0.1, 10.0), 10);
    std::optional<std::size_t> expected;
    for (std::size_t k = 0; k < 10 && !expected; ++k) {
        const auto om = [](std::size_t j) {
            return j == 0 ? 1.0 : 1.0 + static_cast<double>(j * j) * 10.0 * std::pow(0.01, static_cast<double>(j - 1));
        };
        if (om(k) > om(k + 1)) expected = k;
    }
    ASSERT_TRUE(expected.has_value());
    EXPECT_EQ(check_expansive(w, 9), expected);
    EXPECT_FALSE(w.expansive());
}

TEST(Weights, CheckExpansiveRequiresMaterializedRange) {
    EXPECT_THROW((void)check_expansive(hardy_weights(3), 4), std::out_of_range);
}

TEST(Weights, GrowthConstants) {
    EXPECT_EQ(growth_constant(hardy_weights(10), 10), std::nextafter(1.0, 2.0));
    EXPECT_DOUBLE_EQ(growth_constant(weights_from_radial_measure(point_mass(1.0, 1.0), 10), 10), 2.0);
    EXPECT_THROW((void)growth_constant(hardy_weights(10), 0), std::invalid_argument);
}

TEST(Weights, MeasureValidation) {
    EXPECT_THROW((void)weights_from_radial_measure(point_mass(1.5, 1.0), 4), std::invalid_argument);
    EXPECT_THROW((void)weights_from_radial_measure(point_mass(0.5, -1.0), 4), std::invalid_argument);
    EXPECT_THROW((void)weights_from_radial_measure(point_mass(0.5, std::nan("")), 4), std::invalid_argument);
}

TEST(Weights, CustomSequences) {
    const auto w = WeightSequence::custom({1.0, 2.0, 2.0, 5.0});
    EXPECT_TRUE(w.expansive());
    EXPECT_FALSE(w.extendable());
    EXPECT_THROW((void)w[4], std::out_of_range);
    EXPECT_THROW((void)WeightSequence::custom({2.0, 3.0}), std::invalid_argument);
    EXPECT_THROW((void)WeightSequence::custom({1.0, 0.0}), std::invalid_argument);
    EXPECT_THROW((void)WeightSequence::custom({}), std::invalid_argument);
}

TEST(Weights, GeneratorExtendsPastMaterializedRange) {
    const auto w = dirichlet_weights(4);
    EXPECT_EQ(w.size(), 5u);
    EXPECT_DOUBLE_EQ(w[40], 41.0);
    EXPECT_EQ(w.size(), 5u);
    const auto e = w.extended(40);
    EXPECT_EQ(e.size(), 41u);
    EXPECT_TRUE(dirichlet_weights(2).expansive_through(1000));
    EXPECT_FALSE(bergman_weights(2).expansive_through(1000));
}

TEST(Weights, ParseSpec) {
    EXPECT_EQ(parse_weight_spec("hardy", 3).rule(), WeightRule::hardy);
    EXPECT_EQ(parse_weight_spec("dirichlet", 3)[3], 4.0);
    EXPECT_EQ(parse_weight_spec("bergman", 3)[1], 0.5);
    EXPECT_DOUBLE_EQ(parse_weight_spec("power:0.5", 3)[3], 2.0);
    const auto a = parse_weight_spec("atoms:1,1", 5);
    EXPECT_EQ(a[5], 26.0);
    EXPECT_EQ(a.spec(), "atoms:1,1");
    EXPECT_EQ(parse_weight_spec(a.spec(), 5)[4], 17.0);
    for (const char* bad : {"", "sobolev", "power:", "power:x", "atoms:1", "atoms:2,1", "atoms:1,1;"})
        EXPECT_THROW((void)parse_weight_spec(bad, 3), std::invalid_argument) << bad;
}

}  // namespace
}  // namespace innerkit
