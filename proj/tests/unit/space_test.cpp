#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "innerkit/space.hpp"
#include "oracles.hpp"

namespace innerkit {
namespace {

using C = Complex;

SpaceContext dirichlet() { return {dirichlet_weights(64)}; }
SpaceContext bergman() { return {bergman_weights(64)}; }
SpaceContext hardy() { return {hardy_weights(64)}; }

double direct_norm_sq(const TruncatedSeries& f, const SpaceContext& S) {
    double s = 0.0;
    for (std::size_t k = 0; k <= f.degree(); ++k) s += std::norm(f[k]) * S.weights[k];
    return s;
}

TEST(Space, NormSq) {
    EXPECT_DOUBLE_EQ(norm_sq(TruncatedSeries({1.0, 1.0}), dirichlet()), 3.0);
    for (const auto& S : {hardy(), dirichlet(), bergman()}) EXPECT_EQ(norm_sq(TruncatedSeries{1.0}, S), 1.0);
    EXPECT_NEAR(norm_sq(TruncatedSeries({0.0, std::sqrt(2.0)}), bergman()), 1.0, 1e-15);
    EXPECT_NEAR(norm(TruncatedSeries({1.0, 1.0}), dirichlet()), std::sqrt(3.0), 1e-15);
}

TEST(Space, InnerProduct) {
    for (const auto& S : {hardy(), dirichlet(), bergman()})
        EXPECT_EQ(inner_product(TruncatedSeries({0.0, 1.0}), TruncatedSeries{1.0}, S), C(0.0));
    EXPECT_EQ(inner_product(TruncatedSeries({1.0, 1.0}), TruncatedSeries({1.0, -1.0}), dirichlet()), C(-1.0));
    EXPECT_EQ(inner_product(TruncatedSeries{C(0.0, 1.0)}, TruncatedSeries{1.0}, hardy()), C(0.0, 1.0));
    EXPECT_EQ(inner_product(TruncatedSeries{1.0}, TruncatedSeries{C(0.0, 1.0)}, hardy()), C(0.0, -1.0));
}

TEST(Space, InnerProductDiagonalIsNormSq) {
    std::mt19937_64 rng(3);
    const auto S = dirichlet();
    for (int trial = 0; trial < 200; ++trial) {
        const TruncatedSeries f(oracle::random_coefficients(rng, 1 + static_cast<std::size_t>(trial % 12)));
        const C ip = inner_product(f, f, S);
        const double n = norm_sq(f, S);
        EXPECT_LE(std::abs(ip - n), 1e-14 * n);
        EXPECT_NEAR(n, direct_norm_sq(f, S), 1e-12 * n);
    }
}

TEST(Space, Moments) {
    const auto S = dirichlet();
    const auto phi = scale(1.0 / std::sqrt(2.0), TruncatedSeries::monomial(1));
    EXPECT_NEAR(std::abs(moment(phi, 0, S) - 1.0), 0.0, 1e-15);
    EXPECT_EQ(moment(phi, 1, S), C(0.0));
    EXPECT_EQ(moment(phi, 1, S), inner_product(shift(phi, 1), phi, S));

    const auto f = scale(1.0 / std::sqrt(3.0), TruncatedSeries({1.0, 1.0}));
    EXPECT_NEAR(std::abs(moment(f, 1, S) - 2.0 / 3.0), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(moment(f, 1, S) - inner_product(shift(f, 1), f, S)), 0.0, 1e-15);
}

TEST(Space, MomentsMatchShiftedInnerProduct) {
    std::mt19937_64 rng(5);
    const auto S = dirichlet();
    for (int trial = 0; trial < 100; ++trial) {
        const TruncatedSeries f(oracle::random_coefficients(rng, 1 + static_cast<std::size_t>(trial % 12)));
        for (std::size_t j = 0; j <= f.degree(); ++j) {
            const C a = moment(f, j, S);
            const C b = inner_product(shift(f, j), f, S);
            EXPECT_LE(std::abs(a - b), 1e-12 * (1.0 + std::abs(b)));
        }
        EXPECT_EQ(moment(f, f.degree() + 1, S), C(0.0));
        EXPECT_EQ(moment(f, f.degree() + 9, S), C(0.0));
    }
}

TEST(Space, ShiftedNormSq) {
    EXPECT_EQ(shifted_norm_sq(TruncatedSeries{1.0}, 1, dirichlet()), 2.0);
    const auto f = scale(1.0 / std::sqrt(3.0), TruncatedSeries({1.0, 1.0}));
    EXPECT_NEAR(shifted_norm_sq(f, 1, dirichlet()), 5.0 / 3.0, 1e-15);
    EXPECT_DOUBLE_EQ(shifted_norm_sq(TruncatedSeries{1.0}, 1, bergman()), 0.5);
    EXPECT_LT(shifted_norm_sq(TruncatedSeries{1.0}, 1, bergman()), 1.0);
}

TEST(Space, Normalized) {
    const auto S = dirichlet();
    EXPECT_NEAR(norm_sq(normalized(TruncatedSeries({1.0, 2.0, C(0.0, 3.0)}), S), S), 1.0, 1e-15);
    EXPECT_THROW((void)normalized(TruncatedSeries{}, S), std::invalid_argument);
}

}  // namespace
}  // namespace innerkit
