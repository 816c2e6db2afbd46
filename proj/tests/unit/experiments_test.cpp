#include <gtest/gtest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "innerkit/experiments.hpp"
#include "innerkit/inner.hpp"

namespace innerkit {
namespace {

using C = Complex;
using nlohmann::json;

TEST(Experiments, TrialRngIsDeterministicPerTrial) {
    auto a = trial_rng(42, 3);
    auto b = trial_rng(42, 3);
    auto c = trial_rng(42, 4);
    const auto x = a();
    EXPECT_EQ(x, b());
    EXPECT_NE(x, c());
}

TEST(Experiments, SamplersAreNormalized) {
    const SpaceContext S{dirichlet_weights(32)};
    auto rng = trial_rng(1, 0);
    for (int i = 0; i < 50; ++i) {
        const auto p = random_polynomial(rng, 12, S);
        EXPECT_GE(p.degree(), 1u);
        EXPECT_LE(p.degree(), 12u);
        EXPECT_NEAR(norm_sq(p, S), 1.0, 1e-12);
        const auto m = random_monomial_inner(rng, 12, S);
        EXPECT_TRUE(is_inner(m, S).is_inner);
        double eps = 0.0;
        const auto q = near_inner_polynomial(rng, 12, S, &eps);
        EXPECT_GE(eps, 1e-3);
        EXPECT_LE(eps, 1e-1);
        EXPECT_NEAR(norm_sq(q, S), 1.0, 1e-12);
    }
}

TEST(Experiments, VerifyTheoremDirichlet) {
    const SpaceContext S{dirichlet_weights(64)};
    const auto rep = verify_theorem_main(S, 500, 12, 42);
    EXPECT_TRUE(rep.ok()) << to_json(rep)["failures"].dump();
    EXPECT_EQ(rep.trials, 500u);
    EXPECT_EQ(rep.records.size(), 500u);
}

TEST(Experiments, VerifyTheoremHardy) {
    const SpaceContext S{hardy_weights(64)};
    const auto rep = verify_theorem_main(S, 500, 12, 7);
    EXPECT_TRUE(rep.ok()) << to_json(rep)["failures"].dump();
}

TEST(Experiments, VerifyTheoremOtherExpansiveWeights) {
    for (const char* spec : {"power:0.5", "atoms:1,1", "atoms:0.5,2;1,1"}) {
        const SpaceContext S{parse_weight_spec(spec, 64)};
        EXPECT_TRUE(verify_theorem_main(S, 100, 8, 3).ok()) << spec;
    }
}

TEST(Experiments, VerifyTheoremEmptyAndDeterministic) {
    const SpaceContext S{dirichlet_weights(64)};
    const auto empty = verify_theorem_main(S, 0, 12, 42);
    EXPECT_EQ(empty.trials, 0u);
    EXPECT_TRUE(empty.records.empty());
    EXPECT_TRUE(empty.ok());
    EXPECT_EQ(to_json(verify_theorem_main(S, 40, 12, 42)).dump(), to_json(verify_theorem_main(S, 40, 12, 42)).dump());
    EXPECT_NE(to_json(verify_theorem_main(S, 40, 12, 42)).dump(), to_json(verify_theorem_main(S, 40, 12, 43)).dump());
}

TEST(Experiments, VerifyTheoremRejectsBergman) {
    const SpaceContext S{bergman_weights(64)};
    EXPECT_THROW((void)verify_theorem_main(S, 5, 4, 1), NonExpansiveWeights);
}

TEST(Experiments, BergmanCounterexample) {
    const auto rep = bergman_counterexample();
    EXPECT_TRUE(rep.ok());
    EXPECT_NEAR(rep.summary["sigma_50"].get<double>(), std::sqrt(102.0 / 52.0), 1e-9);
    EXPECT_EQ(rep.summary["is_inner"], true);
    EXPECT_EQ(rep.summary["expansive_violation"], 0);
    EXPECT_NEAR(rep.summary["sup_norm"].get<double>(), std::sqrt(2.0), 1e-12);
}

TEST(Experiments, ExploreDirichletSingleZero) {
    const SpaceContext S{dirichlet_weights(64)};
    const std::vector<std::vector<C>> sets{{C(0.5)}, {C(0.3), C(-0.4, 0.2)}};
    const auto rep = explore_rs92(S, sets, 64);
    EXPECT_TRUE(rep.ok());
    ASSERT_EQ(rep.records.size(), 2u);
    EXPECT_LE(rep.records[0]["sigma"].get<double>(), 1.0 + 1e-6);
    EXPECT_EQ(rep.summary["candidates"], 0);
}

TEST(Experiments, ExploreOpenCaseIsRecordedNotAsserted) {
    const SpaceContext S{parse_weight_spec("atoms:1,1", 64)};
    const std::vector<std::vector<C>> sets{{C(0.5)}};
    const auto rep = explore_rs92(S, sets, 32);
    ASSERT_EQ(rep.records.size(), 1u);
    EXPECT_TRUE(rep.records[0].contains("candidate"));
    EXPECT_TRUE(std::isfinite(rep.records[0]["sigma"].get<double>()));
}

TEST(Experiments, ExploreRejectsEmptyZeroSet) {
    const SpaceContext S{dirichlet_weights(64)};
    const std::vector<std::vector<C>> sets{{}};
    EXPECT_THROW((void)explore_rs92(S, sets, 8), std::invalid_argument);
}

TEST(Experiments, ExtremalHardyMatchesBlaschke) {
    const SpaceContext S{hardy_weights(64)};
    const std::vector<C> zeros{0.5};
    ExtremalOptions opt;
    opt.max_sweeps = 30;
    const auto rep = extremal_search(S, zeros, 20, 2, 5, opt);
    const double cand = rep.summary["candidate_ratio"].get<double>();
    const double best = rep.summary["best_ratio"].get<double>();
    EXPECT_GE(best, cand - 1e-3);
    EXPECT_TRUE(rep.ok());
}

TEST(Experiments, ExtremalDirichletNoZeros) {
    const SpaceContext S{dirichlet_weights(64)};
    ExtremalOptions opt;
    opt.max_sweeps = 20;
    const auto rep = extremal_search(S, {}, 12, 2, 9, opt);
    EXPECT_TRUE(rep.ok());
    EXPECT_NEAR(rep.summary["candidate_ratio"].get<double>(), 1.0, 1e-12);
    EXPECT_GE(rep.summary["best_ratio"].get<double>(), 1.0 - 1e-9);
}

TEST(Experiments, ExtremalWithoutRestarts) {
    const SpaceContext S{dirichlet_weights(64)};
    const std::vector<C> zeros{0.5};
    const auto rep = extremal_search(S, zeros, 6, 0, 1);
    EXPECT_TRUE(rep.records.empty());
    EXPECT_FALSE(rep.summary["candidate"].is_null());
    EXPECT_TRUE(rep.summary["best_ratio"].is_null());
}

TEST(Experiments, ExtremalRejectsBadInput) {
    const SpaceContext S{dirichlet_weights(64)};
    const std::vector<C> two{0.1, 0.2};
    EXPECT_THROW((void)extremal_search(S, two, 2, 1, 1), std::invalid_argument);
    const std::vector<C> outside{1.2};
    EXPECT_THROW((void)extremal_search(S, outside, 4, 1, 1), std::invalid_argument);
}

TEST(Experiments, CsvHasHeaderAndRows) {
    const SpaceContext S{dirichlet_weights(64)};
    const auto csv = to_csv(verify_theorem_main(S, 5, 4, 1));
    std::size_t lines = 0;
    for (char c : csv) lines += c == '\n';
    EXPECT_EQ(lines, 6u);
    const auto header = csv.substr(0, csv.find('\n'));
    EXPECT_NE(header.find("trial"), std::string::npos);
    EXPECT_NE(header.find("margin"), std::string::npos);
}

}  // namespace
}  // namespace innerkit
