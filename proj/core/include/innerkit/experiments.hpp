#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "innerkit/series.hpp"
#include "innerkit/space.hpp"

namespace innerkit {

/// Outcome of one scripted experiment. Re-running with the same seed
/// reproduces the report exactly.
struct ExperimentReport {
    std::string name;
    std::uint64_t seed = 0;
    nlohmann::json parameters = nlohmann::json::object();
    std::size_t trials = 0;
    std::vector<nlohmann::json> failures;
    nlohmann::json summary = nlohmann::json::object();
    std::vector<nlohmann::json> records;

    [[nodiscard]] bool ok() const noexcept { return failures.empty(); }
};

[[nodiscard]] nlohmann::json to_json(const ExperimentReport& report);

/// One row per record; columns are the union of the records' scalar fields
/// in first-seen order.
[[nodiscard]] std::string to_csv(const ExperimentReport& report);

/// Generator for trial `trial`, derived from (seed, trial) only.
[[nodiscard]] std::mt19937_64 trial_rng(std::uint64_t seed, std::size_t trial);

/// Coefficients uniform on the unit complex disc, degree uniform on
/// [1, max_degree], normalized in S.
[[nodiscard]] TruncatedSeries random_polynomial(std::mt19937_64& rng, std::size_t max_degree, const SpaceContext& S);

/// e^{i t} z^d / sqrt(omega_d) for d uniform on [1, max_degree].
[[nodiscard]] TruncatedSeries random_monomial_inner(std::mt19937_64& rng, std::size_t max_degree,
                                                    const SpaceContext& S);

/// Normalized (monomial inner + eps * random polynomial), eps log-uniform on
/// [1e-3, 1e-1]. The eps used is written to `eps_out` when non-null.
[[nodiscard]] TruncatedSeries near_inner_polynomial(std::mt19937_64& rng, std::size_t max_degree,
                                                    const SpaceContext& S, double* eps_out = nullptr);

/// Property-scale check of the characterization on random samples. Needs
/// expansive weights (throws NonExpansiveWeights otherwise).
[[nodiscard]] ExperimentReport verify_theorem_main(const SpaceContext& S, std::size_t trials, std::size_t max_degree,
                                                   std::uint64_t seed);

/// sqrt(2) z in the Bergman weight: inner, yet its multiplier norm exceeds 1.
[[nodiscard]] ExperimentReport bergman_counterexample();

/// Builds ss_inner for each zero set and records its finite-section
/// multiplier bound; sigma > 1 + 1e-4 is flagged as a candidate, never
/// asserted. `truncation` 0 selects default_kernel_truncation per set.
[[nodiscard]] ExperimentReport explore_rs92(const SpaceContext& S, std::span<const std::vector<Complex>> zero_sets,
                                            std::size_t N, std::size_t truncation = 0);

struct ExtremalOptions {
    std::size_t section_size = 16;  ///< N for the multiplier bound
    std::size_t sup_grid = 512;     ///< grid for Bergman runs
    std::size_t max_sweeps = 80;
    double initial_step = 0.5;
    double min_step = 1e-6;
};

/// Multi-restart normalized coordinate descent on R(f) = bound(f) / ||f|| over
/// polynomials of degree <= `degree` vanishing on `zeros`, compared against
/// the projection of 1. Evidence only.
[[nodiscard]] ExperimentReport extremal_search(const SpaceContext& S, std::span<const Complex> zeros,
                                               std::size_t degree, std::size_t restarts, std::uint64_t seed,
                                               const ExtremalOptions& options = {});

}  // namespace innerkit
