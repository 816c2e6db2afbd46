#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "innerkit/series.hpp"
#include "innerkit/space.hpp"

namespace innerkit {

/// Default absolute tolerance for treating a moment as zero.
inline constexpr double kDefaultMomentTol = 1e-10;

/// ||f|| must equal 1 to this accuracy before condition (a) is tested.
inline constexpr double kNormalizationTol = 1e-10;

/// A witness must beat the right-hand side by this much relative to (1 + rhs)
/// to count as a strict violation.
inline constexpr double kStrictMarginTol = 1e-12;

/// Raised when an operation needs omega_k <= omega_{k+1} and the weights do
/// not have it.
class NonExpansiveWeights : public std::domain_error {
public:
    NonExpansiveWeights(std::string spec, std::size_t index);
    [[nodiscard]] const std::string& spec() const noexcept { return spec_; }
    /// First k with omega_k > omega_{k+1} (within the scanned range).
    [[nodiscard]] std::size_t index() const noexcept { return index_; }

private:
    std::string spec_;
    std::size_t index_;
};

/// Raised when an operation presupposes ||f|| = 1.
class NotNormalized : public std::invalid_argument {
public:
    explicit NotNormalized(double norm);
    [[nodiscard]] double norm() const noexcept { return norm_; }

private:
    double norm_;
};

struct MomentEntry {
    std::size_t j = 0;
    Complex value;
};

struct BadMoment {
    std::size_t j = 0;
    double magnitude = 0.0;
};

/// is_inner <=> |norm_sq - 1| <= tol and |beta_j| <= tol for every j >= 1.
struct InnerVerdict {
    bool is_inner = false;
    double norm_sq = 0.0;
    std::vector<MomentEntry> moments;  ///< beta_j for 1 <= j <= deg f
    std::optional<BadMoment> first_bad;
    double tolerance = 0.0;
};

/// A pair (k, lambda) with ||(z^k + lambda) f||^2 > omega_k + |lambda|^2.
///
/// Condition (a) is evaluated for the exactly normalized representative
/// f / ||f|| (inputs are only required to have norm 1 to kNormalizationTol),
/// so roundoff in the normalization cannot be amplified by |lambda|^2.
struct Witness {
    std::size_t k = 0;
    Complex lambda;
    double lhs = 0.0;     ///< ||(z^k + lambda) f||^2 from the Cauchy product
    double rhs = 0.0;     ///< omega_k + |lambda|^2
    double margin = 0.0;  ///< lhs - rhs, evaluated through the moment expansion
};

struct ConditionA {
    double lhs = 0.0;
    double rhs = 0.0;
};

/// Throws std::invalid_argument for the zero function or tol <= 0.
[[nodiscard]] InnerVerdict is_inner(const TruncatedSeries& f, const SpaceContext& S, double tol = kDefaultMomentTol);

/// lhs = ||(z^k + lambda) f||^2 / ||f||^2, rhs = omega_k + |lambda|^2.
/// Throws NotNormalized unless ||f|| = 1 to kNormalizationTol.
[[nodiscard]] ConditionA test_condition_a(const TruncatedSeries& f, std::size_t k, Complex lambda,
                                          const SpaceContext& S);

/// | ||(z^k+lambda) f||^2 - (||z^k f||^2 + |lambda|^2 ||f||^2 + 2 Re(conj(lambda) beta_k)) |.
[[nodiscard]] double decomposition_check(const TruncatedSeries& f, std::size_t k, Complex lambda,
                                         const SpaceContext& S);

/// lambda* = beta_k omega_k / (2 |beta_k|^2), which makes 2 Re(conj(lambda*) beta_k) = omega_k.
/// Throws std::invalid_argument when |beta_k| <= tol.
[[nodiscard]] Complex witness_lambda(const TruncatedSeries& f, std::size_t k, const SpaceContext& S,
                                     double tol = kDefaultMomentTol);

/// Witness at the smallest k with |beta_k| > tol, or nullopt when every
/// moment is below tol. Needs normalized f and expansive weights.
[[nodiscard]] std::optional<Witness> refute(const TruncatedSeries& f, const SpaceContext& S,
                                            double tol = kDefaultMomentTol);

struct GridScan {
    std::optional<Witness> witness;
    std::size_t points_examined = 0;
    bool budget_exhausted = false;
};

struct GridOptions {
    std::size_t max_denominator = 4;
    double radius = 2.0;
    double moment_tol = kDefaultMomentTol;
    /// Cap on the lattice points generated for one (k, denominator) pair.
    std::size_t max_points = 4'000'000;
};

/// Scans k = 1..deg f and lambda in {p/q + i r/q : q <= max_denominator,
/// |lambda| <= radius}, ordered by denominator, then |lambda|, then
/// (re, im). Real-coefficient f only uses real lambda. When beta_k is
/// nonzero the radius for that k grows to cover |lambda*| + 1.
[[nodiscard]] GridScan rational_grid_refute(const TruncatedSeries& f, const SpaceContext& S,
                                            const GridOptions& options = {});

}  // namespace innerkit
