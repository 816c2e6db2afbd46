#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace innerkit {

/// Smallest admissible weight value; anything at or below is rejected.
inline constexpr double kMinWeight = 1e-300;

enum class WeightRule { hardy, dirichlet, bergman, power, from_measure, custom };

[[nodiscard]] std::string_view to_string(WeightRule rule) noexcept;

/// One point mass of a radial measure, placed on the circle |z| = radius.
struct RadialAtom {
    double radius = 0.0;
    double mass = 0.0;
};

/// Rotation-invariant measure on the closed disc, described by its radial
/// moments m_j = int r^j dnu(r): a finite list of atoms plus an optional
/// closed-form moment rule for an absolutely continuous part.
struct RadialMeasure {
    std::vector<RadialAtom> atoms;
    std::function<double(std::size_t)> density_moment;
    std::string density_name;

    /// dA/pi on the unit disc: m_j = 2 / (j + 2).
    [[nodiscard]] static RadialMeasure normalized_area();

    /// Throws std::invalid_argument for radii outside [0,1], non-positive or
    /// non-finite masses, or a density rule producing a negative moment.
    void validate() const;

    [[nodiscard]] double moment(std::size_t j) const;
    [[nodiscard]] bool empty() const noexcept { return atoms.empty() && !density_moment; }
};

/// The sequence omega = {omega_k} defining H^2_omega.
///
/// Values are materialized eagerly up to the index requested at construction.
/// Indices past that range are produced by the family's generator rule
/// without mutating the object, so a constructed sequence is immutable and
/// safe to share between threads. Custom sequences have no generator and
/// throw std::out_of_range past their materialized range.
class WeightSequence {
public:
    using Generator = std::function<double(std::size_t)>;

    /// User-supplied values; values[0] must be exactly 1.
    [[nodiscard]] static WeightSequence custom(std::vector<double> values);

    [[nodiscard]] double operator[](std::size_t k) const;
    [[nodiscard]] double at(std::size_t k) const { return (*this)[k]; }

    /// Number of materialized values (K_max + 1).
    [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }
    [[nodiscard]] std::span<const double> values() const noexcept { return values_; }
    [[nodiscard]] bool extendable() const noexcept { return static_cast<bool>(generator_); }

    /// Copy materialized up to index K (no-op if already there).
    [[nodiscard]] WeightSequence extended(std::size_t K) const;

    [[nodiscard]] WeightRule rule() const noexcept { return rule_; }
    [[nodiscard]] double alpha() const noexcept { return alpha_; }

    /// omega_k <= omega_{k+1}; exact for the closed-form families, checked over
    /// the materialized range for measure-derived and custom sequences.
    [[nodiscard]] bool expansive() const noexcept { return expansive_; }

    /// Expansiveness over indices 0..K, generating past the materialized range
    /// when needed. Closed-form families answer from their rule.
    [[nodiscard]] bool expansive_through(std::size_t K) const;

    /// Minimal admissible C in omega_k <= C k^2 over the materialized range.
    [[nodiscard]] std::optional<double> growth_constant() const noexcept { return growth_constant_; }

    /// Known to outgrow every C k^2 (power family with alpha > 2).
    [[nodiscard]] bool super_quadratic() const noexcept { return rule_ == WeightRule::power && alpha_ > 2.0; }

    /// Round-trippable string form ("dirichlet", "power:0.5", "atoms:1,1", ...).
    [[nodiscard]] const std::string& spec() const noexcept { return spec_; }

private:
    friend WeightSequence make_weights(WeightRule, double, std::string, Generator, std::size_t, std::optional<bool>);

    WeightSequence() = default;
    void finalize(std::optional<bool> analytic_expansive);

    std::vector<double> values_;
    Generator generator_;
    WeightRule rule_ = WeightRule::custom;
    double alpha_ = 0.0;
    bool expansive_ = false;
    std::optional<bool> analytic_expansive_;
    std::optional<double> growth_constant_;
    std::string spec_;
};

[[nodiscard]] WeightSequence hardy_weights(std::size_t K);
[[nodiscard]] WeightSequence dirichlet_weights(std::size_t K);
[[nodiscard]] WeightSequence bergman_weights(std::size_t K);
[[nodiscard]] WeightSequence power_weights(double alpha, std::size_t K);

/// omega_0 = 1, omega_k = 1 + k^2 m_{2k-2}(mu) for k >= 1.
[[nodiscard]] WeightSequence weights_from_radial_measure(const RadialMeasure& mu, std::size_t K);

/// Smallest k < K with omega_k > omega_{k+1}. Requires K < w.size().
[[nodiscard]] std::optional<std::size_t> check_expansive(const WeightSequence& w, std::size_t K);

/// max(1+eps, max_{1<=k<=K} omega_k / k^2). Requires K >= 1.
[[nodiscard]] double growth_constant(const WeightSequence& w, std::size_t K);

/// "hardy" | "dirichlet" | "bergman" | "power:ALPHA" | "atoms:r1,w1;r2,w2".
/// Throws std::invalid_argument on malformed specs.
[[nodiscard]] WeightSequence parse_weight_spec(std::string_view spec, std::size_t K);

}  // namespace innerkit
