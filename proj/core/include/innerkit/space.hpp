#pragma once

#include <cstddef>

#include "innerkit/series.hpp"
#include "innerkit/weights.hpp"

namespace innerkit {

/// The weighted Hardy space H^2_omega. All norms are computed from the
/// Taylor coefficients: ||f||^2 = sum_k |f_k|^2 omega_k.
struct SpaceContext {
    WeightSequence weights;

    [[nodiscard]] double weight(std::size_t k) const { return weights[k]; }
};

[[nodiscard]] double norm_sq(const TruncatedSeries& f, const SpaceContext& S);
[[nodiscard]] double norm(const TruncatedSeries& f, const SpaceContext& S);

/// <f, g> = sum_k f_k conj(g_k) omega_k (linear in the first slot).
[[nodiscard]] Complex inner_product(const TruncatedSeries& f, const TruncatedSeries& g, const SpaceContext& S);

/// beta_j = <z^j f, f> = sum_k f_k conj(f_{k+j}) omega_{k+j}.
/// Exactly zero for j > deg f.
[[nodiscard]] Complex moment(const TruncatedSeries& f, std::size_t j, const SpaceContext& S);

/// ||z^k f||^2 = sum_m |f_m|^2 omega_{m+k}.
[[nodiscard]] double shifted_norm_sq(const TruncatedSeries& f, std::size_t k, const SpaceContext& S);

/// f / ||f||. Throws std::invalid_argument for the zero function.
[[nodiscard]] TruncatedSeries normalized(const TruncatedSeries& f, const SpaceContext& S);

}  // namespace innerkit
