#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "innerkit/series.hpp"
#include "innerkit/space.hpp"

namespace innerkit {

/// Gram systems whose 1-norm condition estimate exceeds this are rejected.
inline constexpr double kMaxGramCondition = 1e12;

/// Reproducing kernel k_a of H^2_omega truncated at degree K:
/// coefficient k is conj(a)^k / omega_k.
struct KernelApprox {
    Complex point;
    std::size_t truncation = 0;
    TruncatedSeries series;
};

/// Throws std::invalid_argument when |a| >= 1.
[[nodiscard]] KernelApprox reproducing_kernel(Complex a, const SpaceContext& S, std::size_t K);

/// Normalized projection of the constant 1 onto the polynomials of degree <= K
/// vanishing on `zeros`:
///
///   phi = normalize(1 - sum_i c_i k_{a_i}),   G c = (1, ..., 1),   G_ij = k_{a_j}(a_i).
///
/// Zeros must be distinct, nonzero and inside the disc. Throws
/// std::invalid_argument on bad zero sets and std::runtime_error when the
/// Gram system is numerically singular.
[[nodiscard]] TruncatedSeries ss_inner(std::span<const Complex> zeros, const SpaceContext& S, std::size_t K);

/// Truncation used by the CLI when none is given: max(200, 40 / (1 - max|a_i|)).
[[nodiscard]] std::size_t default_kernel_truncation(std::span<const Complex> zeros);

}  // namespace innerkit
