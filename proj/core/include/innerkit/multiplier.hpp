#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "innerkit/series.hpp"
#include "innerkit/space.hpp"

namespace innerkit {

/// Dense row-major complex matrix.
struct DenseMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Complex> data;

    DenseMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}
    Complex& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    Complex operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

/// Finite section of g -> f g restricted to polynomials of degree <= N,
/// written in the orthonormal basis z^n / sqrt(omega_n):
///
///   B[m][n] = f_{m-n} sqrt(omega_m / omega_n),   0 <= m - n <= deg f.
///
/// Shape (N + deg f + 1) x (N + 1). ||B c|| / ||c|| = ||f g|| / ||g|| for
/// g_n = c_n / sqrt(omega_n).
[[nodiscard]] DenseMatrix section_matrix(const TruncatedSeries& f, const SpaceContext& S, std::size_t N);

/// A certified lower bound on the multiplier norm of f: sigma is the ratio
/// ||f g|| / ||g|| actually attained by `maximizer`.
struct SectionBound {
    std::size_t N = 0;
    double sigma = 0.0;
    TruncatedSeries maximizer;
    std::size_t iterations = 0;
    bool converged = false;
};

inline constexpr double kDefaultSectionTol = 1e-10;

/// Largest singular value of section_matrix(f, S, N) by a Krylov (Lanczos)
/// iteration on B^H B from a fixed pseudo-random start, capped at 10 (N + 1)
/// steps. Throws std::invalid_argument for the zero function.
[[nodiscard]] SectionBound multiplier_lower_bound(const TruncatedSeries& f, const SpaceContext& S, std::size_t N,
                                                  double tol = kDefaultSectionTol);

struct MultiplierEstimate {
    double best = 0.0;  ///< sigma of the last section
    std::vector<SectionBound> trace;
    bool monotone = true;  ///< sigma nondecreasing along the schedule (slack 1e-10)
    bool stalled = false;  ///< last relative increment fell below tol
    /// Aitken extrapolation of the last three sigmas. Heuristic, not a bound.
    std::optional<double> extrapolated;
};

/// Runs multiplier_lower_bound over a strictly increasing schedule of N.
[[nodiscard]] MultiplierEstimate multiplier_norm_estimate(const TruncatedSeries& f, const SpaceContext& S,
                                                          std::span<const std::size_t> schedule,
                                                          double tol = kDefaultSectionTol);

/// max |f(e^{i theta})| over a uniform grid of `grid_points` angles; a lower
/// bound on the sup norm over the disc. Requires grid_points >= 8.
[[nodiscard]] double sup_norm_estimate(const TruncatedSeries& f, std::size_t grid_points);

}  // namespace innerkit
