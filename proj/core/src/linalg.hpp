#pragma once

// Small dense and tridiagonal helpers shared by the kernel and section code.

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace innerkit::detail {

using Complex = std::complex<double>;

/// Row-major square complex matrix.
struct SquareMatrix {
    std::size_t n = 0;
    std::vector<Complex> a;

    explicit SquareMatrix(std::size_t size) : n(size), a(size * size) {}
    Complex& operator()(std::size_t i, std::size_t j) { return a[i * n + j]; }
    Complex operator()(std::size_t i, std::size_t j) const { return a[i * n + j]; }
};

/// LU factorization with partial pivoting. `singular` is set when a pivot is
/// exactly zero.
class LuFactor {
public:
    explicit LuFactor(SquareMatrix m);

    [[nodiscard]] bool singular() const noexcept { return singular_; }
    [[nodiscard]] std::vector<Complex> solve(std::span<const Complex> rhs) const;

    /// ||A||_1 * ||A^{-1}||_1 with the inverse formed column by column.
    [[nodiscard]] double condition_1() const;

private:
    SquareMatrix lu_;
    std::vector<std::size_t> perm_;
    double norm1_ = 0.0;
    bool singular_ = false;
};

/// Largest eigenvalue of the symmetric tridiagonal matrix (diag, off) by
/// Sturm-sequence bisection.
[[nodiscard]] double tridiag_max_eigenvalue(std::span<const double> diag, std::span<const double> off);

/// Eigenvector of the symmetric tridiagonal matrix for a converged
/// eigenvalue, by inverse iteration. Unit 2-norm.
[[nodiscard]] std::vector<double> tridiag_eigenvector(std::span<const double> diag, std::span<const double> off,
                                                      double lambda);

}  // namespace innerkit::detail
