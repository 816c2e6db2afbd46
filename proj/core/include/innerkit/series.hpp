#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string_view>
#include <vector>

namespace innerkit {

using Complex = std::complex<double>;

/// Finite complex power series f(z) = sum_k c_k z^k, lowest degree first.
///
/// The coefficient vector is never empty (the zero function is [0]) and
/// trailing coefficients that are exactly zero are trimmed. No epsilon
/// trimming is performed: roundoff noise is kept and left to the callers'
/// tolerances.
class TruncatedSeries {
public:
    TruncatedSeries();
    explicit TruncatedSeries(std::vector<Complex> coeffs);
    TruncatedSeries(std::initializer_list<Complex> coeffs);

    /// c * z^k
    static TruncatedSeries monomial(std::size_t k, Complex c = 1.0);

    [[nodiscard]] std::size_t degree() const noexcept { return coeffs_.size() - 1; }
    [[nodiscard]] bool is_zero() const noexcept;

    /// Coefficient k; zero beyond the degree.
    [[nodiscard]] Complex operator[](std::size_t k) const noexcept {
        return k < coeffs_.size() ? coeffs_[k] : Complex{};
    }
    [[nodiscard]] std::span<const Complex> coeffs() const noexcept { return coeffs_; }

    [[nodiscard]] bool has_real_coefficients() const noexcept;

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    void trim();

    std::vector<Complex> coeffs_;
};

[[nodiscard]] TruncatedSeries add(const TruncatedSeries& f, const TruncatedSeries& g);
[[nodiscard]] TruncatedSeries subtract(const TruncatedSeries& f, const TruncatedSeries& g);
[[nodiscard]] TruncatedSeries scale(Complex c, const TruncatedSeries& f);

/// z^k f
[[nodiscard]] TruncatedSeries shift(const TruncatedSeries& f, std::size_t k);

/// Exact Cauchy product, O(deg f * deg g).
[[nodiscard]] TruncatedSeries multiply(const TruncatedSeries& f, const TruncatedSeries& g);

/// Horner evaluation.
[[nodiscard]] Complex evaluate(const TruncatedSeries& f, Complex z) noexcept;

inline TruncatedSeries operator+(const TruncatedSeries& f, const TruncatedSeries& g) { return add(f, g); }
inline TruncatedSeries operator-(const TruncatedSeries& f, const TruncatedSeries& g) { return subtract(f, g); }
inline TruncatedSeries operator*(const TruncatedSeries& f, const TruncatedSeries& g) { return multiply(f, g); }
inline TruncatedSeries operator*(Complex c, const TruncatedSeries& f) { return scale(c, f); }

/// Parses "re,im;re,im;..." (lowest degree first). A bare "re" entry is
/// accepted as a real coefficient. Throws std::invalid_argument.
[[nodiscard]] TruncatedSeries parse_series(std::string_view text);

/// Parses a list of complex points in the same "re,im;re,im" syntax.
[[nodiscard]] std::vector<Complex> parse_points(std::string_view text);

}  // namespace innerkit
