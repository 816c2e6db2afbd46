#include "innerkit/multiplier.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "linalg.hpp"

namespace innerkit {

namespace {

constexpr std::uint64_t kStartSeed = 0x9e3779b97f4a7c15ULL;
constexpr double kMonotoneSlack = 1e-10;

// Matrix-free B and B^H for the banded section.
class SectionOperator {
public:
    SectionOperator(const TruncatedSeries& f, const SpaceContext& S, std::size_t N)
        : f_(f.coeffs().begin(), f.coeffs().end()), n_(N + 1), m_(N + f.degree() + 1), sqrt_w_(m_) {
        for (std::size_t i = 0; i < m_; ++i) sqrt_w_[i] = std::sqrt(S.weight(i));
    }

    [[nodiscard]] std::size_t cols() const noexcept { return n_; }

    // y = B x
    void apply(std::span<const Complex> x, std::vector<Complex>& y) const {
        y.assign(m_, Complex{});
        for (std::size_t n = 0; n < n_; ++n) {
            const Complex xn = x[n] / sqrt_w_[n];
            if (xn == Complex{}) continue;
            for (std::size_t j = 0; j < f_.size(); ++j) y[n + j] += f_[j] * xn;
        }
        for (std::size_t m = 0; m < m_; ++m) y[m] *= sqrt_w_[m];
    }

    // x = B^H y
    void apply_adjoint(std::span<const Complex> y, std::vector<Complex>& x) const {
        x.assign(n_, Complex{});
        for (std::size_t n = 0; n < n_; ++n) {
            Complex acc{};
            for (std::size_t j = 0; j < f_.size(); ++j) acc += std::conj(f_[j]) * sqrt_w_[n + j] * y[n + j];
            x[n] = acc / sqrt_w_[n];
        }
    }

    [[nodiscard]] double ratio(std::span<const Complex> x) const {
        std::vector<Complex> y;
        apply(x, y);
        return vec_norm(y) / vec_norm(x);
    }

    [[nodiscard]] TruncatedSeries to_series(std::span<const Complex> x) const {
        std::vector<Complex> g(n_);
        for (std::size_t n = 0; n < n_; ++n) g[n] = x[n] / sqrt_w_[n];
        return TruncatedSeries(std::move(g));
    }

    static double vec_norm(std::span<const Complex> v) {
        double s = 0.0;
        for (Complex c : v) s += std::norm(c);
        return std::sqrt(s);
    }

private:
    std::vector<Complex> f_;
    std::size_t n_;
    std::size_t m_;
    std::vector<double> sqrt_w_;
};

Complex dot(std::span<const Complex> a, std::span<const Complex> b) {
    Complex s{};
    for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
    return s;
}

}  // namespace

DenseMatrix section_matrix(const TruncatedSeries& f, const SpaceContext& S, std::size_t N) {
    const std::size_t d = f.degree();
    DenseMatrix B(N + d + 1, N + 1);
    for (std::size_t n = 0; n <= N; ++n) {
        const double wn = S.weight(n);
        for (std::size_t j = 0; j <= d; ++j) B(n + j, n) = f[j] * std::sqrt(S.weight(n + j) / wn);
    }
    return B;
}

SectionBound multiplier_lower_bound(const TruncatedSeries& f, const SpaceContext& S, std::size_t N, double tol) {
    if (f.is_zero()) throw std::invalid_argument("multiplier bound of the zero function");
    if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");

    const SectionOperator B(f, S, N);
    const std::size_t n = B.cols();
    const std::size_t cap = std::min<std::size_t>(10 * (N + 1), n);

    std::mt19937_64 rng(kStartSeed);
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    std::vector<Complex> q(n);
    for (auto& c : q) c = {unif(rng), unif(rng)};
    {
        const double nq = SectionOperator::vec_norm(q);
        for (auto& c : q) c /= nq;
    }

    std::vector<std::vector<Complex>> basis;
    std::vector<double> alpha, beta;
    std::vector<Complex> y, w;
    double theta = 0.0;
    bool converged = false;
    std::size_t steps = 0;

    while (steps < cap) {
        basis.push_back(q);
        ++steps;
        B.apply(q, y);
        B.apply_adjoint(y, w);
        alpha.push_back(std::real(dot(q, w)));
        // Full reorthogonalization, applied twice.
        for (int pass = 0; pass < 2; ++pass)
            for (const auto& v : basis) {
                const Complex c = dot(v, w);
                for (std::size_t i = 0; i < n; ++i) w[i] -= c * v[i];
            }
        const double b = SectionOperator::vec_norm(w);
        theta = detail::tridiag_max_eigenvalue(alpha, beta);
        const auto s = detail::tridiag_eigenvector(alpha, beta, theta);
        const double residual = b * std::abs(s.back());
        if (b <= 1e-14 * std::max(theta, 1e-300) || residual <= tol * theta) {
            converged = true;
            break;
        }
        if (steps == n) {
            converged = true;
            break;
        }
        beta.push_back(b);
        for (std::size_t i = 0; i < n; ++i) q[i] = w[i] / b;
    }

    // Ritz vector.
    const auto s = detail::tridiag_eigenvector(alpha, std::span<const double>(beta.data(), alpha.size() - 1), theta);
    std::vector<Complex> x(n);
    for (std::size_t j = 0; j < basis.size(); ++j)
        for (std::size_t i = 0; i < n; ++i) x[i] += s[j] * basis[j][i];

    double sigma = B.ratio(x);
    // A couple of power steps never lower the Rayleigh quotient of a PSD operator.
    std::vector<Complex> x_next;
    for (int it = 0; it < 2; ++it) {
        B.apply(x, y);
        B.apply_adjoint(y, x_next);
        const double nx = SectionOperator::vec_norm(x_next);
        if (!(nx > 0.0)) break;
        for (auto& c : x_next) c /= nx;
        const double r = B.ratio(x_next);
        if (r > sigma) {
            sigma = r;
            x = x_next;
        }
    }

    SectionBound out;
    out.N = N;
    out.sigma = sigma;
    out.maximizer = B.to_series(x);
    out.iterations = steps;
    out.converged = converged;
    return out;
}

MultiplierEstimate multiplier_norm_estimate(const TruncatedSeries& f, const SpaceContext& S,
                                            std::span<const std::size_t> schedule, double tol) {
    for (std::size_t i = 1; i < schedule.size(); ++i)
        if (schedule[i] <= schedule[i - 1]) throw std::invalid_argument("section schedule must be strictly increasing");
    MultiplierEstimate est;
    for (std::size_t N : schedule) {
        est.trace.push_back(multiplier_lower_bound(f, S, N, tol));
        const auto& t = est.trace;
        if (t.size() >= 2 && t[t.size() - 1].sigma + kMonotoneSlack < t[t.size() - 2].sigma) est.monotone = false;
    }
    if (est.trace.empty()) return est;
    const auto& t = est.trace;
    est.best = t.back().sigma;
    if (t.size() >= 2) {
        const double inc = t.back().sigma - t[t.size() - 2].sigma;
        est.stalled = inc <= tol * std::max(1.0, t.back().sigma);
    }
    if (t.size() >= 3) {
        const double s0 = t[t.size() - 3].sigma, s1 = t[t.size() - 2].sigma, s2 = t.back().sigma;
        const double d1 = s1 - s0, d2 = s2 - s1;
        const double denom = d2 - d1;
        est.extrapolated = (std::abs(denom) > 1e-300 && d1 != 0.0) ? s2 - d2 * d2 / denom : s2;
    }
    return est;
}

double sup_norm_estimate(const TruncatedSeries& f, std::size_t grid_points) {
    if (grid_points < 8) throw std::invalid_argument("sup-norm grid needs at least 8 points");
    double best = 0.0;
    for (std::size_t j = 0; j < grid_points; ++j) {
        const double theta = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(grid_points);
        best = std::max(best, std::abs(evaluate(f, std::polar(1.0, theta))));
    }
    return best;
}

}  // namespace innerkit
