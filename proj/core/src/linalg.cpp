#include "linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace innerkit::detail {

LuFactor::LuFactor(SquareMatrix m) : lu_(std::move(m)), perm_(lu_.n) {
    const std::size_t n = lu_.n;
    for (std::size_t j = 0; j < n; ++j) {
        double col = 0.0;
        for (std::size_t i = 0; i < n; ++i) col += std::abs(lu_(i, j));
        norm1_ = std::max(norm1_, col);
    }
    std::iota(perm_.begin(), perm_.end(), std::size_t{0});
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        for (std::size_t i = k + 1; i < n; ++i)
            if (std::abs(lu_(i, k)) > std::abs(lu_(p, k))) p = i;
        if (lu_(p, k) == Complex{}) {
            singular_ = true;
            return;
        }
        if (p != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(lu_(k, j), lu_(p, j));
            std::swap(perm_[k], perm_[p]);
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            const Complex l = lu_(i, k) / lu_(k, k);
            lu_(i, k) = l;
            for (std::size_t j = k + 1; j < n; ++j) lu_(i, j) -= l * lu_(k, j);
        }
    }
}

std::vector<Complex> LuFactor::solve(std::span<const Complex> rhs) const {
    if (singular_) throw std::runtime_error("singular system");
    const std::size_t n = lu_.n;
    std::vector<Complex> x(n);
    for (std::size_t i = 0; i < n; ++i) {
        Complex s = rhs[perm_[i]];
        for (std::size_t j = 0; j < i; ++j) s -= lu_(i, j) * x[j];
        x[i] = s;
    }
    for (std::size_t i = n; i-- > 0;) {
        Complex s = x[i];
        for (std::size_t j = i + 1; j < n; ++j) s -= lu_(i, j) * x[j];
        x[i] = s / lu_(i, i);
    }
    return x;
}

double LuFactor::condition_1() const {
    if (singular_) return std::numeric_limits<double>::infinity();
    const std::size_t n = lu_.n;
    double inv_norm = 0.0;
    std::vector<Complex> e(n);
    for (std::size_t j = 0; j < n; ++j) {
        std::fill(e.begin(), e.end(), Complex{});
        e[j] = 1.0;
        double col = 0.0;
        for (Complex v : solve(e)) col += std::abs(v);
        inv_norm = std::max(inv_norm, col);
    }
    return norm1_ * inv_norm;
}

namespace {

// Number of eigenvalues strictly below x.
std::size_t sturm_count(std::span<const double> d, std::span<const double> e, double x) {
    constexpr double tiny = std::numeric_limits<double>::min();
    std::size_t count = 0;
    double q = d[0] - x;
    if (q == 0.0) q = -tiny;
    if (q < 0.0) ++count;
    for (std::size_t i = 1; i < d.size(); ++i) {
        q = d[i] - x - e[i - 1] * e[i - 1] / q;
        if (q == 0.0) q = -tiny;
        if (q < 0.0) ++count;
    }
    return count;
}

// Partial-pivoting tridiagonal solve in place (LAPACK gtsv layout).
void solve_tridiag(std::vector<double> dl, std::vector<double> d, std::vector<double> du, std::vector<double>& b,
                   double tiny_pivot) {
    const std::size_t n = d.size();
    if (n == 1) {
        b[0] /= (d[0] == 0.0 ? tiny_pivot : d[0]);
        return;
    }
    std::vector<double> du2(n, 0.0);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (std::abs(d[i]) >= std::abs(dl[i])) {
            if (d[i] == 0.0) d[i] = tiny_pivot;
            const double fact = dl[i] / d[i];
            d[i + 1] -= fact * du[i];
            b[i + 1] -= fact * b[i];
        } else {
            const double fact = d[i] / dl[i];
            d[i] = dl[i];
            const double temp = d[i + 1];
            d[i + 1] = du[i] - fact * temp;
            if (i + 2 < n) {
                du2[i] = du[i + 1];
                du[i + 1] = -fact * du2[i];
            }
            du[i] = temp;
            const double tb = b[i];
            b[i] = b[i + 1];
            b[i + 1] = tb - fact * b[i + 1];
        }
    }
    if (d[n - 1] == 0.0) d[n - 1] = tiny_pivot;
    b[n - 1] /= d[n - 1];
    b[n - 2] = (b[n - 2] - du[n - 2] * b[n - 1]) / d[n - 2];
    for (std::size_t i = n - 2; i-- > 0;) b[i] = (b[i] - du[i] * b[i + 1] - du2[i] * b[i + 2]) / d[i];
}

}  // namespace

double tridiag_max_eigenvalue(std::span<const double> diag, std::span<const double> off) {
    const std::size_t n = diag.size();
    if (n == 0) throw std::invalid_argument("empty tridiagonal matrix");
    double lo = diag[0], hi = diag[0];
    for (std::size_t i = 0; i < n; ++i) {
        const double r = (i > 0 ? std::abs(off[i - 1]) : 0.0) + (i + 1 < n ? std::abs(off[i]) : 0.0);
        lo = std::min(lo, diag[i] - r);
        hi = std::max(hi, diag[i] + r);
    }
    constexpr double eps = std::numeric_limits<double>::epsilon();
    // Invariant: count(lo) <= n-1 < count(hi) means the top eigenvalue lies in [lo, hi).
    hi += eps * std::max(1.0, std::abs(hi));
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (sturm_count(diag, off, mid) >= n)
            hi = mid;
        else
            lo = mid;
        if (hi - lo <= 2.0 * eps * std::max(std::abs(lo), std::abs(hi))) break;
    }
    return 0.5 * (lo + hi);
}

std::vector<double> tridiag_eigenvector(std::span<const double> diag, std::span<const double> off, double lambda) {
    const std::size_t n = diag.size();
    double scale = 0.0;
    for (double v : diag) scale = std::max(scale, std::abs(v));
    for (double v : off) scale = std::max(scale, std::abs(v));
    const double tiny_pivot = std::numeric_limits<double>::epsilon() * std::max(scale, 1e-300);
    const double shift = lambda + tiny_pivot;

    std::vector<double> d(n), e(off.begin(), off.end());
    for (std::size_t i = 0; i < n; ++i) d[i] = diag[i] - shift;
    if (e.empty()) e.push_back(0.0);

    std::vector<double> y(n, 1.0);
    for (int it = 0; it < 3; ++it) {
        solve_tridiag(e, d, e, y, tiny_pivot);
        double nrm = 0.0;
        for (double v : y) nrm += v * v;
        nrm = std::sqrt(nrm);
        if (!(nrm > 0.0) || !std::isfinite(nrm)) {
            std::fill(y.begin(), y.end(), 0.0);
            y[0] = 1.0;
            break;
        }
        for (double& v : y) v /= nrm;
    }
    return y;
}

}  // namespace innerkit::detail
