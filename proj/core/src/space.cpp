#include "innerkit/space.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace innerkit {

double norm_sq(const TruncatedSeries& f, const SpaceContext& S) {
    return shifted_norm_sq(f, 0, S);
}

double norm(const TruncatedSeries& f, const SpaceContext& S) { return std::sqrt(norm_sq(f, S)); }

Complex inner_product(const TruncatedSeries& f, const TruncatedSeries& g, const SpaceContext& S) {
    const std::size_t n = std::min(f.degree(), g.degree());
    Complex acc{};
    for (std::size_t k = 0; k <= n; ++k) acc += f[k] * std::conj(g[k]) * S.weight(k);
    return acc;
}

Complex moment(const TruncatedSeries& f, std::size_t j, const SpaceContext& S) {
    const std::size_t d = f.degree();
    Complex acc{};
    if (j > d) return acc;
    for (std::size_t k = 0; k + j <= d; ++k) acc += f[k] * std::conj(f[k + j]) * S.weight(k + j);
    return acc;
}

double shifted_norm_sq(const TruncatedSeries& f, std::size_t k, const SpaceContext& S) {
    double acc = 0.0;
    const auto c = f.coeffs();
    for (std::size_t m = 0; m < c.size(); ++m) acc += std::norm(c[m]) * S.weight(m + k);
    return acc;
}

TruncatedSeries normalized(const TruncatedSeries& f, const SpaceContext& S) {
    if (f.is_zero()) throw std::invalid_argument("cannot normalize the zero function");
    return scale(1.0 / norm(f, S), f);
}

}  // namespace innerkit
