#include "innerkit/kernels.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <stdexcept>
#include <string>

#include "linalg.hpp"

namespace innerkit {

KernelApprox reproducing_kernel(Complex a, const SpaceContext& S, std::size_t K) {
    if (!(std::abs(a) < 1.0)) throw std::invalid_argument("kernel point must lie in the open unit disc");
    std::vector<Complex> c(K + 1);
    Complex power = 1.0;
    const Complex abar = std::conj(a);
    for (std::size_t k = 0; k <= K; ++k) {
        c[k] = power / S.weight(k);
        power *= abar;
    }
    return {a, K, TruncatedSeries(std::move(c))};
}

TruncatedSeries ss_inner(std::span<const Complex> zeros, const SpaceContext& S, std::size_t K) {
    if (zeros.empty()) throw std::invalid_argument("zero set must be non-empty");
    for (std::size_t i = 0; i < zeros.size(); ++i) {
        if (zeros[i] == Complex{}) throw std::invalid_argument("zero at the origin is not supported");
        if (!(std::abs(zeros[i]) < 1.0)) throw std::invalid_argument("zeros must lie in the open unit disc");
        for (std::size_t j = 0; j < i; ++j)
            if (zeros[i] == zeros[j]) throw std::invalid_argument("zeros must be pairwise distinct");
    }

    const std::size_t n = zeros.size();
    std::vector<TruncatedSeries> kernels;
    kernels.reserve(n);
    for (Complex a : zeros) kernels.push_back(reproducing_kernel(a, S, K).series);

    detail::SquareMatrix gram(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) gram(i, j) = evaluate(kernels[j], zeros[i]);

    const detail::LuFactor lu(std::move(gram));
    const double cond = lu.condition_1();
    if (!(cond <= kMaxGramCondition)) {
        char buf[32];
        const auto end = std::to_chars(buf, buf + sizeof buf, cond, std::chars_format::scientific, 3).ptr;
        throw std::runtime_error("kernel Gram system is ill-conditioned (condition estimate " + std::string(buf, end) +
                                 ")");
    }
    const std::vector<Complex> ones(n, Complex{1.0});
    const auto c = lu.solve(ones);

    TruncatedSeries phi{1.0};
    for (std::size_t i = 0; i < n; ++i) phi = subtract(phi, scale(c[i], kernels[i]));
    return normalized(phi, S);
}

std::size_t default_kernel_truncation(std::span<const Complex> zeros) {
    double rmax = 0.0;
    for (Complex a : zeros) rmax = std::max(rmax, std::abs(a));
    if (rmax >= 1.0) return 200;
    return std::max<std::size_t>(200, static_cast<std::size_t>(std::ceil(40.0 / (1.0 - rmax))));
}

}  // namespace innerkit
