#include "innerkit/inner.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>
#include <tuple>

namespace innerkit {

NonExpansiveWeights::NonExpansiveWeights(std::string spec, std::size_t index)
    : std::domain_error("weights '" + spec + "' are not expansive (omega_" + std::to_string(index) +
                        " > omega_" + std::to_string(index + 1) +
                        "); the shift is not norm-increasing, so a witness is not guaranteed"),
      spec_(std::move(spec)),
      index_(index) {}

namespace {

std::string format_value(double v) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 12);
    return std::string(buf, end);
}

}  // namespace

NotNormalized::NotNormalized(double norm)
    : std::invalid_argument("function must have norm 1 (got " + format_value(norm) + "); normalize first"),
      norm_(norm) {}

namespace {

void require_normalized(const TruncatedSeries& f, const SpaceContext& S) {
    const double n = norm(f, S);
    if (!(std::abs(n - 1.0) <= kNormalizationTol)) throw NotNormalized(n);
}

void require_expansive(const TruncatedSeries& f, const SpaceContext& S) {
    const std::size_t top = 2 * f.degree() + 1;
    if (S.weights.expansive_through(top)) return;
    double prev = S.weight(0);
    std::size_t bad = 0;
    for (std::size_t k = 1; k <= top; ++k) {
        const double cur = S.weight(k);
        if (prev > cur) {
            bad = k - 1;
            break;
        }
        prev = cur;
    }
    throw NonExpansiveWeights(S.weights.spec(), bad);
}

TruncatedSeries test_function(std::size_t k, Complex lambda) {
    return add(TruncatedSeries::monomial(k), TruncatedSeries{lambda});
}

// lhs - rhs for the exactly normalized representative f / ||f||, through the
// moment expansion. No |lambda|^2 term survives, so large lambda does not
// cancel two numbers of size |lambda|^2.
double expanded_margin(double shifted, double fnorm_sq, Complex beta, double omega_k, Complex lambda) {
    return (shifted + 2.0 * std::real(std::conj(lambda) * beta)) / fnorm_sq - omega_k;
}

bool is_strict(double margin, double rhs) { return margin > kStrictMarginTol * (1.0 + rhs); }

}  // namespace

InnerVerdict is_inner(const TruncatedSeries& f, const SpaceContext& S, double tol) {
    if (f.is_zero()) throw std::invalid_argument("the zero function has no innerness verdict");
    if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
    InnerVerdict v;
    v.tolerance = tol;
    v.norm_sq = norm_sq(f, S);
    v.moments.reserve(f.degree());
    for (std::size_t j = 1; j <= f.degree(); ++j) {
        const Complex b = moment(f, j, S);
        v.moments.push_back({j, b});
        if (!v.first_bad && !(std::abs(b) <= tol)) v.first_bad = BadMoment{j, std::abs(b)};
    }
    v.is_inner = std::abs(v.norm_sq - 1.0) <= tol && !v.first_bad;
    return v;
}

ConditionA test_condition_a(const TruncatedSeries& f, std::size_t k, Complex lambda, const SpaceContext& S) {
    if (k < 1) throw std::invalid_argument("condition (a) is tested for k >= 1");
    require_normalized(f, S);
    return {norm_sq(multiply(test_function(k, lambda), f), S) / norm_sq(f, S), S.weight(k) + std::norm(lambda)};
}

double decomposition_check(const TruncatedSeries& f, std::size_t k, Complex lambda, const SpaceContext& S) {
    const double direct = norm_sq(multiply(test_function(k, lambda), f), S);
    const double expanded = shifted_norm_sq(f, k, S) + std::norm(lambda) * norm_sq(f, S) +
                            2.0 * std::real(std::conj(lambda) * moment(f, k, S));
    return std::abs(direct - expanded);
}

Complex witness_lambda(const TruncatedSeries& f, std::size_t k, const SpaceContext& S, double tol) {
    const Complex beta = moment(f, k, S);
    if (!(std::abs(beta) > tol))
        throw std::invalid_argument("moment beta_" + std::to_string(k) + " vanishes; no witness at this k");
    return beta * (S.weight(k) / (2.0 * std::norm(beta)));
}

std::optional<Witness> refute(const TruncatedSeries& f, const SpaceContext& S, double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
    require_normalized(f, S);
    require_expansive(f, S);
    const double fnorm_sq = norm_sq(f, S);
    for (std::size_t k = 1; k <= f.degree(); ++k) {
        const Complex beta = moment(f, k, S);
        if (!(std::abs(beta) > tol)) continue;
        Witness w;
        w.k = k;
        // Witness for f / ||f||: its moment is beta / ||f||^2.
        w.lambda = beta * (S.weight(k) * fnorm_sq / (2.0 * std::norm(beta)));
        const auto [lhs, rhs] = test_condition_a(f, k, w.lambda, S);
        w.lhs = lhs;
        w.rhs = rhs;
        w.margin = expanded_margin(shifted_norm_sq(f, k, S), fnorm_sq, beta, S.weight(k), w.lambda);
        return w;
    }
    return std::nullopt;
}

GridScan rational_grid_refute(const TruncatedSeries& f, const SpaceContext& S, const GridOptions& options) {
    if (options.max_denominator < 1) throw std::invalid_argument("max_denominator must be >= 1");
    if (!(options.radius >= 0.0)) throw std::invalid_argument("grid radius must be non-negative");
    require_normalized(f, S);

    GridScan scan;
    const bool real_only = f.has_real_coefficients();
    const double fnorm_sq = norm_sq(f, S);

    struct Point {
        double abs_sq;
        long long p;
        long long r;
    };
    std::vector<Point> points;

    for (std::size_t k = 1; k <= f.degree(); ++k) {
        const Complex beta = moment(f, k, S);
        const double omega_k = S.weight(k);
        const double shifted = shifted_norm_sq(f, k, S);
        double radius = options.radius;
        if (std::abs(beta) > options.moment_tol) radius = std::max(radius, omega_k / (2.0 * std::abs(beta)) + 1.0);

        for (std::size_t q = 1; q <= options.max_denominator; ++q) {
            const double qd = static_cast<double>(q);
            const double extent = std::floor(radius * qd);
            const double side = 2.0 * extent + 1.0;
            if (side * (real_only ? 1.0 : side) > static_cast<double>(options.max_points)) {
                scan.budget_exhausted = true;
                continue;
            }
            const auto e = static_cast<long long>(extent);
            const auto qq = static_cast<long long>(q);
            points.clear();
            for (long long p = -e; p <= e; ++p) {
                const long long rmax = real_only ? 0 : e;
                for (long long r = -rmax; r <= rmax; ++r) {
                    if (std::gcd(std::gcd(p, r), qq) != 1) continue;  // seen at a smaller denominator
                    const double abs_sq = static_cast<double>(p * p + r * r) / (qd * qd);
                    if (abs_sq > radius * radius) continue;
                    points.push_back({abs_sq, p, r});
                }
            }
            std::sort(points.begin(), points.end(), [](const Point& a, const Point& b) {
                return std::tie(a.abs_sq, a.p, a.r) < std::tie(b.abs_sq, b.p, b.r);
            });
            for (const Point& pt : points) {
                ++scan.points_examined;
                const Complex lambda{static_cast<double>(pt.p) / qd, static_cast<double>(pt.r) / qd};
                const double rhs = omega_k + std::norm(lambda);
                const double margin = expanded_margin(shifted, fnorm_sq, beta, omega_k, lambda);
                if (!is_strict(margin, rhs)) continue;
                const auto cond = test_condition_a(f, k, lambda, S);
                if (!(cond.lhs > cond.rhs)) continue;
                scan.witness = Witness{k, lambda, cond.lhs, cond.rhs, margin};
                return scan;
            }
        }
    }
    return scan;
}

}  // namespace innerkit
