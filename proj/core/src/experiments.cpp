#include "innerkit/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "innerkit/inner.hpp"
#include "innerkit/json_io.hpp"
#include "innerkit/kernels.hpp"
#include "innerkit/multiplier.hpp"

namespace innerkit {

using nlohmann::json;

namespace {

constexpr double kMarginFloor = 1.0 - 1e-9;
constexpr double kInnerSigmaCeiling = 1.0 + 1e-8;
constexpr double kRs92CandidateThreshold = 1.0 + 1e-4;
constexpr double kRatioFloor = 1.0 - 1e-6;
constexpr std::size_t kTheoremSection = 64;
constexpr std::size_t kZeroSetTruncation = 64;

Complex unit_disc_sample(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const double r = std::sqrt(u(rng));
    const double t = 2.0 * std::numbers::pi * u(rng);
    return std::polar(r, t);
}

std::size_t uniform_index(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

double max_moment(const InnerVerdict& v) {
    double m = 0.0;
    for (const auto& e : v.moments) m = std::max(m, std::abs(e.value));
    return m;
}

void require_expansive_space(const SpaceContext& S, std::size_t top) {
    if (S.weights.expansive_through(top)) return;
    std::size_t bad = 0;
    for (std::size_t k = 0; k < top; ++k)
        if (S.weight(k) > S.weight(k + 1)) {
            bad = k;
            break;
        }
    throw NonExpansiveWeights(S.weights.spec(), bad);
}

json nullable(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

}  // namespace

json to_json(const ExperimentReport& report) {
    return {{"name", report.name},           {"seed", report.seed},
            {"parameters", report.parameters}, {"trials", report.trials},
            {"failures", report.failures},     {"summary", report.summary},
            {"records", report.records}};
}

std::string to_csv(const ExperimentReport& report) {
    std::vector<std::string> columns;
    for (const auto& rec : report.records)
        for (auto it = rec.begin(); it != rec.end(); ++it)
            if (!it.value().is_structured() && std::find(columns.begin(), columns.end(), it.key()) == columns.end())
                columns.push_back(it.key());
    std::ostringstream out;
    for (std::size_t i = 0; i < columns.size(); ++i) out << (i ? "," : "") << columns[i];
    out << '\n';
    for (const auto& rec : report.records) {
        for (std::size_t i = 0; i < columns.size(); ++i) {
            if (i) out << ',';
            if (!rec.contains(columns[i]) || rec[columns[i]].is_null()) continue;
            const auto& v = rec[columns[i]];
            out << (v.is_string() ? v.get<std::string>() : v.dump());
        }
        out << '\n';
    }
    return out.str();
}

std::mt19937_64 trial_rng(std::uint64_t seed, std::size_t trial) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(std::uint64_t{trial} >> 32)};
    return std::mt19937_64(seq);
}

TruncatedSeries random_polynomial(std::mt19937_64& rng, std::size_t max_degree, const SpaceContext& S) {
    const std::size_t d = uniform_index(rng, 1, std::max<std::size_t>(1, max_degree));
    std::vector<Complex> c(d + 1);
    for (auto& x : c) x = unit_disc_sample(rng);
    if (c.back() == Complex{}) c.back() = 1.0;
    return normalized(TruncatedSeries(std::move(c)), S);
}

TruncatedSeries random_monomial_inner(std::mt19937_64& rng, std::size_t max_degree, const SpaceContext& S) {
    const std::size_t d = uniform_index(rng, 1, std::max<std::size_t>(1, max_degree));
    std::uniform_real_distribution<double> u(0.0, 2.0 * std::numbers::pi);
    return TruncatedSeries::monomial(d, std::polar(1.0 / std::sqrt(S.weight(d)), u(rng)));
}

TruncatedSeries near_inner_polynomial(std::mt19937_64& rng, std::size_t max_degree, const SpaceContext& S,
                                      double* eps_out) {
    const auto base = random_monomial_inner(rng, max_degree, S);
    const auto noise = random_polynomial(rng, max_degree, S);
    const double eps = std::pow(10.0, std::uniform_real_distribution<double>(-3.0, -1.0)(rng));
    if (eps_out) *eps_out = eps;
    return normalized(add(base, scale(eps, noise)), S);
}

ExperimentReport verify_theorem_main(const SpaceContext& S, std::size_t trials, std::size_t max_degree,
                                     std::uint64_t seed) {
    if (max_degree < 1) throw std::invalid_argument("max_degree must be >= 1");
    require_expansive_space(S, 2 * std::max(max_degree, kZeroSetTruncation) + kTheoremSection + 1);
    const bool dirichlet = S.weights.rule() == WeightRule::dirichlet;

    ExperimentReport rep;
    rep.name = "verify_theorem_main";
    rep.seed = seed;
    rep.trials = trials;
    rep.parameters = {{"space", S.weights.spec()},
                      {"max_degree", max_degree},
                      {"moment_tol", kDefaultMomentTol},
                      {"margin_floor", kMarginFloor},
                      {"multiplier_section", dirichlet ? json(kTheoremSection) : json(nullptr)},
                      {"samplers",
                       {{"monomial", "e^{it} z^d / sqrt(omega_d), d uniform on [1, max_degree] (trial % 5 == 0)"},
                        {"zero_set",
                         "ss_inner of 1-2 zeros with |a| in [0.1, 0.6], truncation 64 (trial % 5 == 1)"},
                        {"near_inner", "monomial + eps * random, eps log-uniform on [1e-3, 1e-1] (trial % 5 == 2)"},
                        {"random", "coefficients uniform on the unit disc, degree uniform (otherwise)"}}}};

    std::size_t inner_count = 0, witness_count = 0;
    double min_margin = std::numeric_limits<double>::infinity();
    double max_inner_sigma = 0.0;

    for (std::size_t t = 0; t < trials; ++t) {
        auto rng = trial_rng(seed, t);
        std::string kind;
        TruncatedSeries f;
        std::optional<double> eps;
        switch (t % 5) {
            case 0:
                kind = "monomial";
                f = random_monomial_inner(rng, max_degree, S);
                break;
            case 1: {
                kind = "zero_set";
                std::vector<Complex> zeros;
                const std::size_t count = uniform_index(rng, 1, 2);
                std::uniform_real_distribution<double> radius(0.1, 0.6), angle(0.0, 2.0 * std::numbers::pi);
                while (zeros.size() < count) {
                    const Complex a = std::polar(radius(rng), angle(rng));
                    if (std::none_of(zeros.begin(), zeros.end(), [&](Complex b) { return std::abs(a - b) < 0.1; }))
                        zeros.push_back(a);
                }
                f = ss_inner(zeros, S, kZeroSetTruncation);
                break;
            }
            case 2: {
                kind = "near_inner";
                double e = 0.0;
                f = near_inner_polynomial(rng, max_degree, S, &e);
                eps = e;
                break;
            }
            default:
                kind = "random";
                f = random_polynomial(rng, max_degree, S);
        }

        const auto verdict = is_inner(f, S, kDefaultMomentTol);
        const auto witness = refute(f, S, kDefaultMomentTol);
        json rec{{"trial", t},
                 {"kind", kind},
                 {"degree", f.degree()},
                 {"eps", nullable(eps)},
                 {"is_inner", verdict.is_inner},
                 {"max_moment", max_moment(verdict)},
                 {"witness_k", nullptr},
                 {"lambda_re", nullptr},
                 {"lambda_im", nullptr},
                 {"margin", nullptr},
                 {"sigma", nullptr}};

        if (verdict.is_inner) ++inner_count;
        if (witness.has_value() == verdict.is_inner) {
            rep.failures.push_back({{"trial", t},
                                    {"check", "witness_iff_not_inner"},
                                    {"is_inner", verdict.is_inner},
                                    {"witness", witness.has_value()}});
        }
        if (witness) {
            ++witness_count;
            rec["witness_k"] = witness->k;
            rec["lambda_re"] = witness->lambda.real();
            rec["lambda_im"] = witness->lambda.imag();
            rec["margin"] = witness->margin;
            min_margin = std::min(min_margin, witness->margin);
            if (!(witness->margin >= kMarginFloor) || !(witness->lhs > witness->rhs))
                rep.failures.push_back({{"trial", t}, {"check", "margin_floor"}, {"margin", witness->margin}});
        }
        if (dirichlet && verdict.is_inner) {
            const auto bound = multiplier_lower_bound(f, S, kTheoremSection);
            rec["sigma"] = bound.sigma;
            max_inner_sigma = std::max(max_inner_sigma, bound.sigma);
            if (!(bound.sigma <= kInnerSigmaCeiling))
                rep.failures.push_back({{"trial", t}, {"check", "inner_multiplier_norm"}, {"sigma", bound.sigma}});
        }
        rep.records.push_back(std::move(rec));
    }

    rep.summary = {{"inner", inner_count},
                   {"witnesses", witness_count},
                   {"failures", rep.failures.size()},
                   {"min_margin", witness_count ? json(min_margin) : json(nullptr)},
                   {"max_inner_sigma", dirichlet && inner_count ? json(max_inner_sigma) : json(nullptr)}};
    return rep;
}

ExperimentReport bergman_counterexample() {
    constexpr std::size_t N = 50;
    const SpaceContext S{bergman_weights(N + 2)};
    const TruncatedSeries f = TruncatedSeries::monomial(1, std::sqrt(2.0));

    ExperimentReport rep;
    rep.name = "bergman_counterexample";
    rep.parameters = {{"space", "bergman"}, {"function", to_json(f)}, {"section", N}};

    const auto verdict = is_inner(f, S, kDefaultMomentTol);
    const auto violation = check_expansive(S.weights, S.weights.size() - 1);
    const auto bound = multiplier_lower_bound(f, S, N);
    const double expected = std::sqrt(2.0 * (N + 1.0) / (N + 2.0));
    const double sup = sup_norm_estimate(f, 1024);

    if (!verdict.is_inner) rep.failures.push_back({{"check", "is_inner"}, {"verdict", to_json(verdict)}});
    if (!(std::abs(verdict.norm_sq - 1.0) <= 1e-12))
        rep.failures.push_back({{"check", "norm_sq"}, {"norm_sq", verdict.norm_sq}});
    if (violation != std::optional<std::size_t>{0})
        rep.failures.push_back({{"check", "expansive_violation_at_0"}});
    if (!(bound.sigma >= 1.39) || !(std::abs(bound.sigma - expected) <= 1e-9))
        rep.failures.push_back({{"check", "sigma_50"}, {"sigma", bound.sigma}, {"expected", expected}});

    rep.summary = {{"is_inner", verdict.is_inner},
                   {"norm_sq", verdict.norm_sq},
                   {"expansive_violation", violation ? json(*violation) : json(nullptr)},
                   {"sigma_50", bound.sigma},
                   {"sigma_50_closed_form", expected},
                   {"sup_norm", sup},
                   {"multiplier_norm_exceeds_one", bound.sigma > 1.0}};
    rep.records.push_back(to_json(bound));
    return rep;
}

ExperimentReport explore_rs92(const SpaceContext& S, std::span<const std::vector<Complex>> zero_sets, std::size_t N,
                              std::size_t truncation) {
    ExperimentReport rep;
    rep.name = "explore_rs92";
    rep.trials = zero_sets.size();
    rep.parameters = {{"space", S.weights.spec()},
                      {"section", N},
                      {"truncation", truncation == 0 ? json("default") : json(truncation)},
                      {"candidate_threshold", kRs92CandidateThreshold}};
    std::size_t candidates = 0;
    double max_sigma = 0.0;
    for (std::size_t i = 0; i < zero_sets.size(); ++i) {
        const auto& zeros = zero_sets[i];
        const std::size_t K = truncation ? truncation : default_kernel_truncation(zeros);
        require_expansive_space(S, K + N + 1);
        const auto phi = ss_inner(zeros, S, K);
        const auto verdict = is_inner(phi, S, 1e-8);
        const auto bound = multiplier_lower_bound(phi, S, N);
        json zs = json::array();
        for (Complex a : zeros) zs.push_back(complex_to_json(a));
        const bool candidate = bound.sigma > kRs92CandidateThreshold;
        candidates += candidate;
        max_sigma = std::max(max_sigma, bound.sigma);
        if (!verdict.is_inner)
            rep.failures.push_back({{"sample", i}, {"check", "approximately_inner"}, {"max_moment", max_moment(verdict)}});
        rep.records.push_back({{"sample", i},
                               {"zeros", std::move(zs)},
                               {"truncation", K},
                               {"approximately_inner", verdict.is_inner},
                               {"max_moment", max_moment(verdict)},
                               {"sigma", bound.sigma},
                               {"converged", bound.converged},
                               {"candidate", candidate}});
    }
    rep.summary = {{"candidates", candidates}, {"max_sigma", max_sigma}};
    return rep;
}

namespace {

class RatioObjective {
public:
    RatioObjective(const SpaceContext& S, std::vector<TruncatedSeries> basis, const ExtremalOptions& opt)
        : S_(S), basis_(std::move(basis)), opt_(opt), sup_mode_(S.weights.rule() == WeightRule::bergman) {}

    [[nodiscard]] std::size_t dim() const noexcept { return basis_.size(); }
    [[nodiscard]] bool sup_mode() const noexcept { return sup_mode_; }

    [[nodiscard]] TruncatedSeries assemble(std::span<const Complex> x) const {
        TruncatedSeries f;
        for (std::size_t j = 0; j < basis_.size(); ++j)
            if (x[j] != Complex{}) f = add(f, scale(x[j], basis_[j]));
        return f;
    }

    [[nodiscard]] double ratio(const TruncatedSeries& f) const {
        ++evaluations_;
        if (f.is_zero()) return std::numeric_limits<double>::infinity();
        const double bound = sup_mode_ ? sup_norm_estimate(f, opt_.sup_grid)
                                       : multiplier_lower_bound(f, S_, opt_.section_size).sigma;
        return bound / norm(f, S_);
    }

    [[nodiscard]] double operator()(std::span<const Complex> x) const { return ratio(assemble(x)); }
    [[nodiscard]] std::size_t evaluations() const noexcept { return evaluations_; }

private:
    const SpaceContext& S_;
    std::vector<TruncatedSeries> basis_;
    ExtremalOptions opt_;
    bool sup_mode_;
    mutable std::size_t evaluations_ = 0;
};

void normalize_vector(std::vector<Complex>& x) {
    double s = 0.0;
    for (Complex c : x) s += std::norm(c);
    s = std::sqrt(s);
    if (s > 0.0)
        for (auto& c : x) c /= s;
}

}  // namespace

ExperimentReport extremal_search(const SpaceContext& S, std::span<const Complex> zeros, std::size_t degree,
                                 std::size_t restarts, std::uint64_t seed, const ExtremalOptions& options) {
    if (degree < zeros.size() + 1)
        throw std::invalid_argument("degree must be at least the number of zeros plus one");
    for (std::size_t i = 0; i < zeros.size(); ++i) {
        if (!(std::abs(zeros[i]) < 1.0)) throw std::invalid_argument("zeros must lie in the open unit disc");
        for (std::size_t j = 0; j < i; ++j)
            if (zeros[i] == zeros[j]) throw std::invalid_argument("zeros must be pairwise distinct");
    }

    // Basis z^j P(z), P(z) = prod (z - a_i), of the constrained space.
    TruncatedSeries vanishing{1.0};
    for (Complex a : zeros) vanishing = multiply(vanishing, TruncatedSeries{-a, 1.0});
    std::vector<TruncatedSeries> basis;
    for (std::size_t j = 0; j + zeros.size() <= degree; ++j) basis.push_back(shift(vanishing, j));
    const RatioObjective objective(S, std::move(basis), options);
    const bool check_floor = !objective.sup_mode() && S.weights.expansive_through(degree + options.section_size + 1);

    ExperimentReport rep;
    rep.name = "extremal_search";
    rep.seed = seed;
    rep.trials = restarts;
    json zs = json::array();
    for (Complex a : zeros) zs.push_back(complex_to_json(a));
    rep.parameters = {{"space", S.weights.spec()},
                      {"zeros", std::move(zs)},
                      {"degree", degree},
                      {"restarts", restarts},
                      {"bound", objective.sup_mode() ? "sup_norm_estimate" : "multiplier_lower_bound"},
                      {"section_size", options.section_size},
                      {"sup_grid", options.sup_grid},
                      {"optimizer", "normalized coordinate descent, step halving"}};

    // Projection of 1 onto the constrained polynomials.
    TruncatedSeries candidate{1.0};
    json candidate_json = nullptr;
    std::optional<double> candidate_ratio;
    const bool origin_zero = std::any_of(zeros.begin(), zeros.end(), [](Complex a) { return a == Complex{}; });
    if (!zeros.empty() && !origin_zero) candidate = ss_inner(zeros, S, degree);
    if (zeros.empty() || !origin_zero) {
        candidate_ratio = objective.ratio(candidate);
        candidate_json = to_json(candidate);
        if (check_floor && !(*candidate_ratio >= kRatioFloor))
            rep.failures.push_back({{"check", "ratio_floor"}, {"restart", nullptr}, {"ratio", *candidate_ratio}});
    }

    double best = std::numeric_limits<double>::infinity();
    TruncatedSeries best_f;
    for (std::size_t r = 0; r < restarts; ++r) {
        auto rng = trial_rng(seed, r);
        std::normal_distribution<double> gauss;
        std::vector<Complex> x(objective.dim());
        for (auto& c : x) c = {gauss(rng), gauss(rng)};
        normalize_vector(x);
        double value = objective(x);
        double step = options.initial_step;
        std::size_t sweeps = 0;
        const std::size_t evals_before = objective.evaluations();
        while (step >= options.min_step && sweeps < options.max_sweeps) {
            ++sweeps;
            bool improved = false;
            for (std::size_t c = 0; c < 2 * x.size(); ++c) {
                for (double sign : {1.0, -1.0}) {
                    auto trial = x;
                    const Complex delta = (c % 2 == 0) ? Complex{sign * step, 0.0} : Complex{0.0, sign * step};
                    trial[c / 2] += delta;
                    normalize_vector(trial);
                    const double v = objective(trial);
                    if (v < value) {
                        value = v;
                        x = std::move(trial);
                        improved = true;
                        break;
                    }
                }
            }
            if (!improved) step *= 0.5;
        }
        const auto f = objective.assemble(x);
        if (check_floor && !(value >= kRatioFloor))
            rep.failures.push_back({{"check", "ratio_floor"}, {"restart", r}, {"ratio", value}});
        rep.records.push_back({{"restart", r},
                               {"ratio", value},
                               {"sweeps", sweeps},
                               {"evaluations", objective.evaluations() - evals_before},
                               {"final_step", step}});
        if (value < best) {
            best = value;
            best_f = f;
        }
    }

    rep.summary = {{"candidate", candidate_json},
                   {"candidate_ratio", nullable(candidate_ratio)},
                   {"best_ratio", restarts ? json(best) : json(nullptr)},
                   {"best_certificate", restarts ? to_json(normalized(best_f, S)) : json(nullptr)},
                   {"gap", restarts && candidate_ratio ? json(best - *candidate_ratio) : json(nullptr)}};
    return rep;
}

}  // namespace innerkit
