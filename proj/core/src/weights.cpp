#include "innerkit/weights.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "innerkit/series.hpp"

namespace innerkit {

namespace {

std::string format_shortest(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

double checked_weight(double v, std::size_t k) {
    if (!(v > kMinWeight) || !std::isfinite(v))
        throw std::invalid_argument("weight omega_" + std::to_string(k) + " is not a positive finite number");
    return v;
}

}  // namespace

std::string_view to_string(WeightRule rule) noexcept {
    switch (rule) {
        case WeightRule::hardy: return "hardy";
        case WeightRule::dirichlet: return "dirichlet";
        case WeightRule::bergman: return "bergman";
        case WeightRule::power: return "power";
        case WeightRule::from_measure: return "from_measure";
        case WeightRule::custom: return "custom";
    }
    return "custom";
}

RadialMeasure RadialMeasure::normalized_area() {
    RadialMeasure mu;
    mu.density_moment = [](std::size_t j) { return 2.0 / (static_cast<double>(j) + 2.0); };
    mu.density_name = "normalized_area";
    return mu;
}

void RadialMeasure::validate() const {
    for (const auto& a : atoms) {
        if (!(a.radius >= 0.0 && a.radius <= 1.0))
            throw std::invalid_argument("radial measure atom radius must lie in [0,1]");
        if (!(a.mass > 0.0) || !std::isfinite(a.mass))
            throw std::invalid_argument("radial measure atom mass must be positive and finite");
    }
    if (density_moment) {
        const double m0 = density_moment(0);
        if (!(m0 >= 0.0) || !std::isfinite(m0))
            throw std::invalid_argument("density part must have finite non-negative mass");
    }
}

double RadialMeasure::moment(std::size_t j) const {
    double m = 0.0;
    for (const auto& a : atoms) m += a.mass * std::pow(a.radius, static_cast<double>(j));
    if (density_moment) m += density_moment(j);
    return m;
}

WeightSequence make_weights(WeightRule rule, double alpha, std::string spec, WeightSequence::Generator gen,
                            std::size_t K, std::optional<bool> analytic_expansive) {
    WeightSequence w;
    w.rule_ = rule;
    w.alpha_ = alpha;
    w.spec_ = std::move(spec);
    w.generator_ = std::move(gen);
    w.values_.reserve(K + 1);
    for (std::size_t k = 0; k <= K; ++k) w.values_.push_back(checked_weight(w.generator_(k), k));
    w.finalize(analytic_expansive);
    return w;
}

void WeightSequence::finalize(std::optional<bool> analytic_expansive) {
    if (values_.empty() || values_[0] != 1.0) throw std::invalid_argument("weights must satisfy omega_0 = 1");
    analytic_expansive_ = analytic_expansive;
    expansive_ = analytic_expansive ? *analytic_expansive : !check_expansive(*this, values_.size() - 1).has_value();
    growth_constant_.reset();
    if (values_.size() > 1) growth_constant_ = innerkit::growth_constant(*this, values_.size() - 1);
}

WeightSequence WeightSequence::custom(std::vector<double> values) {
    WeightSequence w;
    for (std::size_t k = 0; k < values.size(); ++k) checked_weight(values[k], k);
    w.values_ = std::move(values);
    w.rule_ = WeightRule::custom;
    w.spec_ = "custom";
    w.finalize(std::nullopt);
    return w;
}

double WeightSequence::operator[](std::size_t k) const {
    if (k < values_.size()) return values_[k];
    if (!generator_)
        throw std::out_of_range("weight index " + std::to_string(k) + " beyond materialized custom sequence");
    return generator_(k);
}

bool WeightSequence::expansive_through(std::size_t K) const {
    if (analytic_expansive_) return *analytic_expansive_;
    double prev = (*this)[0];
    for (std::size_t k = 1; k <= K; ++k) {
        const double cur = (*this)[k];
        if (prev > cur) return false;
        prev = cur;
    }
    return true;
}

WeightSequence WeightSequence::extended(std::size_t K) const {
    if (K < values_.size()) return *this;
    if (!generator_) throw std::out_of_range("custom weight sequence cannot be extended");
    WeightSequence w = *this;
    for (std::size_t k = values_.size(); k <= K; ++k) w.values_.push_back(checked_weight(generator_(k), k));
    w.finalize(analytic_expansive_);
    return w;
}

WeightSequence hardy_weights(std::size_t K) {
    return make_weights(WeightRule::hardy, 0.0, "hardy", [](std::size_t) { return 1.0; }, K, true);
}

WeightSequence dirichlet_weights(std::size_t K) {
    return make_weights(
        WeightRule::dirichlet, 1.0, "dirichlet", [](std::size_t k) { return 1.0 + static_cast<double>(k); }, K, true);
}

WeightSequence bergman_weights(std::size_t K) {
    return make_weights(
        WeightRule::bergman, -1.0, "bergman", [](std::size_t k) { return 1.0 / (static_cast<double>(k) + 1.0); }, K,
        false);
}

WeightSequence power_weights(double alpha, std::size_t K) {
    if (!std::isfinite(alpha)) throw std::invalid_argument("power weight exponent must be finite");
    return make_weights(
        WeightRule::power, alpha, "power:" + format_shortest(alpha),
        [alpha](std::size_t k) { return std::pow(static_cast<double>(k) + 1.0, alpha); }, K, alpha >= 0.0);
}

WeightSequence weights_from_radial_measure(const RadialMeasure& mu, std::size_t K) {
    mu.validate();
    std::string spec = "atoms:";
    for (std::size_t i = 0; i < mu.atoms.size(); ++i) {
        if (i) spec += ';';
        spec += format_shortest(mu.atoms[i].radius) + "," + format_shortest(mu.atoms[i].mass);
    }
    if (mu.density_moment) spec += (mu.atoms.empty() ? "" : "+") + (mu.density_name.empty() ? "density" : mu.density_name);
    auto gen = [mu](std::size_t k) {
        if (k == 0) return 1.0;
        const double kk = static_cast<double>(k);
        return 1.0 + kk * kk * mu.moment(2 * k - 2);
    };
    return make_weights(WeightRule::from_measure, 0.0, std::move(spec), std::move(gen), K, std::nullopt);
}

std::optional<std::size_t> check_expansive(const WeightSequence& w, std::size_t K) {
    if (K >= w.size()) throw std::out_of_range("check_expansive range exceeds materialized weights");
    const auto v = w.values();
    for (std::size_t k = 0; k < K; ++k)
        if (v[k] > v[k + 1]) return k;
    return std::nullopt;
}

double growth_constant(const WeightSequence& w, std::size_t K) {
    if (K < 1) throw std::invalid_argument("growth_constant needs K >= 1");
    double c = std::nextafter(1.0, 2.0);
    for (std::size_t k = 1; k <= K; ++k) {
        const double kk = static_cast<double>(k);
        c = std::max(c, w[k] / (kk * kk));
    }
    return c;
}

WeightSequence parse_weight_spec(std::string_view spec, std::size_t K) {
    if (spec == "hardy") return hardy_weights(K);
    if (spec == "dirichlet") return dirichlet_weights(K);
    if (spec == "bergman") return bergman_weights(K);
    if (spec.starts_with("power:")) {
        const auto body = spec.substr(6);
        double alpha = 0.0;
        auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), alpha);
        if (body.empty() || ec != std::errc{} || ptr != body.data() + body.size())
            throw std::invalid_argument("malformed power exponent in '" + std::string(spec) + "'");
        return power_weights(alpha, K);
    }
    if (spec.starts_with("atoms:")) {
        RadialMeasure mu;
        const auto body = spec.substr(6);
        std::size_t start = 0;
        while (!body.empty()) {
            const auto semi = body.find(';', start);
            const auto entry = body.substr(start, semi == std::string_view::npos ? semi : semi - start);
            if (entry.find(',') == std::string_view::npos)
                throw std::invalid_argument("atom entries must be 'radius,mass'");
            const Complex p = parse_points(entry).at(0);
            mu.atoms.push_back({p.real(), p.imag()});
            if (semi == std::string_view::npos) break;
            start = semi + 1;
        }
        return weights_from_radial_measure(mu, K);
    }
    throw std::invalid_argument("unknown weight spec '" + std::string(spec) + "'");
}

}  // namespace innerkit
