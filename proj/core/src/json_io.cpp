#include "innerkit/json_io.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

namespace innerkit {

using nlohmann::json;

json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

json to_json(const TruncatedSeries& f) {
    json out = json::array();
    for (Complex c : f.coeffs()) out.push_back(complex_to_json(c));
    return out;
}

TruncatedSeries series_from_json(const json& j) {
    if (!j.is_array() || j.empty()) throw std::invalid_argument("series must be a non-empty array of [re, im] pairs");
    std::vector<Complex> c;
    c.reserve(j.size());
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
            throw std::invalid_argument("series entries must be [re, im] number pairs");
        c.emplace_back(e[0].get<double>(), e[1].get<double>());
    }
    return TruncatedSeries(std::move(c));
}

json to_json(const WeightSequence& w) {
    json out{{"spec", w.spec()},
             {"rule", std::string(to_string(w.rule()))},
             {"values", json(std::vector<double>(w.values().begin(), w.values().end()))},
             {"expansive", w.expansive()},
             {"first_violation", nullptr},
             {"growth_constant", nullptr},
             {"super_quadratic", w.super_quadratic()}};
    if (w.size() > 0)
        if (auto bad = check_expansive(w, w.size() - 1)) out["first_violation"] = *bad;
    if (auto c = w.growth_constant()) out["growth_constant"] = *c;
    return out;
}

json to_json(const InnerVerdict& v) {
    json moments = json::array();
    for (const auto& m : v.moments) moments.push_back(json::array({m.j, m.value.real(), m.value.imag()}));
    json out{{"is_inner", v.is_inner},
             {"norm_sq", v.norm_sq},
             {"moments", std::move(moments)},
             {"first_bad", nullptr},
             {"tolerance", v.tolerance}};
    if (v.first_bad) out["first_bad"] = {{"j", v.first_bad->j}, {"abs", v.first_bad->magnitude}};
    return out;
}

json to_json(const Witness& w) {
    return {{"k", w.k}, {"lambda", complex_to_json(w.lambda)}, {"lhs", w.lhs}, {"rhs", w.rhs}, {"margin", w.margin}};
}

json to_json(const SectionBound& b) { return {{"N", b.N}, {"sigma", b.sigma}, {"converged", b.converged}}; }

namespace {

double round_sig(double v, int digits) {
    if (v == 0.0) return 0.0;
    if (!std::isfinite(v)) return v;
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, digits);
    if (ec != std::errc{}) return v;
    double out = v;
    std::from_chars(buf, end, out);
    return out == 0.0 ? 0.0 : out;
}

}  // namespace

void round_floats(json& doc, int digits) {
    if (doc.is_number_float()) {
        doc = round_sig(doc.get<double>(), digits);
    } else if (doc.is_structured()) {
        for (auto& child : doc) round_floats(child, digits);
    }
}

}  // namespace innerkit
