#include "innerkit/series.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>
#include <string>

namespace innerkit {

TruncatedSeries::TruncatedSeries() : coeffs_{Complex{}} {}

TruncatedSeries::TruncatedSeries(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
}

TruncatedSeries::TruncatedSeries(std::initializer_list<Complex> coeffs) : coeffs_(coeffs) {
    trim();
}

TruncatedSeries TruncatedSeries::monomial(std::size_t k, Complex c) {
    std::vector<Complex> v(k + 1);
    v[k] = c;
    return TruncatedSeries(std::move(v));
}

void TruncatedSeries::trim() {
    while (coeffs_.size() > 1 && coeffs_.back() == Complex{}) coeffs_.pop_back();
    if (coeffs_.empty()) coeffs_.emplace_back();
}

bool TruncatedSeries::is_zero() const noexcept {
    return coeffs_.size() == 1 && coeffs_[0] == Complex{};
}

bool TruncatedSeries::has_real_coefficients() const noexcept {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](Complex c) { return c.imag() == 0.0; });
}

TruncatedSeries add(const TruncatedSeries& f, const TruncatedSeries& g) {
    std::vector<Complex> out(std::max(f.degree(), g.degree()) + 1);
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = f[k] + g[k];
    return TruncatedSeries(std::move(out));
}

TruncatedSeries subtract(const TruncatedSeries& f, const TruncatedSeries& g) {
    std::vector<Complex> out(std::max(f.degree(), g.degree()) + 1);
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = f[k] - g[k];
    return TruncatedSeries(std::move(out));
}

TruncatedSeries scale(Complex c, const TruncatedSeries& f) {
    std::vector<Complex> out(f.coeffs().begin(), f.coeffs().end());
    for (auto& x : out) x *= c;
    return TruncatedSeries(std::move(out));
}

TruncatedSeries shift(const TruncatedSeries& f, std::size_t k) {
    if (f.is_zero() || k == 0) return f;
    std::vector<Complex> out(k + f.degree() + 1);
    std::copy(f.coeffs().begin(), f.coeffs().end(), out.begin() + static_cast<std::ptrdiff_t>(k));
    return TruncatedSeries(std::move(out));
}

TruncatedSeries multiply(const TruncatedSeries& f, const TruncatedSeries& g) {
    if (f.is_zero() || g.is_zero()) return {};
    const auto a = f.coeffs();
    const auto b = g.coeffs();
    std::vector<Complex> out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == Complex{}) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return TruncatedSeries(std::move(out));
}

Complex evaluate(const TruncatedSeries& f, Complex z) noexcept {
    const auto c = f.coeffs();
    Complex acc{};
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
    return acc;
}

namespace {

double parse_double(std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
        throw std::invalid_argument("malformed number '" + std::string(s) + "'");
    return v;
}

Complex parse_complex(std::string_view entry) {
    const auto comma = entry.find(',');
    if (comma == std::string_view::npos) return {parse_double(entry), 0.0};
    if (entry.find(',', comma + 1) != std::string_view::npos)
        throw std::invalid_argument("malformed complex entry '" + std::string(entry) + "'");
    return {parse_double(entry.substr(0, comma)), parse_double(entry.substr(comma + 1))};
}

}  // namespace

std::vector<Complex> parse_points(std::string_view text) {
    std::vector<Complex> out;
    if (text.find_first_not_of(' ') == std::string_view::npos) return out;
    std::size_t start = 0;
    while (true) {
        const auto semi = text.find(';', start);
        out.push_back(parse_complex(text.substr(start, semi == std::string_view::npos ? semi : semi - start)));
        if (semi == std::string_view::npos) break;
        start = semi + 1;
    }
    return out;
}

TruncatedSeries parse_series(std::string_view text) {
    auto coeffs = parse_points(text);
    if (coeffs.empty()) throw std::invalid_argument("empty series literal");
    return TruncatedSeries(std::move(coeffs));
}

}  // namespace innerkit
