#pragma once

#include <nlohmann/json.hpp>

#include "innerkit/inner.hpp"
#include "innerkit/multiplier.hpp"
#include "innerkit/series.hpp"
#include "innerkit/weights.hpp"

namespace innerkit {

/// Version tag written into every CLI document.
inline constexpr const char* kSchemaVersion = "1";

/// [re, im]
[[nodiscard]] nlohmann::json complex_to_json(Complex z);

/// [[re, im], ...], lowest degree first.
[[nodiscard]] nlohmann::json to_json(const TruncatedSeries& f);
[[nodiscard]] TruncatedSeries series_from_json(const nlohmann::json& j);

[[nodiscard]] nlohmann::json to_json(const WeightSequence& w);

/// {"is_inner", "norm_sq", "moments": [[j, re, im], ...], "first_bad", "tolerance"}
[[nodiscard]] nlohmann::json to_json(const InnerVerdict& v);

/// {"k", "lambda": [re, im], "lhs", "rhs", "margin"}
[[nodiscard]] nlohmann::json to_json(const Witness& w);

/// {"N", "sigma", "converged"}
[[nodiscard]] nlohmann::json to_json(const SectionBound& b);

/// Rounds every floating-point leaf to `digits` significant digits
/// (locale-independent), so serialized documents are stable across runs.
void round_floats(nlohmann::json& doc, int digits = 12);

}  // namespace innerkit
