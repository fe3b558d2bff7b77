#pragma once

#include <optional>
#include <string_view>

#include "riordan/series.hpp"

namespace riordan {

/// Named series: "pascal" (1/(1-x)), "catalan" (B_2), "motzkin" (A = 1 + x + x^2),
/// "gbs:r:m" (B_r^m). Returns nullopt for an unknown name; throws parse_error for a
/// malformed gbs:r:m name.
std::optional<RationalSeries> named_series(std::string_view name, int order);

} // namespace riordan
