#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "riordan/eigen_support.hpp"
#include "riordan/expansion.hpp"
#include "riordan/series.hpp"

namespace riordan {

using json = nlohmann::ordered_json;

enum class OutputFormat { plain, json, csv };

OutputFormat parse_format(std::string_view text);

/// "1, -1/2,3" -> {1, -1/2, 3}; empty items are rejected.
std::vector<Rational> parse_rational_list(std::string_view text);

/// "1, 0, 0" style, the plain rendering of any coefficient list.
std::string join_rationals(std::span<const Rational> values, std::string_view separator = ", ");

/// Letter monomial such as "b0^3*b1"; "1" for the empty monomial.
std::string monomial_text(const std::vector<int> &exponents, char letter, int first_index);

/// Factored rendering m(m+k-1)...(m+k-q+1)/D of an expansion coefficient.
std::string factored_coefficient(const ExpansionTerm &term);

json to_json(const RationalSeries &s);
json to_json(const MuSeries &s);
json to_json(const MuPoly &p);
json to_json(const ExpansionTable &table);
json to_json(std::span<const Rational> values);

Rational rational_from_json(const json &j);
MuPoly mupoly_from_json(const json &j);
RationalSeries rational_series_from_json(const json &j);
MuSeries mu_series_from_json(const json &j);
ExpansionTable expansion_from_json(const json &j);

std::string format_series(const RationalSeries &s, OutputFormat fmt);
std::string format_series(const MuSeries &s, OutputFormat fmt);
/// Plain/csv rendering of a bare coefficient list (A- and B-sequences).
std::string format_sequence(std::span<const Rational> values, OutputFormat fmt);
/// letter is 'b' (exponents start at b_0) or 'a' (exponents start at a_1).
std::string format_expansion(const ExpansionTable &table, char letter, OutputFormat fmt);
/// Rows of a table; lower_triangle restricts row n to its first n+1 entries.
std::string format_rows(const RationalMatrix &m, OutputFormat fmt, bool lower_triangle = false);

} // namespace riordan
