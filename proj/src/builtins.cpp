#include "riordan/builtins.hpp"

#include <charconv>
#include <string>

#include "riordan/expansion.hpp"
#include "riordan/sequences.hpp"

namespace riordan {

namespace {

int parse_int(std::string_view s, std::string_view whole)
{
    int v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw parse_error("malformed builtin '" + std::string(whole) + "'");
    return v;
}

} // namespace

std::optional<RationalSeries> named_series(std::string_view name, int order)
{
    if (name == "pascal")
        return mul_inverse(RationalSeries::polynomial({Rational(1), Rational(-1)}, order));
    if (name == "catalan")
        return gbs(2, 1, order);
    if (name == "motzkin")
        return g_from_a(ASequence{1, 1, 1}, order);
    if (name.starts_with("gbs:")) {
        const auto rest = name.substr(4);
        const auto colon = rest.find(':');
        if (colon == std::string_view::npos)
            throw parse_error("builtin gbs needs the form gbs:r:m");
        const int r = parse_int(rest.substr(0, colon), name);
        const int m = parse_int(rest.substr(colon + 1), name);
        if (r < 1)
            throw parse_error("builtin gbs needs r >= 1");
        return gbs(r, m, order);
    }
    return std::nullopt;
}

} // namespace riordan
