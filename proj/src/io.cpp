#include "riordan/io.hpp"

#include <sstream>

namespace riordan {

OutputFormat parse_format(std::string_view text)
{
    if (text == "plain")
        return OutputFormat::plain;
    if (text == "json")
        return OutputFormat::json;
    if (text == "csv")
        return OutputFormat::csv;
    throw parse_error("unknown output format '" + std::string(text) + "'");
}

std::vector<Rational> parse_rational_list(std::string_view text)
{
    std::vector<Rational> out;
    std::size_t start = 0;
    while (true) {
        const auto comma = text.find(',', start);
        out.push_back(Rational::parse(text.substr(start, comma - start)));
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    return out;
}

std::string join_rationals(std::span<const Rational> values, std::string_view separator)
{
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i)
            out += separator;
        out += values[i].str();
    }
    return out;
}

std::string monomial_text(const std::vector<int> &exponents, char letter, int first_index)
{
    std::string out;
    for (std::size_t i = 0; i < exponents.size(); ++i) {
        if (exponents[i] == 0)
            continue;
        if (!out.empty())
            out += '*';
        out += letter + std::to_string(static_cast<int>(i) + first_index);
        if (exponents[i] > 1)
            out += '^' + std::to_string(exponents[i]);
    }
    return out.empty() ? "1" : out;
}

std::string factored_coefficient(const ExpansionTerm &term)
{
    if (term.q == 0)
        return "1";
    std::string out = "m";
    for (int j = 1; j < term.q; ++j)
        out += "(m+" + std::to_string(term.k - j) + ")";
    // The polynomial is m * prod (m + k - j) / D, so D is 1 over its leading coefficient.
    const Rational lead = term.coefficient[static_cast<std::size_t>(term.coefficient.degree())];
    const Rational denom = Rational(1) / lead;
    if (denom != Rational(1))
        out += "/" + denom.str();
    return out;
}

json to_json(std::span<const Rational> values)
{
    json arr = json::array();
    for (const auto &v : values)
        arr.push_back(v.str());
    return arr;
}

json to_json(const MuPoly &p) { return to_json(p.coefficients()); }

json to_json(const RationalSeries &s)
{
    json j;
    j["order"] = s.order();
    j["coefficients"] = to_json(s.coefficients());
    return j;
}

json to_json(const MuSeries &s)
{
    json j;
    j["order"] = s.order();
    json arr = json::array();
    for (const auto &c : s.coefficients())
        arr.push_back(to_json(c));
    j["coefficients"] = std::move(arr);
    return j;
}

json to_json(const ExpansionTable &table)
{
    json arr = json::array();
    for (const auto &t : table) {
        json j;
        j["exponents"] = t.exponents;
        j["n"] = t.n;
        j["k"] = t.k;
        j["q"] = t.q;
        j["coefficient_poly"] = to_json(t.coefficient);
        if (t.monomial_value)
            j["monomial_value"] = t.monomial_value->str();
        arr.push_back(std::move(j));
    }
    return arr;
}

Rational rational_from_json(const json &j)
{
    if (!j.is_string())
        throw parse_error("rational must be serialized as a \"p/q\" string");
    return Rational::parse(j.get<std::string>());
}

MuPoly mupoly_from_json(const json &j)
{
    std::vector<Rational> c;
    for (const auto &x : j)
        c.push_back(rational_from_json(x));
    return MuPoly(std::move(c));
}

RationalSeries rational_series_from_json(const json &j)
{
    std::vector<Rational> c;
    for (const auto &x : j.at("coefficients"))
        c.push_back(rational_from_json(x));
    if (static_cast<int>(c.size()) != j.at("order").get<int>() + 1)
        throw parse_error("series json: order does not match the coefficient count");
    return RationalSeries(std::move(c));
}

MuSeries mu_series_from_json(const json &j)
{
    std::vector<MuPoly> c;
    for (const auto &x : j.at("coefficients"))
        c.push_back(mupoly_from_json(x));
    if (static_cast<int>(c.size()) != j.at("order").get<int>() + 1)
        throw parse_error("series json: order does not match the coefficient count");
    return MuSeries(std::move(c));
}

ExpansionTable expansion_from_json(const json &j)
{
    ExpansionTable table;
    for (const auto &t : j) {
        ExpansionTerm term;
        term.exponents = t.at("exponents").get<std::vector<int>>();
        term.n = t.at("n").get<int>();
        term.k = t.at("k").get<int>();
        term.q = t.at("q").get<int>();
        term.coefficient = mupoly_from_json(t.at("coefficient_poly"));
        if (t.contains("monomial_value"))
            term.monomial_value = rational_from_json(t.at("monomial_value"));
        table.push_back(std::move(term));
    }
    return table;
}

std::string format_series(const RationalSeries &s, OutputFormat fmt)
{
    switch (fmt) {
    case OutputFormat::json:
        return to_json(s).dump() + "\n";
    case OutputFormat::csv:
        return join_rationals(s.coefficients(), ",") + "\n";
    case OutputFormat::plain:
        break;
    }
    return join_rationals(s.coefficients()) + "\n";
}

std::string format_series(const MuSeries &s, OutputFormat fmt)
{
    std::ostringstream os;
    switch (fmt) {
    case OutputFormat::json:
        return to_json(s).dump() + "\n";
    case OutputFormat::csv:
        for (int n = 0; n <= s.order(); ++n) {
            os << n;
            for (const auto &c : s[n].coefficients())
                os << ',' << c;
            os << '\n';
        }
        return os.str();
    case OutputFormat::plain:
        break;
    }
    for (int n = 0; n <= s.order(); ++n)
        os << "x^" << n << " : " << s[n] << '\n';
    return os.str();
}

std::string format_sequence(std::span<const Rational> values, OutputFormat fmt)
{
    switch (fmt) {
    case OutputFormat::json: {
        json j;
        j["coefficients"] = to_json(values);
        return j.dump() + "\n";
    }
    case OutputFormat::csv:
        return join_rationals(values, ",") + "\n";
    case OutputFormat::plain:
        break;
    }
    return join_rationals(values) + "\n";
}

std::string format_expansion(const ExpansionTable &table, char letter, OutputFormat fmt)
{
    const int first = letter == 'a' ? 1 : 0;
    std::ostringstream os;
    switch (fmt) {
    case OutputFormat::json:
        return to_json(table).dump() + "\n";
    case OutputFormat::csv:
        for (const auto &t : table) {
            for (std::size_t i = 0; i < t.exponents.size(); ++i)
                os << (i ? " " : "") << t.exponents[i];
            os << ',' << t.n << ',' << t.k << ',' << t.q << ',';
            const auto c = t.coefficient.coefficients();
            for (std::size_t i = 0; i < c.size(); ++i)
                os << (i ? " " : "") << c[i];
            if (t.monomial_value)
                os << ',' << *t.monomial_value;
            os << '\n';
        }
        return os.str();
    case OutputFormat::plain:
        break;
    }
    for (const auto &t : table) {
        os << monomial_text(t.exponents, letter, first) << " : " << factored_coefficient(t)
           << "  (k=" << t.k << ", q=" << t.q << ")";
        if (t.monomial_value)
            os << "  monomial = " << *t.monomial_value;
        os << '\n';
    }
    return os.str();
}

std::string format_rows(const RationalMatrix &m, OutputFormat fmt, bool lower_triangle)
{
    std::vector<std::vector<Rational>> rows;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        const Eigen::Index width = lower_triangle ? std::min(i + 1, m.cols()) : m.cols();
        std::vector<Rational> row;
        for (Eigen::Index j = 0; j < width; ++j)
            row.push_back(m(i, j));
        rows.push_back(std::move(row));
    }
    std::string out;
    if (fmt == OutputFormat::json) {
        json arr = json::array();
        for (const auto &row : rows)
            arr.push_back(to_json(row));
        json j;
        j["rows"] = std::move(arr);
        return j.dump() + "\n";
    }
    for (const auto &row : rows)
        out += join_rationals(row, fmt == OutputFormat::csv ? "," : ", ") + "\n";
    return out;
}

} // namespace riordan
