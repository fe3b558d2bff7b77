#include "riordan/cli.hpp"

#include <algorithm>
#include <regex>
#include <sstream>

#include <CLI11.hpp>

#include "riordan/builtins.hpp"
#include "riordan/expansion.hpp"
#include "riordan/riordan_array.hpp"
#include "riordan/sequences.hpp"

namespace riordan::cli {

namespace {

class help_requested : public usage_error {
public:
    using usage_error::usage_error;
};

const std::regex letter_pattern("^\\s*([ab])[0-9]+\\s*$");

bool is_builtin_name(const std::string &text)
{
    return text == "pascal" || text == "catalan" || text == "motzkin" || text.starts_with("gbs:");
}

CoefficientInput parse_coefficients(const std::string &text, const std::string &flag)
{
    CoefficientInput in;
    if (is_builtin_name(text)) {
        in.name = text;
        return in;
    }
    std::vector<std::string> tokens;
    std::stringstream ss(text);
    for (std::string tok; std::getline(ss, tok, ',');)
        tokens.push_back(tok);
    std::smatch match;
    const bool all_letters = !tokens.empty() && std::all_of(tokens.begin(), tokens.end(), [&](const auto &t) {
        return std::regex_match(t, match, letter_pattern);
    });
    if (all_letters) {
        for (const auto &t : tokens) {
            std::regex_match(t, match, letter_pattern);
            if (match[1].str() != flag)
                throw usage_error("--" + flag + " letters must be named " + flag + "0, " + flag + "1, ...");
        }
        in.symbolic_letters = static_cast<int>(tokens.size());
        return in;
    }
    try {
        in.values = parse_rational_list(text);
    } catch (const parse_error &e) {
        throw usage_error(std::string(e.what()) + " in --" + flag);
    }
    return in;
}

std::optional<int> parse_power(const std::string &text, const std::string &flag)
{
    if (text == "m")
        return std::nullopt;
    try {
        const Rational r = Rational::parse(text);
        if (!r.is_integer() || !r.numerator().fits_sint_p())
            throw usage_error("--" + flag + " must be an integer or m");
        return static_cast<int>(r.numerator().get_si());
    } catch (const parse_error &) {
        throw usage_error("--" + flag + " must be an integer or m, got '" + text + "'");
    }
}

const std::vector<std::pair<std::string, Verb>> verbs = {
    {"g-from-b", Verb::g_from_b},   {"g-from-a", Verb::g_from_a},
    {"b-from-g", Verb::b_from_g},   {"a-from-g", Verb::a_from_g},
    {"expand", Verb::expand},       {"check-pseudo", Verb::check_pseudo},
    {"factorize", Verb::factorize}, {"gbs", Verb::gbs},
    {"gpt", Verb::gpt},             {"matrix", Verb::matrix},
    {"verify", Verb::verify},
};

struct RawArgs {
    std::string a, b, f = "1", g, power, m = "1", format = "plain";
    int order = 10, n = 1, r = 1, rows = 4, cols = 5;
};

void add_options(CLI::App &sub, Verb verb, RawArgs &raw)
{
    sub.add_option("--format", raw.format, "plain, json or csv");
    switch (verb) {
    case Verb::g_from_b:
        sub.add_option("--b", raw.b, "B-sequence coefficients or a builtin name")->required();
        sub.add_option("--order", raw.order, "truncation order N");
        sub.add_option("--power", raw.power, "integer power or m");
        break;
    case Verb::g_from_a:
        sub.add_option("--a", raw.a, "A-sequence coefficients or a builtin name")->required();
        sub.add_option("--order", raw.order, "truncation order N");
        sub.add_option("--power", raw.power, "integer power or m");
        break;
    case Verb::b_from_g:
    case Verb::a_from_g:
    case Verb::check_pseudo:
    case Verb::factorize:
        sub.add_option("--g", raw.g, "coefficients of g or a builtin name")->required();
        sub.add_option("--order", raw.order, "truncation order N");
        break;
    case Verb::expand: {
        auto *b = sub.add_option("--b", raw.b, "B-sequence: coefficients, builtin, or letters b0,b1,...");
        auto *a = sub.add_option("--a", raw.a, "A-sequence: coefficients, builtin, or letters a0,a1,...");
        b->excludes(a);
        sub.add_option("--n", raw.n, "coefficient index n")->required();
        sub.add_option("--power", raw.power, "integer power or m (default m)");
        sub.add_option("--order", raw.order, "order used to resolve builtin names");
        break;
    }
    case Verb::gbs:
        sub.add_option("--r", raw.r, "r >= 1")->required();
        sub.add_option("--m", raw.m, "integer exponent or m");
        sub.add_option("--order", raw.order, "truncation order N");
        break;
    case Verb::gpt:
        sub.add_option("--r", raw.r, "r >= 1")->required();
        sub.add_option("--rows", raw.rows, "rows m = 1..rows");
        sub.add_option("--cols", raw.cols, "columns n = 0..cols-1");
        break;
    case Verb::matrix:
        sub.add_option("--f", raw.f, "coefficients of f (default 1)");
        sub.add_option("--g", raw.g, "coefficients of g in (f, xg)")->required();
        sub.add_option("--order", raw.order, "truncation order N");
        break;
    case Verb::verify: {
        auto *b = sub.add_option("--b", raw.b, "B-sequence to verify");
        auto *g = sub.add_option("--g", raw.g, "series g to verify");
        b->excludes(g);
        sub.add_option("--order", raw.order, "truncation order N");
        break;
    }
    }
}

// ---------------------------------------------------------------------------
// execution helpers

RationalSeries resolve_series(const CoefficientInput &in, const Command &cmd, const char *flag)
{
    if (in.symbolic())
        throw usage_error(std::string("symbolic letters are only accepted by expand (--") + flag + ")");
    if (!in.name.empty()) {
        auto s = named_series(in.name, cmd.order);
        if (!s)
            throw usage_error("unknown builtin '" + in.name + "'");
        return *s;
    }
    // An explicit list is an exact polynomial; --order pads or truncates it.
    if (!cmd.order_given)
        return RationalSeries(in.values);
    return RationalSeries::polynomial(std::span<const Rational>(in.values), cmd.order);
}

std::vector<Rational> resolve_letters(const CoefficientInput &in, const Command &cmd, const char *flag)
{
    if (!in.name.empty()) {
        const auto s = resolve_series(in, cmd, flag);
        return {s.coefficients().begin(), s.coefficients().end()};
    }
    if (in.symbolic())
        throw usage_error(std::string("symbolic letters are only accepted by expand (--") + flag + ")");
    return in.values;
}

std::string format_power_result(const RationalSeries &g, const Command &cmd)
{
    if (!cmd.power_given)
        return format_series(g, cmd.format);
    if (!cmd.power)
        return format_series(pow_symbolic(g), cmd.format);
    return format_series(pow(g, *cmd.power), cmd.format);
}

std::string run_expand(const Command &cmd)
{
    const bool by_a = cmd.a.given();
    const auto &letters_in = by_a ? cmd.a : cmd.b;
    if (!letters_in.given())
        throw usage_error("expand needs --b or --a");
    const char letter = by_a ? 'a' : 'b';

    ExpansionTable table;
    if (letters_in.symbolic()) {
        table = by_a ? a_expansion(cmd.n) : b_expansion(cmd.n);
    } else {
        auto values = resolve_letters(letters_in, cmd, by_a ? "a" : "b");
        table = by_a ? expand_a(ASequence(std::move(values)), cmd.n)
                     : expand_b(BSequence(std::move(values)), cmd.n);
    }

    if (!cmd.power) {
        std::string out = format_expansion(table, letter, cmd.format);
        if (cmd.format == OutputFormat::plain && !letters_in.symbolic())
            out += "total : " + total(table).str() + "\n";
        return out;
    }

    const Rational at(*cmd.power);
    const int first = by_a ? 1 : 0;
    std::ostringstream os;
    switch (cmd.format) {
    case OutputFormat::json: {
        auto j = to_json(table);
        for (std::size_t i = 0; i < table.size(); ++i)
            j[i]["value"] = table[i].coefficient(at).str();
        os << j.dump() << '\n';
        break;
    }
    case OutputFormat::csv:
        for (const auto &t : table) {
            for (std::size_t i = 0; i < t.exponents.size(); ++i)
                os << (i ? " " : "") << t.exponents[i];
            os << ',' << t.n << ',' << t.k << ',' << t.q << ',' << t.coefficient(at) << '\n';
        }
        break;
    case OutputFormat::plain:
        for (const auto &t : table) {
            os << monomial_text(t.exponents, letter, first) << " : " << t.coefficient(at);
            if (t.monomial_value)
                os << "  monomial = " << *t.monomial_value;
            os << '\n';
        }
        if (!letters_in.symbolic())
            os << "total : " << total(table)(at) << '\n';
        break;
    }
    return os.str();
}

std::string run_factorize(const Command &cmd)
{
    const auto g = resolve_series(cmd.g, cmd, "g");
    const auto fact = factorize(g);
    const auto b = b_from_factorization(fact);
    switch (cmd.format) {
    case OutputFormat::json: {
        json j;
        j["order"] = g.order();
        j["sqrt_g"] = to_json(fact.sqrt_g.coefficients());
        j["h"] = to_json(fact.h.coefficients());
        j["s"] = to_json(fact.s.coefficients());
        j["b"] = to_json(b.coefficients);
        return j.dump() + "\n";
    }
    case OutputFormat::csv:
        return "sqrt_g," + join_rationals(fact.sqrt_g.coefficients(), ",") + "\nh," +
               join_rationals(fact.h.coefficients(), ",") + "\ns," +
               join_rationals(fact.s.coefficients(), ",") + "\nb," +
               join_rationals(b.coefficients, ",") + "\n";
    case OutputFormat::plain:
        break;
    }
    return "sqrt_g : " + join_rationals(fact.sqrt_g.coefficients()) +
           "\nh : " + join_rationals(fact.h.coefficients()) +
           "\ns : " + join_rationals(fact.s.coefficients()) +
           "\nb : " + join_rationals(b.coefficients) + "\n";
}

std::string run_matrix(const Command &cmd)
{
    const auto f = resolve_series(cmd.f, cmd, "f");
    const auto g = resolve_series(cmd.g, cmd, "g");
    const auto array = g[0].is_zero() ? RiordanArray::with_degenerate_g(f, g) : RiordanArray(f, g);
    return format_rows(array.dense(array.order() + 1), cmd.format, true);
}

std::string run_gpt(const Command &cmd)
{
    if (cmd.rows < 1 || cmd.cols < 1)
        throw usage_error("gpt needs --rows >= 1 and --cols >= 1");
    const auto table = gpt(cmd.r, cmd.rows + 1, cmd.cols);
    // The m = 0 boundary row (1, 0, 0, ...) is omitted.
    const RationalMatrix body = table.bottomRows(cmd.rows);
    return format_rows(body, cmd.format);
}

std::string run_verify(const Command &cmd, bool &all_ok)
{
    std::ostringstream os;
    all_ok = true;
    auto report = [&](const std::string &name, bool ok) {
        os << name << " : " << (ok ? "ok" : "FAILED") << '\n';
        all_ok = all_ok && ok;
    };
    const int order = cmd.order;

    RationalSeries g = RationalSeries::one(order);
    std::optional<BSequence> b;
    if (cmd.b.given()) {
        b = BSequence(resolve_letters(cmd.b, cmd, "b"));
        g = g_from_b(*b, order);
    } else if (cmd.g.given()) {
        g = resolve_series(cmd.g, cmd, "g");
    } else {
        throw usage_error("verify needs --b or --g");
    }
    if (g[0] != Rational(1))
        throw precondition_error("verify assumes g_0 = 1");

    bool lagrange = true, binomial = true;
    for (int n = 1; n <= g.order(); ++n) {
        lagrange = lagrange && lagrange_check(g, n);
        binomial = binomial && binomial_type_checks(g, n);
    }
    report("lagrange", lagrange);
    report("binomial-type", binomial);

    const bool pseudo = is_pseudo_involution(g);
    if (b)
        report("pseudo-involution", pseudo);
    else
        os << "pseudo-involution : " << (pseudo ? "yes" : "no") << '\n';
    if (!pseudo)
        return os.str();

    const auto extracted = b_from_g(g);
    if (b) {
        BSequence expected;
        for (std::size_t i = 0; i < extracted.size(); ++i)
            expected.coefficients.push_back((*b)[i]);
        report("b-from-g", extracted == expected);
    }
    const RiordanArray array(RationalSeries::one(g.order()), g);
    report("b-recurrence", verify_b_recurrence(array, extracted));
    report("a-recurrence", verify_a_recurrence(array, a_from_g(g)));
    report("factorization", b_from_factorization(factorize(g)) == extracted);

    bool expansion = true, h_form = true;
    for (int n = 1; n <= g.order(); ++n) {
        const auto poly = total(expand_b(extracted, n));
        for (int m = -2; m <= 5; ++m)
            expansion = expansion && poly(Rational(m)) == pow(g, m)[n];
        h_form = h_form && h_expansion_check(extracted, n);
    }
    report("b-expansion", expansion);
    report("h-expansion", h_form);
    return os.str();
}

} // namespace

Command parse_args(const std::vector<std::string> &args)
{
    CLI::App app{"Riordan-array calculus over exact rationals", "riordan"};
    app.require_subcommand(1);
    RawArgs raw;
    std::vector<std::pair<CLI::App *, Verb>> subs;
    for (const auto &[name, verb] : verbs) {
        auto *sub = app.add_subcommand(name);
        add_options(*sub, verb, raw);
        subs.emplace_back(sub, verb);
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        throw help_requested(app.help());
    } catch (const CLI::ParseError &e) {
        throw usage_error(e.what());
    }

    Command cmd;
    for (const auto &[sub, verb] : subs) {
        if (!sub->parsed())
            continue;
        cmd.verb = verb;
        cmd.order_given = sub->get_option_no_throw("--order") && sub->count("--order") > 0;
    }
    if (raw.order < 1)
        throw usage_error("--order must be >= 1");
    if (raw.n < 1)
        throw usage_error("--n must be >= 1");
    if (raw.r < 1)
        throw usage_error("--r must be >= 1");
    cmd.order = raw.order;
    cmd.n = raw.n;
    cmd.r = raw.r;
    cmd.rows = raw.rows;
    cmd.cols = raw.cols;
    try {
        cmd.format = parse_format(raw.format);
    } catch (const parse_error &e) {
        throw usage_error(e.what());
    }
    if (!raw.a.empty())
        cmd.a = parse_coefficients(raw.a, "a");
    if (!raw.b.empty())
        cmd.b = parse_coefficients(raw.b, "b");
    if (!raw.g.empty())
        cmd.g = parse_coefficients(raw.g, "g");
    cmd.f = parse_coefficients(raw.f, "f");
    cmd.power_given = !raw.power.empty();
    cmd.power = cmd.power_given ? parse_power(raw.power, "power") : std::nullopt;
    cmd.m = parse_power(raw.m, "m");
    return cmd;
}

RunResult run(const Command &cmd)
{
    RunResult result;
    try {
        switch (cmd.verb) {
        case Verb::g_from_b:
            result.out = format_power_result(
                g_from_b(BSequence(resolve_letters(cmd.b, cmd, "b")), cmd.order), cmd);
            break;
        case Verb::g_from_a:
            result.out = format_power_result(
                g_from_a(ASequence(resolve_letters(cmd.a, cmd, "a")), cmd.order), cmd);
            break;
        case Verb::b_from_g:
            result.out = format_sequence(b_from_g(resolve_series(cmd.g, cmd, "g")).coefficients,
                                         cmd.format);
            break;
        case Verb::a_from_g:
            result.out = format_sequence(a_from_g(resolve_series(cmd.g, cmd, "g")).coefficients,
                                         cmd.format);
            break;
        case Verb::expand:
            result.out = run_expand(cmd);
            break;
        case Verb::check_pseudo:
            result.out = is_pseudo_involution(resolve_series(cmd.g, cmd, "g")) ? "true\n" : "false\n";
            break;
        case Verb::factorize:
            result.out = run_factorize(cmd);
            break;
        case Verb::gbs:
            result.out = cmd.m ? format_series(gbs(cmd.r, *cmd.m, cmd.order), cmd.format)
                               : format_series(gbs_symbolic(cmd.r, cmd.order), cmd.format);
            break;
        case Verb::gpt:
            result.out = run_gpt(cmd);
            break;
        case Verb::matrix:
            result.out = run_matrix(cmd);
            break;
        case Verb::verify: {
            bool ok = true;
            result.out = run_verify(cmd, ok);
            if (!ok)
                result.status = 2;
            break;
        }
        }
    } catch (const math_error &e) {
        result.status = 2;
        result.out.clear();
        result.err = std::string("error: ") + e.what() + "\n";
    }
    return result;
}

RunResult run_cli(const std::vector<std::string> &args)
{
    try {
        return run(parse_args(args));
    } catch (const help_requested &e) {
        return {0, e.what(), ""};
    } catch (const usage_error &e) {
        return {1, "", std::string("usage error: ") + e.what() + "\n"};
    } catch (const parse_error &e) {
        return {1, "", std::string("usage error: ") + e.what() + "\n"};
    }
}

} // namespace riordan::cli
