#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "riordan/cli.hpp"
#include "riordan/expansion.hpp"
#include "riordan/io.hpp"
#include "support.hpp"

using namespace riordan;
using namespace riordan::cli;
using riordan::testing::Pool;

namespace {

using Args = std::vector<std::string>;

std::string golden(const std::string &name)
{
    std::ifstream in(std::string(RIORDAN_GOLDEN_DIR) + "/" + name, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::string join(const std::vector<Rational> &values, const char *sep)
{
    return join_rationals(values, sep);
}

} // namespace

TEST_CASE("argument parsing")
{
    const auto cmd = parse_args({"g-from-b", "--b", "1,1", "--order", "6"});
    CHECK(cmd.verb == Verb::g_from_b);
    CHECK(cmd.b.values == std::vector<Rational>{1, 1});
    CHECK(cmd.order == 6);
    CHECK(cmd.order_given);

    const auto sym = parse_args({"expand", "--b", "1,1", "--n", "6", "--power", "m"});
    CHECK(sym.verb == Verb::expand);
    CHECK(sym.power_given);
    CHECK_FALSE(sym.power.has_value());

    const auto letters = parse_args({"expand", "--b", "b0,b1", "--n", "6"});
    CHECK(letters.b.symbolic_letters == 2);
    const auto named = parse_args({"b-from-g", "--g", "gbs:3:2"});
    CHECK(named.g.name == "gbs:3:2");
    CHECK(parse_args({"gpt", "--r", "2", "--format", "csv"}).format == OutputFormat::csv);

    CHECK_THROWS_AS(parse_args({"g-from-b", "--b", "1,x"}), usage_error);
    CHECK_THROWS_AS(parse_args({"g-from-b", "--b", "1,1", "--order", "0"}), usage_error);
    CHECK_THROWS_AS(parse_args({"frobnicate"}), usage_error);
    CHECK_THROWS_AS(parse_args({}), usage_error);
    CHECK_THROWS_AS(parse_args({"expand", "--b", "a0,a1", "--n", "3"}), usage_error);
    CHECK_THROWS_AS(parse_args({"expand", "--b", "1", "--a", "1", "--n", "3"}), usage_error);
    CHECK_THROWS_AS(parse_args({"gbs", "--r", "2", "--m", "1/2"}), usage_error);
    CHECK_THROWS_AS(parse_args({"g-from-b", "--b", "1", "--format", "xml"}), usage_error);
}

TEST_CASE("exit statuses")
{
    CHECK(run_cli({"g-from-b", "--b", "1,x"}).status == 1);
    CHECK(run_cli({"nonsense"}).status == 1);
    CHECK(run_cli({"g-from-b", "--b", "1", "--order", "-3"}).status == 1);
    CHECK(run_cli({"b-from-g", "--g", "1,1,0,0"}).status == 2);
    CHECK(run_cli({"factorize", "--g", "catalan"}).status == 2);
    CHECK(run_cli({"g-from-b", "--b", "qwerty:1"}).status == 1);
    CHECK(run_cli({"g-from-b", "--b", "gbs:x:1"}).status == 1);
    const auto bad = run_cli({"b-from-g", "--g", "1,1,0,0"});
    CHECK(bad.out.empty());
    CHECK_FALSE(bad.err.empty());
    CHECK(run_cli({"--help"}).status == 0);
}

TEST_CASE("documented invocations")
{
    CHECK(run_cli({"g-from-b", "--b", "1,1", "--order", "6"}).out == "1, 1, 1, 2, 4, 7, 13\n");
    CHECK(run_cli({"b-from-g", "--g", "pascal", "--order", "8"}).out == "1, 0, 0, 0\n");
    const auto expanded = run_cli({"expand", "--b", "b0,b1", "--n", "6", "--power", "m"});
    CHECK(expanded.status == 0);
    CHECK(expanded.out.find("b1^2 : m(m+3)/2") != std::string::npos);
    CHECK(std::count(expanded.out.begin(), expanded.out.end(), '\n') == 4);

    const auto table = run_cli({"gpt", "--r", "2", "--rows", "4", "--cols", "5", "--format", "csv"}).out;
    CHECK(table == "1,1,2,5,14\n1,2,5,14,42\n1,3,9,28,90\n1,4,14,48,165\n");
}

TEST_CASE("golden outputs are byte-identical")
{
    CHECK(run_cli({"g-from-b", "--b", "1,1", "--order", "6"}).out == golden("g_from_b.txt"));
    CHECK(run_cli({"b-from-g", "--g", "pascal", "--order", "8"}).out == golden("b_from_g.txt"));
    CHECK(run_cli({"expand", "--b", "b0,b1", "--n", "6", "--power", "m"}).out == golden("expand.txt"));
}

TEST_CASE("other verbs")
{
    CHECK(run_cli({"check-pseudo", "--g", "pascal"}).out == "true\n");
    CHECK(run_cli({"check-pseudo", "--g", "1,1,0,0"}).out == "false\n");
    CHECK(run_cli({"g-from-a", "--a", "1,1,1", "--order", "6"}).out == "1, 1, 2, 4, 9, 21, 51\n");
    CHECK(run_cli({"a-from-g", "--g", "motzkin", "--order", "5"}).out == "1, 1, 1, 0, 0, 0\n");
    CHECK(run_cli({"g-from-b", "--b", "1", "--order", "3", "--power", "2"}).out == "1, 2, 3, 4\n");
    CHECK(run_cli({"g-from-b", "--b", "1", "--order", "2", "--power", "m"}).out ==
          "x^0 : 1\nx^1 : m\nx^2 : 1/2*m^2 + 1/2*m\n");
    CHECK(run_cli({"gbs", "--r", "3", "--m", "2", "--order", "4"}).out == "1, 2, 7, 30, 143\n");
    CHECK(run_cli({"matrix", "--f", "pascal", "--g", "pascal", "--order", "3"}).out ==
          "1\n1, 1\n1, 2, 1\n1, 3, 3, 1\n");
    CHECK(run_cli({"factorize", "--g", "1,2,4,8,16", "--order", "4"}).out ==
          "sqrt_g : 1, 1, 3/2, 5/2, 35/8\nh : 1, 1, 1/2, 0, -1/8\ns : 0, 1, 0, 0, 0\nb : 2, 0\n");
    const auto numeric = run_cli({"expand", "--b", "1,1", "--n", "6", "--power", "1"}).out;
    CHECK(numeric.find("total : 13") != std::string::npos);
    CHECK(run_cli({"expand", "--a", "1,1,1", "--n", "3", "--power", "1"}).out.find("total : 4") !=
          std::string::npos);

    const auto verified = run_cli({"verify", "--b", "1,1/2,-1", "--order", "8"});
    CHECK(verified.status == 0);
    CHECK(verified.out.find("FAILED") == std::string::npos);
    CHECK(run_cli({"verify", "--g", "motzkin", "--order", "6"}).status == 0);
}

TEST_CASE("serialization formats")
{
    const auto s = RationalSeries::polynomial({Rational(1), Rational(1), Rational(2)}, 2);
    CHECK(format_series(s, OutputFormat::json) == "{\"order\":2,\"coefficients\":[\"1\",\"1\",\"2\"]}\n");
    CHECK(format_series(s, OutputFormat::csv) == "1,1,2\n");
    CHECK(format_expansion({}, 'b', OutputFormat::json) == "[]\n");
    CHECK(format_expansion({}, 'b', OutputFormat::plain).empty());

    const auto j = json::parse(run_cli({"g-from-b", "--b", "1,1/2", "--order", "7", "--format", "json"}).out);
    CHECK(rational_series_from_json(j) == g_from_b(BSequence{Rational(1), Rational(1, 2)}, 7));
    CHECK(rational_series_from_json(j).order() == 7);

    const auto sym = pow_symbolic(g_from_b(BSequence{1, 1}, 6));
    CHECK(mu_series_from_json(json::parse(format_series(sym, OutputFormat::json))) == sym);

    const auto table = expand_b(BSequence{Rational(2), Rational(-1, 3)}, 7);
    CHECK(expansion_from_json(json::parse(format_expansion(table, 'b', OutputFormat::json))) == table);
    const auto symbolic = a_expansion(5);
    CHECK(expansion_from_json(to_json(symbolic)) == symbolic);

    const auto first = json::parse(run_cli({"expand", "--b", "b0,b1", "--n", "5", "--format", "json"}).out);
    CHECK(first[0]["exponents"] == json::parse("[5,0,0]"));
    CHECK(first[0]["coefficient_poly"][1] == "1/5");
}

TEST_CASE("command-line round trip of B-sequences")
{
    Pool pool(606);
    for (int trial = 0; trial < 20; ++trial) {
        const auto b = pool.sequence(1, 5);
        const int order = 2 * static_cast<int>(b.size()) - 1;
        const auto g = run_cli({"g-from-b", "--b", join(b, ","), "--order", std::to_string(order)});
        REQUIRE(g.status == 0);
        std::string g_text = g.out.substr(0, g.out.size() - 1);
        g_text.erase(std::remove(g_text.begin(), g_text.end(), ' '), g_text.end());
        const auto back = run_cli({"b-from-g", "--g", g_text});
        CHECK(back.out == join(b, ", ") + "\n");
    }
}

TEST_CASE("identical invocations give identical bytes")
{
    const std::vector<Args> invocations = {
        {"expand", "--b", "b0,b1,b2", "--n", "9", "--format", "json"},
        {"expand", "--a", "1,2,1/3", "--n", "5", "--format", "csv"},
        {"gpt", "--r", "3", "--rows", "6", "--cols", "6", "--format", "json"},
        {"factorize", "--g", "gbs:2:3", "--order", "9", "--format", "json"},
        {"gbs", "--r", "2", "--m", "m", "--order", "5", "--format", "csv"},
    };
    for (const auto &args : invocations) {
        const auto a = run_cli(args);
        const auto b = run_cli(args);
        CHECK(a.status == 0);
        CHECK(a.out == b.out);
    }
}
