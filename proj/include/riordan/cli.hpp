#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "riordan/io.hpp"

namespace riordan::cli {

class usage_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Verb {
    g_from_b,
    g_from_a,
    b_from_g,
    a_from_g,
    expand,
    check_pseudo,
    factorize,
    gbs,
    gpt,
    matrix,
    verify,
};

/// A coefficient argument: an explicit list, a named builtin, or symbolic letters (b0,b1,...).
struct CoefficientInput {
    std::vector<Rational> values;
    std::string name;
    int symbolic_letters = 0;

    bool given() const { return !values.empty() || !name.empty() || symbolic_letters > 0; }
    bool symbolic() const { return symbolic_letters > 0; }
};

struct Command {
    Verb verb = Verb::g_from_b;
    int order = 10;
    bool order_given = false;
    /// nullopt means the symbolic power m.
    std::optional<int> power;
    bool power_given = false;
    CoefficientInput a, b, f, g;
    int n = 1;
    int r = 1;
    /// gbs exponent; nullopt means symbolic.
    std::optional<int> m = 1;
    int rows = 4;
    int cols = 5;
    OutputFormat format = OutputFormat::plain;
};

struct RunResult {
    int status = 0;
    std::string out;
    std::string err;
};

/// argv without the program name. Throws usage_error.
Command parse_args(const std::vector<std::string> &args);

/// Dispatches into the library. Exit status 0 on success, 2 on a mathematical error.
RunResult run(const Command &cmd);

/// parse_args + run; usage errors map to status 1.
RunResult run_cli(const std::vector<std::string> &args);

} // namespace riordan::cli
