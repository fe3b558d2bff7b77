#include <iostream>
#include <string>
#include <vector>

#include "riordan/cli.hpp"

int main(int argc, char **argv)
{
    const std::vector<std::string> args(argv + 1, argv + argc);
    const auto result = riordan::cli::run_cli(args);
    std::cout << result.out;
    std::cerr << result.err;
    return result.status;
}
