#include <iostream>
#include <vector>

#include "homsum/cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    const homsum::cli::CommandResult result = homsum::cli::run(args);
    if (!result.output.empty())
        std::cout << result.output;
    if (!result.diagnostics.empty())
        std::cerr << result.diagnostics;
    return result.exit_code;
}
