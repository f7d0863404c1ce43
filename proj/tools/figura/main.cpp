#include <iostream>
#include <string>
#include <vector>

#include "figura/cli/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    const auto result = figura::cli::run(args);
    std::cout << result.output;
    std::cerr << result.diagnostics;
    return result.exit_code;
}
