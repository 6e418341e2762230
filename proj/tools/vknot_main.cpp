#include <iostream>

#include "vknots/cli.hpp"

int main(int argc, char** argv) {
    auto result = vknots::cli::run({argv + 1, argv + argc});
    if (!result.output.empty()) {
        std::cout << result.output;
        if (result.output.back() != '\n') std::cout << '\n';
    }
    return result.exit_code;
}
