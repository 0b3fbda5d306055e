#include <iostream>
#include <string>
#include <vector>

#include "venergy_cli/commands.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return venergy::cli::run(std::move(args), std::cout, std::cerr);
}
