#include <iostream>
#include <string>
#include <vector>

#include "qmcut/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return qmcut::cli::run(args, std::cout, std::cerr);
}
