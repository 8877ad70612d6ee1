#include <iostream>
#include <vector>

#include "excseq/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return excseq::run_cli(args, std::cout, std::cerr);
}
