#include <iostream>

#include "qps/cli.hpp"

int main(int argc, char** argv) {
    return qps::cli::run_cli(argc, argv, std::cout, std::cerr);
}
