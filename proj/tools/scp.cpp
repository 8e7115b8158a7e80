#include <iostream>

#include "scp/cli.hpp"

int main(int argc, char** argv) {
    std::ios::sync_with_stdio(false);
    return scp::cli::main_entry(argc, argv, std::cin, std::cout, std::cerr);
}
