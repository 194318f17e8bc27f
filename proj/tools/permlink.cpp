#include <iostream>
#include <string>
#include <vector>

#include "permlink/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return permlink::run_cli(args, std::cout, std::cerr);
}
