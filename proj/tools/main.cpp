#include <iostream>
#include <string>
#include <vector>

#include "kstar/cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return kstar::cli::run(args, std::cout, std::cerr);
}
