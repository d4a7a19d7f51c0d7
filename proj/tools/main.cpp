#include "cli.hpp"

#include <iostream>

int main(int argc, char* argv[])
{
    std::vector<std::string> args(argv, argv + argc);
    return repdec::cli::run(args, std::cout, std::cerr);
}
