/* vim: set sw=4 sts=4 et : */

#include <bbu/cli.hpp>

#include <iostream>

auto main(int argc, char * argv[]) -> int
{
    return bbu::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
