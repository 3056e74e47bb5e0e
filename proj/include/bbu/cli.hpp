/* vim: set sw=4 sts=4 et : */

#ifndef BBU_CLI_HPP
#define BBU_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace bbu
{
    namespace exit_code
    {
        constexpr int ok = 0;
        constexpr int internal = 1;
        constexpr int usage = 2;
        constexpr int malformed_input = 3;
        constexpr int not_uniform = 10;
    }

    /// Runs one command line; args[0] is the program name.
    auto run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int;
}

#endif
