/* vim: set sw=4 sts=4 et : */

#ifndef BBU_ERRORS_HPP
#define BBU_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bbu
{
    /// Malformed textual input (graph6, adjacency lists, JSON specs).
    class ParseError : public std::runtime_error
    {
        private:
            std::size_t _offset;

        public:
            ParseError(const std::string & message, std::size_t offset);

            auto offset() const -> std::size_t;
    };

    /// An operation was called outside its domain (bad sizes, disconnected
    /// base, vertex not in the given part, and so on).
    class PreconditionError : public std::invalid_argument
    {
        public:
            using std::invalid_argument::invalid_argument;
    };
}

#endif
