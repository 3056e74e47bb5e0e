/* vim: set sw=4 sts=4 et : */

#include <bbu/errors.hpp>

using namespace bbu;

ParseError::ParseError(const std::string & message, std::size_t offset) :
    std::runtime_error(message + " (at byte " + std::to_string(offset) + ")"),
    _offset(offset)
{
}

auto ParseError::offset() const -> std::size_t
{
    return _offset;
}
