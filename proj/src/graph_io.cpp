/* vim: set sw=4 sts=4 et : */

#include <bbu/graph_io.hpp>
#include <bbu/errors.hpp>

#include <charconv>
#include <cstdint>
#include <optional>
#include <sstream>

using namespace bbu;

namespace
{
    constexpr int graph6_bias = 63;
    constexpr int graph6_max = 126;

    auto trim(std::string_view s) -> std::string_view
    {
        auto is_space = [] (char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
        while (! s.empty() && is_space(s.front()))
            s.remove_prefix(1);
        while (! s.empty() && is_space(s.back()))
            s.remove_suffix(1);
        return s;
    }

    auto encode_size(std::uint64_t n, std::string & out) -> void
    {
        if (n <= 62)
            out.push_back(static_cast<char>(n + graph6_bias));
        else if (n <= 258047) {
            out.push_back(static_cast<char>(graph6_max));
            for (int shift = 12 ; shift >= 0 ; shift -= 6)
                out.push_back(static_cast<char>(((n >> shift) & 63) + graph6_bias));
        }
        else {
            out.push_back(static_cast<char>(graph6_max));
            out.push_back(static_cast<char>(graph6_max));
            for (int shift = 30 ; shift >= 0 ; shift -= 6)
                out.push_back(static_cast<char>(((n >> shift) & 63) + graph6_bias));
        }
    }
}

auto bbu::parse_graph6(std::string_view text) -> Graph
{
    constexpr std::string_view header = ">>graph6<<";
    std::size_t pos = 0;
    if (text.substr(0, header.size()) == header)
        pos = header.size();

    auto byte_at = [&] (std::size_t i, const char * what) -> int {
        if (i >= text.size())
            throw ParseError(std::string("graph6 input truncated while reading ") + what, i);
        int c = static_cast<unsigned char>(text[i]);
        if (c < graph6_bias || c > graph6_max)
            throw ParseError("graph6 byte " + std::to_string(c) + " out of range 63..126", i);
        return c - graph6_bias;
    };

    if (pos >= text.size())
        throw ParseError("empty graph6 input", pos);

    std::uint64_t n = 0;
    int first = byte_at(pos, "header");
    if (first < 63) {
        n = first;
        pos += 1;
    }
    else {
        int second = byte_at(pos + 1, "header");
        int digits = 3;
        std::size_t start = pos + 1;
        if (second == 63) {
            digits = 6;
            start = pos + 2;
        }
        for (int i = 0 ; i < digits ; ++i) {
            n = (n << 6) | static_cast<std::uint64_t>(byte_at(start + i, "header"));
        }
        if ((digits == 3 && n <= 62) || (digits == 6 && n <= 258047))
            throw ParseError("graph6 size header is not in shortest form", pos);
        pos = start + digits;
    }

    if (n > 100000)
        throw ParseError("graph6 vertex count " + std::to_string(n) + " too large", 0);

    Graph g(static_cast<int>(n));
    std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
    std::uint64_t bytes = (bits + 5) / 6;
    std::uint64_t bit = 0;
    int current = 0;
    for (int j = 1 ; j < g.size() ; ++j)
        for (int i = 0 ; i < j ; ++i, ++bit) {
            if (bit % 6 == 0)
                current = byte_at(pos + bit / 6, "edge data");
            if ((current >> (5 - bit % 6)) & 1)
                g.add_edge(i, j);
        }
    pos += bytes;
    if (pos != text.size())
        throw ParseError("trailing data after graph6 string", pos);
    return g;
}

auto bbu::serialize_graph6(const Graph & g) -> std::string
{
    std::string out;
    encode_size(static_cast<std::uint64_t>(g.size()), out);
    int value = 0, filled = 0;
    for (int j = 1 ; j < g.size() ; ++j)
        for (int i = 0 ; i < j ; ++i) {
            value = (value << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(value + graph6_bias));
                value = 0;
                filled = 0;
            }
        }
    if (filled > 0)
        out.push_back(static_cast<char>((value << (6 - filled)) + graph6_bias));
    return out;
}

auto bbu::parse_adjacency_list(std::string_view text) -> Graph
{
    std::optional<Graph> g;
    std::size_t line_start = 0;
    while (line_start <= text.size()) {
        auto line_end = text.find('\n', line_start);
        if (line_end == std::string_view::npos)
            line_end = text.size();
        auto line = text.substr(line_start, line_end - line_start);
        if (auto hash = line.find('#') ; hash != std::string_view::npos)
            line = line.substr(0, hash);

        std::vector<long> numbers;
        std::size_t i = 0;
        while (i < line.size()) {
            if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
                ++i;
                continue;
            }
            long value = 0;
            auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), value);
            if (ec != std::errc() || value < 0)
                throw ParseError("expected a non-negative integer", line_start + i);
            i = static_cast<std::size_t>(ptr - line.data());
            if (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r')
                throw ParseError("unexpected character in adjacency list", line_start + i);
            numbers.push_back(value);
        }

        if (! numbers.empty()) {
            if (! g) {
                if (numbers.size() != 1)
                    throw ParseError("first line must hold only the vertex count", line_start);
                if (numbers[0] > 100000)
                    throw ParseError("vertex count too large", line_start);
                g.emplace(static_cast<int>(numbers[0]));
            }
            else {
                if (numbers.size() != 2)
                    throw ParseError("edge lines must hold exactly two vertices", line_start);
                if (numbers[0] >= g->size() || numbers[1] >= g->size())
                    throw ParseError("edge endpoint out of range", line_start);
                if (numbers[0] == numbers[1])
                    throw ParseError("self-loop in adjacency list", line_start);
                if (g->adjacent(static_cast<int>(numbers[0]), static_cast<int>(numbers[1])))
                    throw ParseError("repeated edge in adjacency list", line_start);
                g->add_edge(static_cast<int>(numbers[0]), static_cast<int>(numbers[1]));
            }
        }
        line_start = line_end + 1;
    }

    if (! g)
        throw ParseError("adjacency list has no vertex count", 0);
    return *g;
}

auto bbu::serialize_adjacency_list(const Graph & g) -> std::string
{
    std::ostringstream out;
    out << g.size() << '\n';
    for (auto & [u, v] : g.edges())
        out << u << ' ' << v << '\n';
    return out.str();
}

auto bbu::parse_graph_text(std::string_view text) -> Graph
{
    auto trimmed = trim(text);
    bool single_token = trimmed.find_first_of(" \t\r\n") == std::string_view::npos;
    bool all_digits = ! trimmed.empty() && trimmed.find_first_not_of("0123456789") == std::string_view::npos;
    if (single_token && ! all_digits)
        return parse_graph6(trimmed);
    return parse_adjacency_list(text);
}
