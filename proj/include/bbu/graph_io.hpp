/* vim: set sw=4 sts=4 et : */

#ifndef BBU_GRAPH_IO_HPP
#define BBU_GRAPH_IO_HPP

#include <bbu/graph.hpp>

#include <string>
#include <string_view>

namespace bbu
{
    /// Decodes one graph6 string. An optional ">>graph6<<" prefix is accepted;
    /// nothing else may follow the encoded bytes. Throws ParseError carrying the
    /// offending byte offset.
    auto parse_graph6(std::string_view text) -> Graph;

    auto serialize_graph6(const Graph & g) -> std::string;

    /// Human-readable form: vertex count on the first line, then one "u v"
    /// pair per line. Blank lines and '#' comments are ignored.
    auto parse_adjacency_list(std::string_view text) -> Graph;

    auto serialize_adjacency_list(const Graph & g) -> std::string;

    /// graph6 if the text looks like a single graph6 token, otherwise the
    /// adjacency list format.
    auto parse_graph_text(std::string_view text) -> Graph;
}

#endif
