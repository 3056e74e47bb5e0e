/* vim: set sw=4 sts=4 et : */

#ifndef BBU_PROPERTIES_HPP
#define BBU_PROPERTIES_HPP

#include <bbu/graph.hpp>

#include <vector>

namespace bbu
{
    /// BFS distances from source; -1 for unreachable vertices.
    auto distances_from(const Graph & g, int source) -> std::vector<int>;

    /// A graph with no vertices is not connected; a single vertex is.
    auto is_connected(const Graph & g) -> bool;

    /// Throws PreconditionError on a disconnected graph.
    auto diameter(const Graph & g) -> int;

    auto cut_vertices(const Graph & g) -> std::vector<int>;

    /// Connected, at least three vertices, and no cut vertex.
    auto is_two_connected(const Graph & g) -> bool;

    auto is_tree(const Graph & g) -> bool;
}

#endif
