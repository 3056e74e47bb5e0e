/* vim: set sw=4 sts=4 et : */

#ifndef BBU_GRAPH_HPP
#define BBU_GRAPH_HPP

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace bbu
{
    /// Simple undirected graph on vertices 0..size()-1. Keeps both an
    /// adjacency matrix and sorted neighbour lists.
    class Graph
    {
        private:
            int _size = 0;
            int _edges = 0;
            std::vector<std::uint8_t> _matrix;
            std::vector<std::vector<int>> _neighbours;

        public:
            Graph() = default;
            explicit Graph(int size);

            auto size() const -> int { return _size; }
            auto edge_count() const -> int { return _edges; }

            /// Adding an existing edge is a no-op. Self-loops and out of range
            /// endpoints throw PreconditionError.
            auto add_edge(int u, int v) -> void;

            auto adjacent(int u, int v) const -> bool
            {
                return _matrix[static_cast<std::size_t>(u) * _size + v];
            }

            auto neighbours(int v) const -> std::span<const int> { return _neighbours[v]; }
            auto degree(int v) const -> int { return static_cast<int>(_neighbours[v].size()); }

            /// Edges (u, v) with u < v, ordered by v then u.
            auto edges() const -> std::vector<std::pair<int, int>>;

            /// Subgraph induced by the given vertices, relabelled in the given order.
            auto induced(std::span<const int> vertices) const -> Graph;

            /// Graph with vertex order[i] of this graph becoming vertex i.
            auto relabelled(std::span<const int> order) const -> Graph;

            friend auto operator== (const Graph &, const Graph &) -> bool = default;
    };
}

#endif
