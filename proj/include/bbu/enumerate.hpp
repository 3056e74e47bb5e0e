/* vim: set sw=4 sts=4 et : */

#ifndef BBU_ENUMERATE_HPP
#define BBU_ENUMERATE_HPP

#include <bbu/graph.hpp>

#include <vector>

namespace bbu
{
    constexpr int max_enumerated_graph_order = 7;
    constexpr int max_enumerated_tree_order = 10;

    /// One canonical representative per isomorphism class of graphs on n
    /// vertices, sorted by edge count and then graph6 code.
    auto enumerate_graphs(int n) -> std::vector<Graph>;

    /// Same for trees on n vertices.
    auto enumerate_trees(int n) -> std::vector<Graph>;
}

#endif
