/* vim: set sw=4 sts=4 et : */

#include <bbu/enumerate.hpp>
#include <bbu/canonical.hpp>
#include <bbu/errors.hpp>
#include <bbu/graph_io.hpp>

#include <map>
#include <string>
#include <utility>

using namespace bbu;

namespace
{
    using ClassMap = std::map<std::pair<int, std::string>, Graph>;

    auto insert_class(ClassMap & classes, const Graph & g) -> void
    {
        auto canon = canonical_form(g);
        auto key = std::make_pair(canon.edge_count(), serialize_graph6(canon));
        classes.try_emplace(std::move(key), std::move(canon));
    }

    auto to_vector(ClassMap && classes) -> std::vector<Graph>
    {
        std::vector<Graph> result;
        result.reserve(classes.size());
        for (auto & [_, g] : classes)
            result.push_back(std::move(g));
        return result;
    }

    auto extended(const Graph & g, unsigned attach_mask) -> Graph
    {
        Graph result(g.size() + 1);
        for (auto & [u, v] : g.edges())
            result.add_edge(u, v);
        for (int u = 0 ; u < g.size() ; ++u)
            if (attach_mask & (1u << u))
                result.add_edge(u, g.size());
        return result;
    }
}

auto bbu::enumerate_graphs(int n) -> std::vector<Graph>
{
    if (n < 1 || n > max_enumerated_graph_order)
        throw PreconditionError("enumerate_graphs supports 1 <= n <= " + std::to_string(max_enumerated_graph_order)
                + ", got " + std::to_string(n));

    // every graph on k + 1 vertices is some graph on k vertices plus a vertex
    std::vector<Graph> level{ Graph(1) };
    for (int k = 1 ; k < n ; ++k) {
        ClassMap next;
        for (auto & g : level)
            for (unsigned mask = 0 ; mask < (1u << k) ; ++mask)
                insert_class(next, extended(g, mask));
        level = to_vector(std::move(next));
    }
    return level;
}

auto bbu::enumerate_trees(int n) -> std::vector<Graph>
{
    if (n < 1 || n > max_enumerated_tree_order)
        throw PreconditionError("enumerate_trees supports 1 <= n <= " + std::to_string(max_enumerated_tree_order)
                + ", got " + std::to_string(n));

    // every tree on k + 1 vertices is a tree on k vertices plus a leaf
    std::vector<Graph> level{ Graph(1) };
    for (int k = 1 ; k < n ; ++k) {
        ClassMap next;
        for (auto & t : level)
            for (int v = 0 ; v < k ; ++v)
                insert_class(next, extended(t, 1u << v));
        level = to_vector(std::move(next));
    }
    return level;
}
