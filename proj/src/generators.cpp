/* vim: set sw=4 sts=4 et : */

#include <bbu/generators.hpp>
#include <bbu/errors.hpp>

#include <string>

using namespace bbu;

auto bbu::parse_graph_kind(std::string_view name) -> std::optional<GraphKind>
{
    if (name == "path") return GraphKind::path;
    if (name == "cycle") return GraphKind::cycle;
    if (name == "complete") return GraphKind::complete;
    if (name == "empty") return GraphKind::empty;
    if (name == "star") return GraphKind::star;
    return std::nullopt;
}

auto bbu::generate(GraphKind kind, int n) -> Graph
{
    switch (kind) {
        case GraphKind::path:     return path_graph(n);
        case GraphKind::cycle:    return cycle_graph(n);
        case GraphKind::complete: return complete_graph(n);
        case GraphKind::empty:    return empty_graph(n);
        case GraphKind::star:     return star_graph(n);
    }
    throw PreconditionError("unknown graph kind");
}

auto bbu::path_graph(int n) -> Graph
{
    if (n < 1)
        throw PreconditionError("path needs at least one vertex, got " + std::to_string(n));
    Graph g(n);
    for (int v = 0 ; v + 1 < n ; ++v)
        g.add_edge(v, v + 1);
    return g;
}

auto bbu::cycle_graph(int n) -> Graph
{
    if (n < 3)
        throw PreconditionError("cycle needs at least three vertices, got " + std::to_string(n));
    Graph g = path_graph(n);
    g.add_edge(0, n - 1);
    return g;
}

auto bbu::complete_graph(int n) -> Graph
{
    if (n < 1)
        throw PreconditionError("complete graph needs at least one vertex, got " + std::to_string(n));
    Graph g(n);
    for (int v = 0 ; v < n ; ++v)
        for (int u = 0 ; u < v ; ++u)
            g.add_edge(u, v);
    return g;
}

auto bbu::empty_graph(int n) -> Graph
{
    if (n < 1)
        throw PreconditionError("empty graph needs at least one vertex, got " + std::to_string(n));
    return Graph(n);
}

auto bbu::star_graph(int leaves) -> Graph
{
    if (leaves < 1)
        throw PreconditionError("star needs at least one leaf, got " + std::to_string(leaves));
    Graph g(leaves + 1);
    for (int v = 0 ; v < leaves ; ++v)
        g.add_edge(v, leaves);
    return g;
}

auto bbu::petersen_graph() -> Graph
{
    Graph g(10);
    for (int i = 0 ; i < 5 ; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(i, i + 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
    }
    return g;
}
