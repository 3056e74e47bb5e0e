/* vim: set sw=4 sts=4 et : */

#include <bbu/graph.hpp>
#include <bbu/errors.hpp>

#include <algorithm>
#include <string>

using namespace bbu;

Graph::Graph(int size) :
    _size(size),
    _matrix(static_cast<std::size_t>(size) * size, 0),
    _neighbours(size)
{
    if (size < 0)
        throw PreconditionError("negative vertex count");
}

auto Graph::add_edge(int u, int v) -> void
{
    if (u < 0 || v < 0 || u >= _size || v >= _size)
        throw PreconditionError("edge (" + std::to_string(u) + ", " + std::to_string(v) + ") out of range for "
                + std::to_string(_size) + " vertices");
    if (u == v)
        throw PreconditionError("self-loop at vertex " + std::to_string(u));
    if (adjacent(u, v))
        return;

    _matrix[static_cast<std::size_t>(u) * _size + v] = 1;
    _matrix[static_cast<std::size_t>(v) * _size + u] = 1;
    _neighbours[u].insert(std::upper_bound(_neighbours[u].begin(), _neighbours[u].end(), v), v);
    _neighbours[v].insert(std::upper_bound(_neighbours[v].begin(), _neighbours[v].end(), u), u);
    ++_edges;
}

auto Graph::edges() const -> std::vector<std::pair<int, int>>
{
    std::vector<std::pair<int, int>> result;
    result.reserve(_edges);
    for (int v = 1 ; v < _size ; ++v)
        for (int u = 0 ; u < v ; ++u)
            if (adjacent(u, v))
                result.emplace_back(u, v);
    return result;
}

auto Graph::induced(std::span<const int> vertices) const -> Graph
{
    Graph result(static_cast<int>(vertices.size()));
    for (std::size_t i = 0 ; i < vertices.size() ; ++i)
        for (std::size_t j = i + 1 ; j < vertices.size() ; ++j)
            if (adjacent(vertices[i], vertices[j]))
                result.add_edge(static_cast<int>(i), static_cast<int>(j));
    return result;
}

auto Graph::relabelled(std::span<const int> order) const -> Graph
{
    if (static_cast<int>(order.size()) != _size)
        throw PreconditionError("relabelling has wrong length");
    return induced(order);
}
