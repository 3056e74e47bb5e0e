/* vim: set sw=4 sts=4 et : */

#include <bbu/properties.hpp>
#include <bbu/errors.hpp>

#include <algorithm>
#include <functional>
#include <queue>

using namespace bbu;

auto bbu::distances_from(const Graph & g, int source) -> std::vector<int>
{
    std::vector<int> dist(g.size(), -1);
    std::queue<int> queue;
    dist[source] = 0;
    queue.push(source);
    while (! queue.empty()) {
        int v = queue.front();
        queue.pop();
        for (int w : g.neighbours(v))
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                queue.push(w);
            }
    }
    return dist;
}

auto bbu::is_connected(const Graph & g) -> bool
{
    if (g.size() == 0)
        return false;
    auto dist = distances_from(g, 0);
    return std::none_of(dist.begin(), dist.end(), [] (int d) { return d < 0; });
}

auto bbu::diameter(const Graph & g) -> int
{
    if (! is_connected(g))
        throw PreconditionError("diameter of a disconnected graph is undefined");
    int result = 0;
    for (int v = 0 ; v < g.size() ; ++v) {
        auto dist = distances_from(g, v);
        result = std::max(result, *std::max_element(dist.begin(), dist.end()));
    }
    return result;
}

auto bbu::cut_vertices(const Graph & g) -> std::vector<int>
{
    int n = g.size();
    std::vector<int> discovered(n, -1), low(n, 0);
    std::vector<bool> is_cut(n, false);
    int time = 0;

    std::function<void (int, int)> visit = [&] (int v, int parent) {
        discovered[v] = low[v] = time++;
        int children = 0;
        for (int w : g.neighbours(v)) {
            if (w == parent)
                continue;
            if (discovered[w] >= 0)
                low[v] = std::min(low[v], discovered[w]);
            else {
                ++children;
                visit(w, v);
                low[v] = std::min(low[v], low[w]);
                if (parent >= 0 && low[w] >= discovered[v])
                    is_cut[v] = true;
            }
        }
        if (parent < 0 && children > 1)
            is_cut[v] = true;
    };

    for (int v = 0 ; v < n ; ++v)
        if (discovered[v] < 0)
            visit(v, -1);

    std::vector<int> result;
    for (int v = 0 ; v < n ; ++v)
        if (is_cut[v])
            result.push_back(v);
    return result;
}

auto bbu::is_two_connected(const Graph & g) -> bool
{
    return g.size() >= 3 && is_connected(g) && cut_vertices(g).empty();
}

auto bbu::is_tree(const Graph & g) -> bool
{
    return is_connected(g) && g.edge_count() == g.size() - 1;
}
