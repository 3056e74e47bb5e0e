/* vim: set sw=4 sts=4 et : */

// Brute-force helpers shared by the unit tests. Nothing here calls the
// library's canonical labelling or shortest-path code.

#ifndef BBU_TESTS_ORACLES_HPP
#define BBU_TESTS_ORACLES_HPP

#include <bbu/graph.hpp>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

namespace oracles
{
    /// Edge (i, j), i < j, of an n-vertex graph, in graph6 column order.
    inline auto edge_index(int i, int j) -> int
    {
        if (i > j)
            std::swap(i, j);
        return j * (j - 1) / 2 + i;
    }

    inline auto to_mask(const bbu::Graph & g) -> std::uint64_t
    {
        std::uint64_t mask = 0;
        for (auto & [u, v] : g.edges())
            mask |= std::uint64_t{1} << edge_index(u, v);
        return mask;
    }

    inline auto from_mask(int n, std::uint64_t mask) -> bbu::Graph
    {
        bbu::Graph g(n);
        for (int j = 1 ; j < n ; ++j)
            for (int i = 0 ; i < j ; ++i)
                if (mask & (std::uint64_t{1} << edge_index(i, j)))
                    g.add_edge(i, j);
        return g;
    }

    /// All permutations of 0..n-1, each as an edge-index map.
    inline auto edge_permutations(int n) -> std::vector<std::vector<int>>
    {
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::vector<std::vector<int>> result;
        do {
            std::vector<int> map(n * (n - 1) / 2);
            for (int j = 1 ; j < n ; ++j)
                for (int i = 0 ; i < j ; ++i)
                    map[edge_index(i, j)] = edge_index(perm[i], perm[j]);
            result.push_back(std::move(map));
        } while (std::next_permutation(perm.begin(), perm.end()));
        return result;
    }

    /// Minimum edge mask over all relabellings.
    inline auto brute_canonical(std::uint64_t mask, const std::vector<std::vector<int>> & perms) -> std::uint64_t
    {
        std::uint64_t best = ~std::uint64_t{0};
        for (auto & map : perms) {
            std::uint64_t image = 0;
            for (std::size_t e = 0 ; e < map.size() ; ++e)
                if (mask & (std::uint64_t{1} << e))
                    image |= std::uint64_t{1} << map[e];
            best = std::min(best, image);
        }
        return best;
    }

    inline auto brute_isomorphic(const bbu::Graph & g, const bbu::Graph & h) -> bool
    {
        if (g.size() != h.size() || g.edge_count() != h.edge_count())
            return false;
        std::vector<int> perm(g.size());
        std::iota(perm.begin(), perm.end(), 0);
        do {
            bool ok = true;
            for (auto & [u, v] : g.edges())
                if (! h.adjacent(perm[u], perm[v])) {
                    ok = false;
                    break;
                }
            if (ok)
                return true;
        } while (std::next_permutation(perm.begin(), perm.end()));
        return false;
    }

    inline auto dfs_connected_without(const bbu::Graph & g, int removed) -> bool
    {
        int n = g.size();
        int start = removed == 0 ? 1 : 0;
        if (n - (removed >= 0 ? 1 : 0) <= 0)
            return false;
        std::vector<bool> seen(n, false);
        std::vector<int> stack{ start };
        seen[start] = true;
        int count = 1;
        while (! stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w = 0 ; w < n ; ++w)
                if (w != removed && ! seen[w] && g.adjacent(v, w)) {
                    seen[w] = true;
                    ++count;
                    stack.push_back(w);
                }
        }
        return count == n - (removed >= 0 ? 1 : 0);
    }

    inline auto random_relabel(const bbu::Graph & g, std::mt19937_64 & rng) -> bbu::Graph
    {
        std::vector<int> perm(g.size());
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        return g.relabelled(perm);
    }

    inline auto random_graph(int n, double p, std::mt19937_64 & rng) -> bbu::Graph
    {
        std::bernoulli_distribution edge(p);
        bbu::Graph g(n);
        for (int j = 1 ; j < n ; ++j)
            for (int i = 0 ; i < j ; ++i)
                if (edge(rng))
                    g.add_edge(i, j);
        return g;
    }
}

#endif
