/* vim: set sw=4 sts=4 et : */

#include <bbu/canonical.hpp>
#include <bbu/errors.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>

using namespace bbu;

namespace
{
    /// Iterated degree refinement. Colours are named by the sorted order of
    /// their signatures, so equal graphs up to relabelling get equal names.
    auto refine_colours(const Graph & g) -> std::vector<int>
    {
        int n = g.size();
        std::vector<int> colour(n);
        for (int v = 0 ; v < n ; ++v)
            colour[v] = g.degree(v);

        int classes = -1;
        while (true) {
            std::map<std::vector<int>, int> signatures;
            std::vector<std::vector<int>> sig(n);
            for (int v = 0 ; v < n ; ++v) {
                sig[v].push_back(colour[v]);
                std::vector<int> around;
                for (int w : g.neighbours(v))
                    around.push_back(colour[w]);
                std::sort(around.begin(), around.end());
                sig[v].insert(sig[v].end(), around.begin(), around.end());
                signatures.emplace(sig[v], 0);
            }
            int next = 0;
            for (auto & [_, c] : signatures)
                c = next++;
            for (int v = 0 ; v < n ; ++v)
                colour[v] = signatures[sig[v]];
            if (next == classes)
                break;
            classes = next;
        }
        return colour;
    }

    struct CanonicalSearch
    {
        const Graph & g;
        int n;
        std::vector<int> position_cell_start;
        std::vector<std::vector<int>> cell_members;
        std::vector<int> cell_of_position;
        std::vector<std::uint8_t> twins;

        std::vector<int> order;
        std::vector<std::uint64_t> columns;
        std::vector<bool> used;

        std::vector<int> best_order;
        std::vector<std::uint64_t> best_columns;
        bool have_best = false;

        explicit CanonicalSearch(const Graph & graph) :
            g(graph),
            n(graph.size()),
            order(n),
            columns(n),
            used(n, false)
        {
            auto colour = refine_colours(g);
            int classes = n == 0 ? 0 : *std::max_element(colour.begin(), colour.end()) + 1;
            cell_members.resize(classes);
            for (int v = 0 ; v < n ; ++v)
                cell_members[colour[v]].push_back(v);
            for (int c = 0 ; c < classes ; ++c)
                for (std::size_t k = 0 ; k < cell_members[c].size() ; ++k)
                    cell_of_position.push_back(c);

            // transposing twins is an automorphism
            twins.assign(static_cast<std::size_t>(n) * n, 0);
            for (int u = 0 ; u < n ; ++u)
                for (int w = u + 1 ; w < n ; ++w) {
                    bool same = true;
                    for (int x = 0 ; x < n && same ; ++x)
                        if (x != u && x != w && g.adjacent(u, x) != g.adjacent(w, x))
                            same = false;
                    twins[u * n + w] = twins[w * n + u] = same;
                }
        }

        auto column_for(int p, int v) const -> std::uint64_t
        {
            std::uint64_t col = 0;
            for (int i = 0 ; i < p ; ++i)
                if (g.adjacent(order[i], v))
                    col |= std::uint64_t{1} << (63 - i);
            return col;
        }

        // lexicographic comparison of columns[0..p] with the best code so far
        auto compare_prefix(int p) const -> int
        {
            for (int i = 0 ; i <= p ; ++i)
                if (columns[i] != best_columns[i])
                    return columns[i] < best_columns[i] ? -1 : 1;
            return 0;
        }

        auto search(int p) -> void
        {
            if (p == n) {
                if (! have_best || compare_prefix(n - 1) > 0) {
                    best_order = order;
                    best_columns = columns;
                    have_best = true;
                }
                return;
            }

            std::vector<int> candidates;
            std::uint64_t max_col = 0;
            for (int v : cell_members[cell_of_position[p]]) {
                if (used[v])
                    continue;
                auto col = column_for(p, v);
                if (candidates.empty() || col > max_col) {
                    max_col = col;
                    candidates.clear();
                }
                if (col == max_col)
                    candidates.push_back(v);
            }

            columns[p] = max_col;
            if (have_best && compare_prefix(p) < 0)
                return;

            std::vector<int> tried;
            for (int v : candidates) {
                if (std::any_of(tried.begin(), tried.end(), [&] (int t) { return twins[t * n + v]; }))
                    continue;
                tried.push_back(v);

                order[p] = v;
                used[v] = true;
                search(p + 1);
                used[v] = false;
                columns[p] = max_col;
            }
        }
    };
}

auto bbu::canonical_labelling(const Graph & g) -> std::vector<int>
{
    if (g.size() > max_canonical_order)
        throw PreconditionError("canonical labelling supports at most " + std::to_string(max_canonical_order)
                + " vertices, got " + std::to_string(g.size()));
    CanonicalSearch search(g);
    search.search(0);
    return search.best_order;
}

auto bbu::canonical_form(const Graph & g) -> Graph
{
    return g.relabelled(canonical_labelling(g));
}

auto bbu::is_isomorphic(const Graph & g, const Graph & h) -> bool
{
    if (g.size() != h.size() || g.edge_count() != h.edge_count())
        return false;
    return canonical_form(g) == canonical_form(h);
}
