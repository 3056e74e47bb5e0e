/* vim: set sw=4 sts=4 et : */

#include <doctest.h>

#include <bbu/blowup.hpp>
#include <bbu/canonical.hpp>
#include <bbu/enumerate.hpp>
#include <bbu/errors.hpp>
#include <bbu/generators.hpp>
#include <bbu/properties.hpp>

#include "oracles.hpp"

#include <functional>

using namespace bbu;

namespace
{
    auto I(int m) { return PartDescriptor::independent(m); }
    auto K(int m) { return PartDescriptor::clique(m); }
    auto X(Graph g) { return PartDescriptor::from_graph(std::move(g)); }

    auto spec(Graph base, std::vector<PartDescriptor> parts) -> BlowupSpec
    {
        return BlowupSpec{ std::move(base), std::move(parts) };
    }

    /// Random blow-ups of connected bases with parts drawn from every graph
    /// on at most max_part vertices.
    auto random_corpus(int count, int max_base, int max_part, bool trees_only, std::uint64_t seed) -> std::vector<BlowupSpec>
    {
        std::mt19937_64 rng(seed);
        std::vector<Graph> bases, part_graphs;
        for (int n = 2 ; n <= max_base ; ++n)
            for (auto & g : trees_only ? enumerate_trees(n) : enumerate_graphs(n))
                if (is_connected(g))
                    bases.push_back(g);
        for (int m = 1 ; m <= max_part ; ++m)
            for (auto & g : enumerate_graphs(m))
                part_graphs.push_back(g);

        std::vector<BlowupSpec> result;
        for (int k = 0 ; k < count ; ++k) {
            BlowupSpec s;
            s.base = bases[rng() % bases.size()];
            for (int v = 0 ; v < s.base.size() ; ++v)
                s.parts.push_back(X(part_graphs[rng() % part_graphs.size()]));
            result.push_back(std::move(s));
        }
        return result;
    }

    /// Every shortest u,v-path, found by walking down BFS layers.
    auto shortest_paths(const Graph & g, int u, int v) -> std::vector<std::vector<int>>
    {
        auto from_v = distances_from(g, v);
        std::vector<std::vector<int>> result;
        std::vector<int> current{ u };
        std::function<void (int)> walk = [&] (int x) {
            if (x == v) {
                result.push_back(current);
                return;
            }
            for (int w : g.neighbours(x))
                if (from_v[w] == from_v[x] - 1) {
                    current.push_back(w);
                    walk(w);
                    current.pop_back();
                }
        };
        walk(u);
        return result;
    }
}

TEST_CASE("blow-up examples")
{
    auto k6 = blow_up(spec(path_graph(2), { K(3), K(3) }));
    CHECK(k6.graph().edge_count() == 15);
    CHECK(is_isomorphic(k6.graph(), complete_graph(6)));

    auto c4 = blow_up(spec(path_graph(3), { K(1), I(2), K(1) }));
    CHECK(c4.graph().size() == 4);
    CHECK(is_isomorphic(c4.graph(), cycle_graph(4)));
    CHECK(oracles::brute_isomorphic(c4.graph(), cycle_graph(4)));

    auto g = blow_up(spec(path_graph(3), { I(2), I(3), I(1) }));
    CHECK(g.graph().size() == 6);
    CHECK(g.graph().edge_count() == 2 * 3 + 3 * 1);
    CHECK(g.part_vertices(1) == std::vector<int>{ 2, 3, 4 });
    CHECK(g.part_of() == std::vector<int>{ 0, 0, 1, 1, 1, 2 });
}

TEST_CASE("blow-up rejects bad specs")
{
    CHECK_THROWS_AS(blow_up(spec(Graph(1), { K(2) })), PreconditionError);
    CHECK_THROWS_AS(blow_up(spec(Graph(2), { K(2), K(2) })), PreconditionError);
    CHECK_THROWS_AS(blow_up(spec(path_graph(3), { K(2), K(2) })), PreconditionError);
    CHECK_THROWS_AS(I(0), PreconditionError);
    CHECK_THROWS_AS(K(-1), PreconditionError);
    CHECK_THROWS_AS(X(Graph(0)), PreconditionError);
}

TEST_CASE("blown edge set follows the definition and parts stay within distance two")
{
    for (auto & s : random_corpus(120, 5, 3, false, 11)) {
        auto bg = blow_up(s);
        auto & g = bg.graph();
        CHECK(g.size() == s.total_vertices());
        for (int i = 0 ; i < bg.part_count() ; ++i)
            for (std::size_t a = 0 ; a < bg.part_vertices(i).size() ; ++a)
                CHECK(bg.part_of(bg.part_vertices(i)[a]) == i);

        // position of each vertex inside its part
        std::vector<int> index(g.size());
        for (int i = 0 ; i < bg.part_count() ; ++i)
            for (std::size_t a = 0 ; a < bg.part_vertices(i).size() ; ++a)
                index[bg.part_vertices(i)[a]] = static_cast<int>(a);

        for (int u = 0 ; u < g.size() ; ++u) {
            auto dist = distances_from(g, u);
            for (int v = u + 1 ; v < g.size() ; ++v) {
                int pu = bg.part_of(u), pv = bg.part_of(v);
                bool expected = pu == pv ? s.parts[pu].graph().adjacent(index[u], index[v]) : s.base.adjacent(pu, pv);
                CHECK(g.adjacent(u, v) == expected);
                if (pu == pv)
                    CHECK(dist[v] <= 2);
            }
        }
    }
}

TEST_CASE("sigma_within")
{
    auto cliques = blow_up(spec(path_graph(2), { K(3), I(2) }));
    CHECK(sigma_within(cliques, 0, 0, 1) == 1);
    CHECK(sigma_within(cliques, 1, 3, 4) == 0);

    // explicit P_3 part next to a singleton: endpoints 0 and 2 share the middle vertex
    auto bg = blow_up(spec(path_graph(2), { X(path_graph(3)), K(1) }));
    long brute = 0;
    for (int w : bg.part_vertices(0))
        if (bg.graph().adjacent(0, w) && bg.graph().adjacent(w, 2))
            ++brute;
    CHECK(brute == 1);
    CHECK(distances_from(bg.graph(), 0)[2] == 2);
    CHECK(sigma_within(bg, 0, 0, 2) == 1);
    CHECK(sigma_within(bg, 0, 0, 1) == 1);

    CHECK_THROWS_AS(sigma_within(bg, 0, 0, 3), PreconditionError);
    CHECK_THROWS_AS(sigma_within(bg, 0, 1, 1), PreconditionError);
    CHECK_THROWS_AS(sigma_within(bg, 5, 0, 1), PreconditionError);
}

TEST_CASE("neighbor_mass")
{
    auto p3 = spec(path_graph(3), { I(2), I(3), I(1) });
    CHECK(neighbor_mass(p3, 1) == 3);
    CHECK(neighbor_mass(p3, 0) == 3);
    CHECK(neighbor_mass(spec(path_graph(4), { K(2), I(2), I(2), K(2) }), 1) == 4);
    CHECK_THROWS_AS(neighbor_mass(p3, 3), PreconditionError);
}

TEST_CASE("decomposition examples")
{
    auto c4 = blow_up(spec(path_graph(3), { K(1), I(2), K(1) }));
    auto exact = betweenness_exact(c4.graph());
    for (int end : { 0, 3 }) {
        auto d = decompose_betweenness(c4, end);
        CHECK(d.global_part == Rational(0));
        CHECK(d.own_local == Rational(0));
        REQUIRE(d.neighbor_locals.size() == 1);
        // the single nonadjacent middle pair has two midpoints
        CHECK(d.neighbor_locals.at(1) == Rational(1, 2));
        CHECK(d.total() == exact.values[end]);
    }

    for (int m = 1 ; m <= 4 ; ++m) {
        auto complete = blow_up(spec(path_graph(2), { K(m), K(m) }));
        for (auto & d : decompose_all(complete)) {
            CHECK(d.total() == Rational(0));
            CHECK(d.global_part == Rational(0));
        }
    }

    auto p4 = blow_up(spec(path_graph(4), { K(2), I(2), I(2), K(2) }));
    for (int x : p4.part_vertices(0))
        CHECK(decompose_betweenness(p4, x).global_part == Rational(0));
    CHECK_THROWS_AS(decompose_betweenness(p4, 8), PreconditionError);
}

TEST_CASE("decomposition identity and closed forms on random blow-ups")
{
    for (bool trees : { true, false })
        for (auto & s : random_corpus(80, 5, 3, trees, trees ? 21 : 22)) {
            auto bg = blow_up(s);
            auto exact = betweenness_exact(bg.graph());
            for (auto & d : decompose_all(bg)) {
                CHECK(d.total() == exact.values[d.vertex]);
                std::vector<int> keys;
                for (auto & [j, value] : d.neighbor_locals) {
                    keys.push_back(j);
                    CHECK(value == closed_form_neighbor_contribution(bg, d.part, j));
                }
                std::vector<int> expected(s.base.neighbours(d.part).begin(), s.base.neighbours(d.part).end());
                CHECK(keys == expected);
                if (s.base.degree(d.part) == 1)
                    CHECK(d.global_part == Rational(0));
            }
        }
}

TEST_CASE("closed-form neighbour contribution")
{
    for (int m = 1 ; m <= 5 ; ++m)
        for (int other = 1 ; other <= 3 ; ++other) {
            auto bg = blow_up(spec(path_graph(3), { I(other), I(m), K(other + 1) }));
            long mass = neighbor_mass(bg.spec(), 1);
            CHECK(closed_form_neighbor_contribution(bg, 0, 1) == Rational(choose2(m), mass));
            CHECK(closed_form_neighbor_contribution(bg, 1, 2) == Rational(0));
            CHECK(closed_form_neighbor_contribution(bg, 0, 1) == decompose_betweenness(bg, 0).neighbor_locals.at(1));
        }

    for (int a = 1 ; a <= 4 ; ++a)
        for (int b = 1 ; b <= 4 ; ++b) {
            auto bg = blow_up(spec(path_graph(3), { I(a), I(a + b), I(b) }));
            CHECK(closed_form_neighbor_contribution(bg, 0, 1) == Rational(choose2(a + b), a + b));
            CHECK(decompose_betweenness(bg, 0).neighbor_locals.at(1) == Rational(choose2(a + b), a + b));
        }

    auto bg = blow_up(spec(path_graph(3), { I(1), I(2), I(1) }));
    CHECK_THROWS_AS(closed_form_neighbor_contribution(bg, 0, 2), PreconditionError);
}

TEST_CASE("global load next to a leaf part")
{
    auto p4 = blow_up(spec(path_graph(4), { K(2), I(2), I(2), K(2) }));
    for (int y : p4.part_vertices(1)) {
        CHECK(global_leaf_neighbor_formula(p4, y) == Rational(4));
        CHECK(decompose_betweenness(p4, y).global_part == Rational(4));
    }

    for (int a = 1 ; a <= 4 ; ++a)
        for (int b = 1 ; b <= 4 ; ++b) {
            auto bg = blow_up(spec(path_graph(3), { I(a), I(a + b), I(b) }));
            int y = bg.part_vertices(1).front();
            CHECK(global_leaf_neighbor_formula(bg, y) == Rational(a * b, a + b));
            CHECK(decompose_betweenness(bg, y).global_part == Rational(a * b, a + b));
        }

    // a base vertex of degree three also carries pairs between the other leaves
    auto star = blow_up(spec(star_graph(3), { I(1), I(1), I(1), I(3) }));
    CHECK_THROWS_AS(global_leaf_neighbor_formula(star, 3), PreconditionError);
    CHECK(decompose_betweenness(star, 3).global_part == Rational(1));

    auto cycle = blow_up(spec(cycle_graph(4), { I(1), I(1), I(1), I(1) }));
    CHECK_THROWS_AS(global_leaf_neighbor_formula(cycle, 0), PreconditionError);
    auto p5 = blow_up(spec(path_graph(5), { I(1), I(1), I(1), I(1), I(1) }));
    CHECK_THROWS_AS(global_leaf_neighbor_formula(p5, 2), PreconditionError);
}

TEST_CASE("delta examples")
{
    auto p4 = blow_up(spec(path_graph(4), { K(2), I(2), I(2), K(2) }));
    auto exact = betweenness_exact(p4.graph());
    auto terms = delta_terms(p4, 0, 2);
    CHECK(terms.value() < Rational(1));
    CHECK(exact.values[0] < exact.values[2]);
    CHECK(terms.leaf_deficit == Rational(0));

    auto p3 = blow_up(spec(path_graph(3), { I(1), I(2), I(1) }));
    CHECK(delta_xy(p3, 0, 1) == Rational(1));
    CHECK(delta_extremal(p3, 0, 1).value() == Rational(1));

    auto p2 = blow_up(spec(path_graph(2), { K(2), I(2) }));
    CHECK_THROWS_AS(delta_xy(p2, 0, 2), DeltaUndefined);
    CHECK_THROWS_AS(delta_xy(p4, 2, 4), PreconditionError);
    CHECK_THROWS_AS(delta_xy(p4, 0, 4), PreconditionError);
}

TEST_CASE("delta tracks the sign of B(x) - B(y) and matches the direct sums")
{
    int compared = 0;
    for (auto & s : random_corpus(150, 5, 3, true, 31)) {
        auto bg = blow_up(s);
        auto exact = betweenness_exact(bg.graph());
        auto all = decompose_all(bg);
        for (int leaf = 0 ; leaf < s.base.size() ; ++leaf) {
            if (s.base.degree(leaf) != 1)
                continue;
            int next = s.base.neighbours(leaf).front();
            for (int x : bg.part_vertices(leaf))
                for (int y : bg.part_vertices(next)) {
                    // monotone observation
                    CHECK(all[x].own_local <= all[y].neighbor_locals.at(leaf));
                    CHECK(all[x].neighbor_locals.at(next) >= all[y].own_local);

                    auto t = delta_terms(bg, x, y);
                    CHECK(t.leaf_deficit == local_differential(bg, x));
                    CHECK(t.leaf_surplus == local_differential(bg, y));
                    CHECK(t.leaf_surplus - t.denominator() == exact.values[x] - exact.values[y]);
                    if (t.denominator().is_zero()) {
                        CHECK_THROWS_AS(t.value(), DeltaUndefined);
                        continue;
                    }
                    ++compared;
                    auto cmp_delta = t.value() <=> Rational(1);
                    auto cmp_b = exact.values[x] <=> exact.values[y];
                    CHECK(cmp_delta == cmp_b);
                }
        }
    }
    CHECK(compared > 100);
}

TEST_CASE("shortest paths between distinct parts meet each part at most once")
{
    int checked = 0;
    for (auto & s : random_corpus(60, 5, 3, false, 41)) {
        if (s.total_vertices() > 10)
            continue;
        auto bg = blow_up(s);
        auto & g = bg.graph();
        for (int u = 0 ; u < g.size() ; ++u)
            for (int v = u + 1 ; v < g.size() ; ++v) {
                if (bg.part_of(u) == bg.part_of(v))
                    continue;
                for (auto & path : shortest_paths(g, u, v)) {
                    std::vector<int> hits(bg.part_count(), 0);
                    for (int w : path)
                        CHECK(++hits[bg.part_of(w)] <= 1);
                    ++checked;
                }
            }
    }
    CHECK(checked > 0);
}

TEST_CASE("adding edges inside H_3 of a P_4 blow-up never raises load on H_2 or H_4")
{
    for (int c = 2 ; c <= 4 ; ++c)
        for (auto & h3 : enumerate_graphs(c))
            for (auto & [a, b] : std::vector<std::pair<int, int>>{ { 1, 2 }, { 2, 2 }, { 2, 3 } }) {
                auto before = blow_up(spec(path_graph(4), { K(a), I(b), X(h3), K(2) }));
                auto b_before = betweenness_exact(before.graph());
                for (int i = 0 ; i < c ; ++i)
                    for (int j = i + 1 ; j < c ; ++j) {
                        if (h3.adjacent(i, j))
                            continue;
                        auto denser = h3;
                        denser.add_edge(i, j);
                        auto after = blow_up(spec(path_graph(4), { K(a), I(b), X(denser), K(2) }));
                        auto b_after = betweenness_exact(after.graph());
                        for (int part : { 1, 3 })
                            for (int v : after.part_vertices(part))
                                CHECK(b_after.values[v] <= b_before.values[v]);
                    }
            }
}
