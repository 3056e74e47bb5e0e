/* vim: set sw=4 sts=4 et : */

#include <bbu/blowup.hpp>
#include <bbu/errors.hpp>
#include <bbu/generators.hpp>
#include <bbu/properties.hpp>

#include <stdexcept>
#include <string>

using namespace bbu;

PartDescriptor::PartDescriptor(PartKind kind, Graph graph) :
    _kind(kind),
    _graph(std::move(graph))
{
}

auto PartDescriptor::independent(int size) -> PartDescriptor
{
    if (size < 1)
        throw PreconditionError("part size must be positive, got " + std::to_string(size));
    return PartDescriptor(PartKind::independent, empty_graph(size));
}

auto PartDescriptor::clique(int size) -> PartDescriptor
{
    if (size < 1)
        throw PreconditionError("part size must be positive, got " + std::to_string(size));
    return PartDescriptor(PartKind::clique, complete_graph(size));
}

auto PartDescriptor::from_graph(Graph graph) -> PartDescriptor
{
    if (graph.size() < 1)
        throw PreconditionError("explicit part graph must be nonempty");
    return PartDescriptor(PartKind::explicit_graph, std::move(graph));
}

auto BlowupSpec::validate() const -> void
{
    if (base.size() < 2)
        throw PreconditionError("blow-up base needs at least two vertices");
    if (! is_connected(base))
        throw PreconditionError("blow-up base must be connected");
    if (parts.size() != static_cast<std::size_t>(base.size()))
        throw PreconditionError("blow-up needs one part per base vertex: " + std::to_string(base.size())
                + " vertices, " + std::to_string(parts.size()) + " parts");
}

auto BlowupSpec::total_vertices() const -> int
{
    int total = 0;
    for (auto & p : parts)
        total += p.size();
    return total;
}

auto bbu::blow_up(const BlowupSpec & spec) -> BlownGraph
{
    spec.validate();

    BlownGraph result;
    result._spec = spec;
    result._part_vertices.resize(spec.parts.size());
    for (std::size_t i = 0 ; i < spec.parts.size() ; ++i)
        for (int k = 0 ; k < spec.parts[i].size() ; ++k) {
            result._part_vertices[i].push_back(static_cast<int>(result._part_of.size()));
            result._part_of.push_back(static_cast<int>(i));
        }

    Graph g(static_cast<int>(result._part_of.size()));
    for (std::size_t i = 0 ; i < spec.parts.size() ; ++i) {
        auto & vertices = result._part_vertices[i];
        for (auto & [a, b] : spec.parts[i].graph().edges())
            g.add_edge(vertices[a], vertices[b]);
    }
    for (auto & [i, j] : spec.base.edges())
        for (int u : result._part_vertices[i])
            for (int v : result._part_vertices[j])
                g.add_edge(u, v);

    result._graph = std::move(g);
    return result;
}

namespace
{
    auto check_part(const BlownGraph & bg, int part) -> void
    {
        if (part < 0 || part >= bg.part_count())
            throw PreconditionError("part index " + std::to_string(part) + " out of range");
    }

    auto check_vertex(const BlownGraph & bg, int v) -> void
    {
        if (v < 0 || v >= bg.graph().size())
            throw PreconditionError("vertex " + std::to_string(v) + " out of range");
    }

    auto common_neighbours_within(const BlownGraph & bg, int part, int u, int v) -> long
    {
        long count = 0;
        for (int w : bg.part_vertices(part))
            if (bg.graph().adjacent(u, w) && bg.graph().adjacent(w, v))
                ++count;
        return count;
    }

    auto decompose_with(const BlownGraph & bg, const PathCounts & paths, int v) -> Decomposition
    {
        check_vertex(bg, v);
        Decomposition d;
        d.vertex = v;
        d.part = bg.part_of(v);
        for (int j : bg.base().neighbours(d.part))
            d.neighbor_locals.emplace(j, Rational());

        std::vector<Rational> stray(bg.part_count());
        int n = bg.graph().size();
        for (int x = 0 ; x < n ; ++x)
            for (int y = x + 1 ; y < n ; ++y) {
                if (x == v || y == v)
                    continue;
                auto contribution = paths.fraction_through(x, y, v);
                if (contribution.is_zero())
                    continue;
                int px = bg.part_of(x), py = bg.part_of(y);
                if (px != py)
                    d.global_part += contribution;
                else if (px == d.part)
                    d.own_local += contribution;
                else if (auto it = d.neighbor_locals.find(px) ; it != d.neighbor_locals.end())
                    it->second += contribution;
                else
                    stray[px] += contribution;
            }

        for (int k = 0 ; k < bg.part_count() ; ++k)
            if (! stray[k].is_zero())
                throw std::logic_error("vertex " + std::to_string(v) + " lies on a shortest path inside part "
                        + std::to_string(k) + ", which is not adjacent to its own part");
        return d;
    }
}

auto bbu::sigma_within(const BlownGraph & bg, int part, int u, int v) -> long
{
    check_part(bg, part);
    check_vertex(bg, u);
    check_vertex(bg, v);
    if (u == v)
        throw PreconditionError("sigma_within needs two distinct vertices");
    if (bg.part_of(u) != part || bg.part_of(v) != part)
        throw PreconditionError("vertices " + std::to_string(u) + " and " + std::to_string(v)
                + " are not both in part " + std::to_string(part));

    if (bg.graph().adjacent(u, v))
        return 1;
    auto dist = distances_from(bg.graph(), u);
    if (dist[v] != 2)
        return 0;
    return common_neighbours_within(bg, part, u, v);
}

auto bbu::neighbor_mass(const BlowupSpec & spec, int part) -> long
{
    if (part < 0 || part >= spec.base.size() || spec.parts.size() != static_cast<std::size_t>(spec.base.size()))
        throw PreconditionError("part index " + std::to_string(part) + " out of range");
    long total = 0;
    for (int j : spec.base.neighbours(part))
        total += spec.parts[j].size();
    return total;
}

auto Decomposition::total() const -> Rational
{
    Rational sum = global_part + own_local;
    for (auto & [_, value] : neighbor_locals)
        sum += value;
    return sum;
}

auto bbu::decompose_betweenness(const BlownGraph & bg, int v) -> Decomposition
{
    check_vertex(bg, v);
    return decompose_with(bg, PathCounts(bg.graph()), v);
}

auto bbu::decompose_all(const BlownGraph & bg) -> std::vector<Decomposition>
{
    PathCounts paths(bg.graph());
    std::vector<Decomposition> result;
    for (int v = 0 ; v < bg.graph().size() ; ++v)
        result.push_back(decompose_with(bg, paths, v));
    return result;
}

auto bbu::closed_form_neighbor_contribution(const BlownGraph & bg, int part, int neighbour_part) -> Rational
{
    check_part(bg, part);
    check_part(bg, neighbour_part);
    if (! bg.base().adjacent(part, neighbour_part))
        throw PreconditionError("part " + std::to_string(neighbour_part) + " is not a base neighbour of part "
                + std::to_string(part));

    long mass = neighbor_mass(bg.spec(), neighbour_part);
    auto & vertices = bg.part_vertices(neighbour_part);
    Rational sum;
    for (std::size_t a = 0 ; a < vertices.size() ; ++a)
        for (std::size_t b = a + 1 ; b < vertices.size() ; ++b)
            if (! bg.graph().adjacent(vertices[a], vertices[b]))
                sum += Rational(1, sigma_within(bg, neighbour_part, vertices[a], vertices[b]) + mass);
    return sum;
}

auto bbu::global_leaf_neighbor_formula(const BlownGraph & bg, int y) -> Rational
{
    check_vertex(bg, y);
    auto & base = bg.base();
    if (! is_tree(base))
        throw PreconditionError("the leaf-neighbour global formula needs a tree base");

    int middle = bg.part_of(y);
    if (base.degree(middle) > 2)
        throw PreconditionError("part " + std::to_string(middle) + " has base degree "
                + std::to_string(base.degree(middle)) + "; pairs avoiding the leaf part also cross it");

    int leaf = -1;
    for (int j : base.neighbours(middle))
        if (base.degree(j) == 1) {
            leaf = j;
            break;
        }
    if (leaf < 0)
        throw PreconditionError("part " + std::to_string(middle) + " is not adjacent to a leaf part");

    long leaf_size = bg.spec().parts[leaf].size();
    long middle_size = bg.spec().parts[middle].size();
    long total = bg.graph().size();
    return Rational(leaf_size * (total - leaf_size - middle_size), middle_size);
}

auto DeltaTerms::denominator() const -> Rational
{
    return global_y + leaf_deficit + other_locals_y;
}

auto DeltaTerms::value() const -> Rational
{
    auto den = denominator();
    if (den.is_zero())
        throw DeltaUndefined("y has no global or differential load");
    return leaf_surplus / den;
}

namespace
{
    auto check_leaf_pair(const BlownGraph & bg, int leaf_part, int neighbour_part) -> void
    {
        check_part(bg, leaf_part);
        check_part(bg, neighbour_part);
        if (bg.base().degree(leaf_part) != 1)
            throw PreconditionError("part " + std::to_string(leaf_part) + " is not a leaf of the base");
        if (! bg.base().adjacent(leaf_part, neighbour_part))
            throw PreconditionError("part " + std::to_string(neighbour_part) + " is not adjacent to leaf part "
                    + std::to_string(leaf_part));
    }

    auto terms_from(const Decomposition & dx, const Decomposition & dy) -> DeltaTerms
    {
        DeltaTerms t;
        t.x = dx.vertex;
        t.y = dy.vertex;
        t.leaf_surplus = dx.neighbor_locals.at(dy.part) - dy.own_local;
        t.global_y = dy.global_part;
        t.leaf_deficit = dy.neighbor_locals.at(dx.part) - dx.own_local;
        for (auto & [j, value] : dy.neighbor_locals)
            if (j != dx.part)
                t.other_locals_y += value;
        return t;
    }
}

auto bbu::local_differential(const BlownGraph & bg, int v) -> Rational
{
    check_vertex(bg, v);
    int part = bg.part_of(v);
    long mass = neighbor_mass(bg.spec(), part);
    auto & vertices = bg.part_vertices(part);
    Rational sum;
    for (std::size_t a = 0 ; a < vertices.size() ; ++a)
        for (std::size_t b = a + 1 ; b < vertices.size() ; ++b) {
            int u = vertices[a], w = vertices[b];
            if (bg.graph().adjacent(u, w))
                continue;
            if (bg.graph().adjacent(u, v) && bg.graph().adjacent(w, v))
                continue;
            sum += Rational(1, sigma_within(bg, part, u, w) + mass);
        }
    return sum;
}

auto bbu::delta_terms(const BlownGraph & bg, int x, int y) -> DeltaTerms
{
    check_vertex(bg, x);
    check_vertex(bg, y);
    check_leaf_pair(bg, bg.part_of(x), bg.part_of(y));
    PathCounts paths(bg.graph());
    return terms_from(decompose_with(bg, paths, x), decompose_with(bg, paths, y));
}

auto bbu::delta_xy(const BlownGraph & bg, int x, int y) -> Rational
{
    return delta_terms(bg, x, y).value();
}

auto bbu::delta_extremal(const BlownGraph & bg, int leaf_part, int neighbour_part) -> DeltaTerms
{
    check_leaf_pair(bg, leaf_part, neighbour_part);
    auto profile = betweenness_exact(bg.graph());

    int x = -1, y = -1;
    for (int v : bg.part_vertices(leaf_part))
        if (x < 0 || profile.values[v] > profile.values[x])
            x = v;
    for (int v : bg.part_vertices(neighbour_part))
        if (y < 0 || profile.values[v] < profile.values[y])
            y = v;

    PathCounts paths(bg.graph());
    return terms_from(decompose_with(bg, paths, x), decompose_with(bg, paths, y));
}

