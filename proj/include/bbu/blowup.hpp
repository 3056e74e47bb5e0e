/* vim: set sw=4 sts=4 et : */

#ifndef BBU_BLOWUP_HPP
#define BBU_BLOWUP_HPP

#include <bbu/betweenness.hpp>
#include <bbu/graph.hpp>
#include <bbu/rational.hpp>

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

namespace bbu
{
    enum class PartKind
    {
        independent,
        clique,
        explicit_graph
    };

    /// The graph substituted for one base vertex: I_m, K_m, or an explicit graph.
    class PartDescriptor
    {
        private:
            PartKind _kind;
            Graph _graph;

            PartDescriptor(PartKind kind, Graph graph);

        public:
            static auto independent(int size) -> PartDescriptor;
            static auto clique(int size) -> PartDescriptor;
            static auto from_graph(Graph graph) -> PartDescriptor;

            auto kind() const -> PartKind { return _kind; }
            auto size() const -> int { return _graph.size(); }
            auto graph() const -> const Graph & { return _graph; }

            friend auto operator== (const PartDescriptor &, const PartDescriptor &) -> bool = default;
    };

    struct BlowupSpec
    {
        Graph base;
        std::vector<PartDescriptor> parts;

        /// Throws PreconditionError unless the base is connected with at least
        /// two vertices and there is one part per base vertex.
        auto validate() const -> void;

        auto total_vertices() const -> int;

        friend auto operator== (const BlowupSpec &, const BlowupSpec &) -> bool = default;
    };

    /// G' = G[H_1, ..., H_n]. Vertices are numbered contiguously by part in
    /// base order.
    class BlownGraph
    {
        private:
            BlowupSpec _spec;
            Graph _graph;
            std::vector<int> _part_of;
            std::vector<std::vector<int>> _part_vertices;

            friend auto blow_up(const BlowupSpec &) -> BlownGraph;

        public:
            auto spec() const -> const BlowupSpec & { return _spec; }
            auto base() const -> const Graph & { return _spec.base; }
            auto graph() const -> const Graph & { return _graph; }
            auto part_count() const -> int { return static_cast<int>(_part_vertices.size()); }
            auto part_of(int v) const -> int { return _part_of[v]; }
            auto part_of() const -> const std::vector<int> & { return _part_of; }
            auto part_vertices(int part) const -> const std::vector<int> & { return _part_vertices[part]; }
    };

    auto blow_up(const BlowupSpec & spec) -> BlownGraph;

    /// Number of u,v-paths inside part i whose length is d_{G'}(u, v).
    auto sigma_within(const BlownGraph & bg, int part, int u, int v) -> long;

    /// Total size of the parts adjacent to the given part in the base.
    auto neighbor_mass(const BlowupSpec & spec, int part) -> long;

    /// B(v) split by where the endpoints of each contributing pair live.
    struct Decomposition
    {
        int vertex = 0;
        int part = 0;
        Rational global_part;
        Rational own_local;
        std::map<int, Rational> neighbor_locals;

        auto total() const -> Rational;
    };

    /// Classifies every endpoint pair from path counts in G'. Does not use
    /// any closed form.
    auto decompose_betweenness(const BlownGraph & bg, int v) -> Decomposition;

    auto decompose_all(const BlownGraph & bg) -> std::vector<Decomposition>;

    /// Sum over nonadjacent pairs {u, w} of H_j of 1 / (sigma_within(u, w) + n_j):
    /// the local load a vertex of part i receives from neighbouring part j.
    auto closed_form_neighbor_contribution(const BlownGraph & bg, int part, int neighbour_part) -> Rational;

    /// |H_1| (|V(G')| - |H_1| - |H_2|) / |H_2| for y in H_2 next to a leaf
    /// part H_1. Requires a tree base in which y's base vertex has degree at
    /// most two, the only setting where those pairs are all of B^G(y).
    auto global_leaf_neighbor_formula(const BlownGraph & bg, int y) -> Rational;

    /// Raised when the load of y (global plus differential) is zero.
    class DeltaUndefined : public std::domain_error
    {
        public:
            using std::domain_error::domain_error;
    };

    /// Parts of the comparison between x in a leaf part H_1 and y in the
    /// adjacent part H_2.
    struct DeltaTerms
    {
        int x = 0;
        int y = 0;
        Rational leaf_surplus;      // B^{H_2}(x) - B^{H_2}(y)
        Rational global_y;          // B^G(y)
        Rational leaf_deficit;      // B^{H_1}(y) - B^{H_1}(x)
        Rational other_locals_y;    // sum of B^{H_j}(y), j adjacent to H_2, j != 1

        auto denominator() const -> Rational;
        auto value() const -> Rational;
    };

    /// Throws PreconditionError unless x's part is a base leaf and y's part is
    /// its neighbour; DeltaUndefined when the denominator vanishes.
    auto delta_terms(const BlownGraph & bg, int x, int y) -> DeltaTerms;

    auto delta_xy(const BlownGraph & bg, int x, int y) -> Rational;

    /// Picks x maximising B(x) over the leaf part and y minimising B(y) over
    /// its neighbour (lowest index on ties).
    auto delta_extremal(const BlownGraph & bg, int leaf_part, int neighbour_part) -> DeltaTerms;

    /// Direct sum over nonadjacent pairs {u, w} of v's own part that are not
    /// both adjacent to v, weighted by 1 / (sigma_within(u, w) + n_part). For x
    /// in a leaf part this is B^{H_1}(y) - B^{H_1}(x); for y in the adjacent
    /// part it is B^{H_2}(x) - B^{H_2}(y).
    auto local_differential(const BlownGraph & bg, int v) -> Rational;
}

#endif
