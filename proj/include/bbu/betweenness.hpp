/* vim: set sw=4 sts=4 et : */

#ifndef BBU_BETWEENNESS_HPP
#define BBU_BETWEENNESS_HPP

#include <bbu/graph.hpp>
#include <bbu/rational.hpp>

#include <cstdint>
#include <optional>
#include <vector>

namespace bbu
{
    /// Betweenness value per vertex, indexed by vertex.
    struct BetweennessProfile
    {
        std::vector<Rational> values;

        friend auto operator== (const BetweennessProfile &, const BetweennessProfile &) -> bool = default;
    };

    /// Dependency accumulation, one BFS per source, with rational
    /// accumulators. Pairs in different components contribute nothing.
    auto betweenness_exact(const Graph & g) -> BetweennessProfile;

    /// Direct evaluation of the definition: for each pair {u, v} and each x,
    /// sigma_uv(x) = sigma_ux * sigma_xv when x lies on a shortest u,v-path.
    auto betweenness_oracle(const Graph & g) -> BetweennessProfile;

    /// Betweenness as integer numerators over one common denominator,
    /// B(v) = numerators[v] / denominator. Same accumulation as
    /// betweenness_exact but scaled by the lcm of all path counts so every
    /// intermediate is an integer. Empty if any intermediate overflows int64.
    struct ScaledBetweenness
    {
        std::vector<std::int64_t> numerators;
        std::int64_t denominator = 1;
    };

    auto betweenness_scaled(const Graph & g) -> std::optional<ScaledBetweenness>;

    struct Uniformity
    {
        bool uniform = false;
        std::optional<Rational> common;
    };

    /// Exact equality of all entries; no tolerance.
    auto uniformity_of(const BetweennessProfile & profile) -> Uniformity;

    /// Uses betweenness_scaled, falling back to betweenness_exact on overflow.
    auto is_betweenness_uniform(const Graph & g) -> Uniformity;

    /// All-pairs shortest path lengths and counts.
    class PathCounts
    {
        private:
            int _size;
            std::vector<int> _distance;
            std::vector<BigInt> _count;

        public:
            explicit PathCounts(const Graph & g);

            /// -1 when unreachable.
            auto distance(int u, int v) const -> int { return _distance[static_cast<std::size_t>(u) * _size + v]; }

            /// Number of shortest u,v-paths; 0 when unreachable, 1 when u == v.
            auto count(int u, int v) const -> const BigInt & { return _count[static_cast<std::size_t>(u) * _size + v]; }

            /// sigma_uv(x) / sigma_uv for x distinct from u and v.
            auto fraction_through(int u, int v, int x) const -> Rational;
    };
}

#endif
