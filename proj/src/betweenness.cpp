/* vim: set sw=4 sts=4 et : */

#include <bbu/betweenness.hpp>

#include <algorithm>
#include <numeric>

using namespace bbu;

auto bbu::betweenness_exact(const Graph & g) -> BetweennessProfile
{
    int n = g.size();
    std::vector<Rational> total(n);

    std::vector<int> dist(n), order;
    std::vector<BigInt> sigma(n);
    std::vector<Rational> dependency(n);
    order.reserve(n);

    for (int s = 0 ; s < n ; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(sigma.begin(), sigma.end(), 0);
        order.clear();

        dist[s] = 0;
        sigma[s] = 1;
        order.push_back(s);
        for (std::size_t head = 0 ; head < order.size() ; ++head) {
            int v = order[head];
            for (int w : g.neighbours(v)) {
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    order.push_back(w);
                }
                if (dist[w] == dist[v] + 1)
                    sigma[w] += sigma[v];
            }
        }

        for (int v : order)
            dependency[v] = Rational();

        for (auto it = order.rbegin() ; it != order.rend() ; ++it) {
            int w = *it;
            Rational carried = Rational(1) + dependency[w];
            for (int v : g.neighbours(w))
                if (dist[v] >= 0 && dist[v] + 1 == dist[w])
                    dependency[v] += Rational(sigma[v], sigma[w]) * carried;
            if (w != s)
                total[w] += dependency[w];
        }
    }

    // each unordered pair was counted from both endpoints
    for (auto & value : total)
        value /= Rational(2);
    return BetweennessProfile{ std::move(total) };
}

PathCounts::PathCounts(const Graph & g) :
    _size(g.size()),
    _distance(static_cast<std::size_t>(_size) * _size, -1),
    _count(static_cast<std::size_t>(_size) * _size, 0)
{
    std::vector<int> frontier, next;
    for (int u = 0 ; u < _size ; ++u) {
        int * dist = &_distance[static_cast<std::size_t>(u) * _size];
        BigInt * count = &_count[static_cast<std::size_t>(u) * _size];
        dist[u] = 0;
        count[u] = 1;
        frontier.assign(1, u);
        for (int level = 1 ; ! frontier.empty() ; ++level) {
            next.clear();
            for (int v : frontier)
                for (int w : g.neighbours(v))
                    if (dist[w] < 0) {
                        dist[w] = level;
                        next.push_back(w);
                    }
            // counts propagate along the shortest-path DAG one layer at a time
            for (int w : next)
                for (int v : g.neighbours(w))
                    if (dist[v] == level - 1)
                        count[w] += count[v];
            std::swap(frontier, next);
        }
    }
}

auto PathCounts::fraction_through(int u, int v, int x) const -> Rational
{
    int d = distance(u, v);
    if (d < 0 || x == u || x == v)
        return Rational();
    int du = distance(u, x), dv = distance(x, v);
    if (du < 0 || dv < 0 || du + dv != d)
        return Rational();
    return Rational(BigInt(count(u, x) * count(x, v)), count(u, v));
}

auto bbu::betweenness_oracle(const Graph & g) -> BetweennessProfile
{
    int n = g.size();
    PathCounts paths(g);
    std::vector<Rational> total(n);
    for (int u = 0 ; u < n ; ++u)
        for (int v = u + 1 ; v < n ; ++v) {
            if (paths.distance(u, v) < 2)
                continue;
            for (int x = 0 ; x < n ; ++x)
                if (x != u && x != v)
                    total[x] += paths.fraction_through(u, v, x);
        }
    return BetweennessProfile{ std::move(total) };
}

namespace
{
    auto checked_add(std::int64_t a, std::int64_t b, std::int64_t & out) -> bool
    {
        return ! __builtin_add_overflow(a, b, &out);
    }

    auto checked_mul(std::int64_t a, std::int64_t b, std::int64_t & out) -> bool
    {
        return ! __builtin_mul_overflow(a, b, &out);
    }

    auto checked_lcm(std::int64_t a, std::int64_t b, std::int64_t & out) -> bool
    {
        return checked_mul(a / std::gcd(a, b), b, out);
    }
}

auto bbu::betweenness_scaled(const Graph & g) -> std::optional<ScaledBetweenness>
{
    int n = g.size();
    std::vector<std::vector<int>> dist(n, std::vector<int>(n, -1)), orders(n);
    std::vector<std::vector<std::int64_t>> sigma(n, std::vector<std::int64_t>(n, 0));

    // first pass: path counts and their lcm
    std::int64_t scale = 1;
    for (int s = 0 ; s < n ; ++s) {
        auto & d = dist[s];
        auto & c = sigma[s];
        auto & order = orders[s];
        d[s] = 0;
        c[s] = 1;
        order.push_back(s);
        for (std::size_t head = 0 ; head < order.size() ; ++head) {
            int v = order[head];
            for (int w : g.neighbours(v)) {
                if (d[w] < 0) {
                    d[w] = d[v] + 1;
                    order.push_back(w);
                }
                if (d[w] == d[v] + 1 && ! checked_add(c[w], c[v], c[w]))
                    return std::nullopt;
            }
        }
        for (int t : order)
            if (! checked_lcm(scale, c[t], scale))
                return std::nullopt;
    }

    // second pass: scaled[v] accumulates scale * delta_s(v) / sigma_sv,
    // which satisfies scaled[v] = sum over successors w of scale / sigma_sw + scaled[w]
    ScaledBetweenness result;
    result.numerators.assign(n, 0);
    std::vector<std::int64_t> scaled(n);
    for (int s = 0 ; s < n ; ++s) {
        auto & d = dist[s];
        auto & c = sigma[s];
        auto & order = orders[s];
        for (int v : order)
            scaled[v] = 0;
        for (auto it = order.rbegin() ; it != order.rend() ; ++it) {
            int w = *it;
            std::int64_t carried;
            if (! checked_add(scale / c[w], scaled[w], carried))
                return std::nullopt;
            for (int v : g.neighbours(w))
                if (d[v] >= 0 && d[v] + 1 == d[w] && ! checked_add(scaled[v], carried, scaled[v]))
                    return std::nullopt;
            if (w != s) {
                std::int64_t contribution;
                if (! checked_mul(c[w], scaled[w], contribution)
                        || ! checked_add(result.numerators[w], contribution, result.numerators[w]))
                    return std::nullopt;
            }
        }
    }

    if (! checked_mul(scale, 2, result.denominator))
        return std::nullopt;
    return result;
}

auto bbu::uniformity_of(const BetweennessProfile & profile) -> Uniformity
{
    if (profile.values.empty())
        return Uniformity{ true, std::nullopt };
    for (auto & v : profile.values)
        if (v != profile.values.front())
            return Uniformity{ false, std::nullopt };
    return Uniformity{ true, profile.values.front() };
}

auto bbu::is_betweenness_uniform(const Graph & g) -> Uniformity
{
    if (auto scaled = betweenness_scaled(g)) {
        auto & nums = scaled->numerators;
        if (nums.empty())
            return Uniformity{ true, std::nullopt };
        if (std::any_of(nums.begin(), nums.end(), [&] (std::int64_t x) { return x != nums.front(); }))
            return Uniformity{ false, std::nullopt };
        return Uniformity{ true, Rational(BigInt(static_cast<long>(nums.front())), BigInt(static_cast<long>(scaled->denominator))) };
    }
    return uniformity_of(betweenness_exact(g));
}
