/* vim: set sw=4 sts=4 et : */

#ifndef BBU_CANONICAL_HPP
#define BBU_CANONICAL_HPP

#include <bbu/graph.hpp>

#include <vector>

namespace bbu
{
    /// Largest order accepted by the canonical labelling search.
    constexpr int max_canonical_order = 64;

    /// Returns order such that g.relabelled(order) is the canonical form of g:
    /// among all labellings that respect the colour-refined vertex partition,
    /// the one whose column-major upper-triangle bit string is maximal.
    auto canonical_labelling(const Graph & g) -> std::vector<int>;

    auto canonical_form(const Graph & g) -> Graph;

    auto is_isomorphic(const Graph & g, const Graph & h) -> bool;
}

#endif
