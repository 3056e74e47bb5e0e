/* vim: set sw=4 sts=4 et : */

#ifndef BBU_GENERATORS_HPP
#define BBU_GENERATORS_HPP

#include <bbu/graph.hpp>

#include <optional>
#include <string_view>

namespace bbu
{
    enum class GraphKind
    {
        path,
        cycle,
        complete,
        empty,
        star
    };

    auto parse_graph_kind(std::string_view name) -> std::optional<GraphKind>;

    /// Named families. For star, the parameter is the number of leaves k and
    /// the result has k + 1 vertices with the centre last.
    auto generate(GraphKind kind, int n) -> Graph;

    auto path_graph(int n) -> Graph;
    auto cycle_graph(int n) -> Graph;
    auto complete_graph(int n) -> Graph;
    auto empty_graph(int n) -> Graph;
    auto star_graph(int leaves) -> Graph;
    auto petersen_graph() -> Graph;
}

#endif
