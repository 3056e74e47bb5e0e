/* vim: set sw=4 sts=4 et : */

#ifndef BBU_SEARCH_HPP
#define BBU_SEARCH_HPP

#include <bbu/blowup.hpp>

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace bbu
{
    enum class PartFamily
    {
        ik_only,
        all_graphs
    };

    auto parse_part_family(std::string_view name) -> std::optional<PartFamily>;
    auto part_family_name(PartFamily family) -> std::string_view;

    constexpr int max_search_base_order = 7;
    constexpr int max_all_graphs_part_size = 5;

    struct SearchBudget
    {
        PartFamily family = PartFamily::ik_only;
        int max_part_size = 1;
        int max_total_vertices = 1 << 20;
        std::optional<double> time_limit_seconds;

        /// Throws PreconditionError.
        auto validate() const -> void;
    };

    struct SearchOptions
    {
        int jobs = 1;
        /// Skip size-one parts on cut vertices of the base; such blow-ups have
        /// a cut vertex and cannot be uniform.
        bool prune_small_parts = true;
    };

    struct SearchReport
    {
        Graph base;
        SearchBudget budget;
        std::vector<BlowupSpec> found;
        bool exhausted = false;
        std::uint64_t specs_examined = 0;
    };

    /// Candidate parts in enumeration order: by size, then I before K for
    /// ik_only, or every isomorphism class for all_graphs. Edgeless and
    /// complete classes are reported as I and K parts.
    auto part_options(PartFamily family, int max_size) -> std::vector<PartDescriptor>;

    /// Exhaustive search over part assignments for the base. Hits are
    /// rechecked with betweenness_oracle and listed in enumeration order; the
    /// result does not depend on jobs.
    auto search_blowups(const Graph & base, const SearchBudget & budget, const SearchOptions & options = {}) -> SearchReport;

    struct LemmaCheck
    {
        bool holds = false;
        /// Delta when the varying part is I_m (resp. K_m).
        Rational extreme_delta;
        Rational max_delta;
        /// Every part graph attaining max_delta.
        std::vector<Graph> maximisers;
    };

    /// P_4[K_a, H, I_c, K_d] over every graph H on m vertices: does H = I_m
    /// reach the largest Delta (ties allowed)?
    auto verify_lemma_independent(int m, int a, int c, int d) -> LemmaCheck;

    /// P_4[H, I_b, I_c, K_d] over every graph H on m vertices: does H = K_m
    /// reach the largest Delta (ties allowed)?
    auto verify_lemma_clique(int m, int b, int c, int d) -> LemmaCheck;

    struct TreeVerdict
    {
        Graph tree;
        int diameter = 0;
        /// Present for trees of diameter at least three.
        std::optional<SearchReport> search;
        /// Known uniform blow-up, present for trees of diameter one or two.
        std::optional<BlowupSpec> construction;
        bool construction_uniform = false;
    };

    auto verify_tree_theorem(int n_max, const SearchBudget & budget, const SearchOptions & options = {}) -> std::vector<TreeVerdict>;

    /// Searches every connected graph on at most n_max vertices that has a cut
    /// vertex and diameter at least three. Any hit is a counterexample.
    auto explore_cut_conjecture(int n_max, const SearchBudget & budget, const SearchOptions & options = {}) -> std::vector<SearchReport>;

    /// Uniform blow-up of a star base (any labelling): leaves I_1, centre I_k.
    auto star_construction_for(const Graph & star) -> BlowupSpec;
}

#endif
