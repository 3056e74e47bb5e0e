/* vim: set sw=4 sts=4 et : */

#include <bbu/search.hpp>
#include <bbu/constructions.hpp>
#include <bbu/enumerate.hpp>
#include <bbu/errors.hpp>
#include <bbu/generators.hpp>
#include <bbu/properties.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <stdexcept>
#include <string>
#include <thread>

using namespace bbu;

auto bbu::parse_part_family(std::string_view name) -> std::optional<PartFamily>
{
    if (name == "ik")
        return PartFamily::ik_only;
    if (name == "all")
        return PartFamily::all_graphs;
    return std::nullopt;
}

auto bbu::part_family_name(PartFamily family) -> std::string_view
{
    return family == PartFamily::ik_only ? "ik" : "all";
}

auto SearchBudget::validate() const -> void
{
    if (max_part_size < 1)
        throw PreconditionError("max part size must be at least one");
    if (family == PartFamily::all_graphs && max_part_size > max_all_graphs_part_size)
        throw PreconditionError("the all-graphs family is capped at part size " + std::to_string(max_all_graphs_part_size));
    if (max_total_vertices < 1)
        throw PreconditionError("max total vertices must be positive");
    if (time_limit_seconds && *time_limit_seconds <= 0)
        throw PreconditionError("time limit must be positive");
}

namespace
{
    auto describe_part(const Graph & g) -> PartDescriptor
    {
        if (g.edge_count() == 0)
            return PartDescriptor::independent(g.size());
        if (g.edge_count() == g.size() * (g.size() - 1) / 2)
            return PartDescriptor::clique(g.size());
        return PartDescriptor::from_graph(g);
    }

    struct Hit
    {
        std::uint64_t index;
        BlowupSpec spec;
    };
}

auto bbu::part_options(PartFamily family, int max_size) -> std::vector<PartDescriptor>
{
    std::vector<PartDescriptor> result;
    for (int s = 1 ; s <= max_size ; ++s) {
        if (family == PartFamily::ik_only) {
            result.push_back(PartDescriptor::independent(s));
            if (s > 1)
                result.push_back(PartDescriptor::clique(s));
        }
        else
            for (auto & g : enumerate_graphs(s))
                result.push_back(describe_part(g));
    }
    return result;
}

auto bbu::search_blowups(const Graph & base, const SearchBudget & budget, const SearchOptions & options) -> SearchReport
{
    budget.validate();
    if (base.size() < 2 || ! is_connected(base))
        throw PreconditionError("search base must be connected with at least two vertices");
    if (base.size() > max_search_base_order)
        throw PreconditionError("search bases are capped at " + std::to_string(max_search_base_order) + " vertices");
    if (options.jobs < 1)
        throw PreconditionError("jobs must be positive");

    auto all_options = part_options(budget.family, budget.max_part_size);
    int n = base.size();
    std::vector<std::vector<const PartDescriptor *>> choices(n);
    // a single vertex standing in for a cut vertex of the base is a cut vertex of the blow-up
    std::vector<bool> cut(n, false);
    for (int v : cut_vertices(base))
        cut[v] = true;
    std::uint64_t total = 1;
    for (int v = 0 ; v < n ; ++v) {
        for (auto & p : all_options)
            if (! (options.prune_small_parts && cut[v] && p.size() == 1))
                choices[v].push_back(&p);
        total *= choices[v].size();
    }

    auto start = std::chrono::steady_clock::now();
    std::atomic<bool> out_of_time{ false };
    std::vector<std::vector<Hit>> hits(options.jobs);
    std::vector<std::uint64_t> examined(options.jobs, 0);

    auto worker = [&] (int id) {
        BlowupSpec spec{ base, {} };
        spec.parts.reserve(n);
        for (std::uint64_t index = id ; index < total ; index += options.jobs) {
            if (budget.time_limit_seconds && (index / options.jobs) % 64 == 0) {
                std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
                if (elapsed.count() > *budget.time_limit_seconds)
                    out_of_time = true;
            }
            if (out_of_time)
                return;

            // mixed-radix decode, last base vertex varying fastest
            spec.parts.clear();
            std::uint64_t rest = index;
            std::vector<const PartDescriptor *> picked(n);
            for (int v = n - 1 ; v >= 0 ; --v) {
                picked[v] = choices[v][rest % choices[v].size()];
                rest /= choices[v].size();
            }
            int vertices = 0;
            for (auto * p : picked) {
                spec.parts.push_back(*p);
                vertices += p->size();
            }
            if (vertices > budget.max_total_vertices)
                continue;

            ++examined[id];
            if (is_betweenness_uniform(blow_up(spec).graph()).uniform)
                hits[id].push_back(Hit{ index, spec });
        }
    };

    if (options.jobs == 1)
        worker(0);
    else {
        std::vector<std::thread> threads;
        for (int id = 0 ; id < options.jobs ; ++id)
            threads.emplace_back(worker, id);
        for (auto & t : threads)
            t.join();
    }

    std::vector<Hit> merged;
    for (auto & h : hits)
        merged.insert(merged.end(), h.begin(), h.end());
    std::sort(merged.begin(), merged.end(), [] (const Hit & a, const Hit & b) { return a.index < b.index; });

    SearchReport report;
    report.base = base;
    report.budget = budget;
    report.exhausted = ! out_of_time;
    for (auto e : examined)
        report.specs_examined += e;
    for (auto & h : merged) {
        if (! uniformity_of(betweenness_oracle(blow_up(h.spec).graph())).uniform)
            throw std::logic_error("search hit failed the oracle recheck");
        report.found.push_back(std::move(h.spec));
    }
    return report;
}

namespace
{
    auto check_lemma_args(int m, std::initializer_list<int> context) -> void
    {
        if (m < 1 || m > max_all_graphs_part_size)
            throw PreconditionError("lemma checks enumerate parts of 1.." + std::to_string(max_all_graphs_part_size)
                    + " vertices, got " + std::to_string(m));
        for (int x : context)
            if (x < 1)
                throw PreconditionError("lemma context sizes must be positive");
    }

    template <typename Build_>
    auto run_lemma(int m, int extreme_edges, Build_ && build) -> LemmaCheck
    {
        LemmaCheck result;
        bool first = true;
        for (auto & h : enumerate_graphs(m)) {
            auto bg = blow_up(build(h));
            auto delta = delta_extremal(bg, 0, 1).value();
            if (h.edge_count() == extreme_edges)
                result.extreme_delta = delta;
            if (first || delta > result.max_delta) {
                result.max_delta = delta;
                result.maximisers.clear();
                first = false;
            }
            if (delta == result.max_delta)
                result.maximisers.push_back(h);
        }
        result.holds = result.extreme_delta == result.max_delta;
        return result;
    }
}

auto bbu::verify_lemma_independent(int m, int a, int c, int d) -> LemmaCheck
{
    check_lemma_args(m, { a, c, d });
    return run_lemma(m, 0, [&] (const Graph & h) {
        return BlowupSpec{ path_graph(4), { PartDescriptor::clique(a), describe_part(h),
            PartDescriptor::independent(c), PartDescriptor::clique(d) } };
    });
}

auto bbu::verify_lemma_clique(int m, int b, int c, int d) -> LemmaCheck
{
    check_lemma_args(m, { b, c, d });
    return run_lemma(m, m * (m - 1) / 2, [&] (const Graph & h) {
        return BlowupSpec{ path_graph(4), { describe_part(h), PartDescriptor::independent(b),
            PartDescriptor::independent(c), PartDescriptor::clique(d) } };
    });
}

auto bbu::star_construction_for(const Graph & star) -> BlowupSpec
{
    if (! is_tree(star) || star.size() < 3 || diameter(star) != 2)
        throw PreconditionError("star construction needs a star with at least two leaves");
    BlowupSpec spec{ star, {} };
    for (int v = 0 ; v < star.size() ; ++v)
        spec.parts.push_back(PartDescriptor::independent(star.degree(v) == 1 ? 1 : star.size() - 1));
    return spec;
}

auto bbu::verify_tree_theorem(int n_max, const SearchBudget & budget, const SearchOptions & options) -> std::vector<TreeVerdict>
{
    if (n_max < 1 || n_max > max_search_base_order)
        throw PreconditionError("tree verification covers 1.." + std::to_string(max_search_base_order) + " vertices");
    budget.validate();

    std::vector<TreeVerdict> result;
    for (int n = 1 ; n <= n_max ; ++n)
        for (auto & t : enumerate_trees(n)) {
            TreeVerdict verdict;
            verdict.tree = t;
            verdict.diameter = diameter(t);
            if (verdict.diameter >= 3)
                verdict.search = search_blowups(t, budget, options);
            else if (n >= 2) {
                verdict.construction = n == 2 ? p2_clique_spec(2) : star_construction_for(t);
                verdict.construction_uniform = uniformity_of(betweenness_oracle(blow_up(*verdict.construction).graph())).uniform;
            }
            result.push_back(std::move(verdict));
        }
    return result;
}

auto bbu::explore_cut_conjecture(int n_max, const SearchBudget & budget, const SearchOptions & options) -> std::vector<SearchReport>
{
    if (n_max < 1 || n_max > 6)
        throw PreconditionError("cut-vertex exploration covers graphs on at most 6 vertices");
    budget.validate();

    std::vector<SearchReport> result;
    for (int n = 4 ; n <= n_max ; ++n)
        for (auto & g : enumerate_graphs(n))
            if (is_connected(g) && ! cut_vertices(g).empty() && diameter(g) >= 3)
                result.push_back(search_blowups(g, budget, options));
    return result;
}
