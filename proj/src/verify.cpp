/* vim: set sw=4 sts=4 et : */

#include <bbu/verify.hpp>
#include <bbu/betweenness.hpp>
#include <bbu/canonical.hpp>
#include <bbu/constructions.hpp>
#include <bbu/enumerate.hpp>
#include <bbu/generators.hpp>
#include <bbu/graph_io.hpp>
#include <bbu/properties.hpp>
#include <bbu/search.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <random>
#include <stdexcept>

using namespace bbu;

auto bbu::parse_verify_level(std::string_view name) -> std::optional<VerifyLevel>
{
    if (name == "quick")
        return VerifyLevel::quick;
    if (name == "full")
        return VerifyLevel::full;
    return std::nullopt;
}

auto bbu::random_tree_blowup_corpus(std::uint64_t seed, int count) -> std::vector<BlowupSpec>
{
    std::vector<Graph> trees;
    for (int n = 2 ; n <= 5 ; ++n)
        for (auto & t : enumerate_trees(n))
            trees.push_back(t);
    auto parts = part_options(PartFamily::all_graphs, 3);

    // modulo rather than a distribution so the corpus does not depend on the standard library
    std::mt19937_64 rng(seed);
    std::vector<BlowupSpec> corpus;
    for (int i = 0 ; i < count ; ++i) {
        BlowupSpec spec{ trees[rng() % trees.size()], {} };
        for (int v = 0 ; v < spec.base.size() ; ++v)
            spec.parts.push_back(parts[rng() % parts.size()]);
        corpus.push_back(std::move(spec));
    }
    return corpus;
}

namespace
{
    auto describe(const BlowupSpec & spec) -> std::string
    {
        std::string s = serialize_graph6(spec.base) + "[";
        for (std::size_t i = 0 ; i < spec.parts.size() ; ++i) {
            auto & p = spec.parts[i];
            if (i > 0)
                s += ",";
            switch (p.kind()) {
                case PartKind::independent: s += "I" + std::to_string(p.size()); break;
                case PartKind::clique: s += "K" + std::to_string(p.size()); break;
                case PartKind::explicit_graph: s += "X:" + serialize_graph6(p.graph()); break;
            }
        }
        return s + "]";
    }

    constexpr std::size_t max_notes = 20;

    struct Recorder
    {
        CriterionResult result;
        long checked = 0;
        long failed = 0;

        auto fail(const std::string & note) -> void
        {
            ++failed;
            if (result.notes.size() < max_notes)
                result.notes.push_back(note);
        }

        auto expect(bool ok, const std::string & note) -> void
        {
            ++checked;
            if (! ok)
                fail(note);
        }
    };

    /// Uniform graphs seen anywhere in the run, and every "nothing found" claim.
    struct Sanity
    {
        long uniform_graphs = 0;
        long empty_claims = 0;
        std::vector<std::string> failures;

        auto uniform_graph(const Graph & g, const std::string & what) -> void
        {
            if (g.size() < 3 || ! is_connected(g))
                return;
            ++uniform_graphs;
            if (! is_two_connected(g))
                failures.push_back(what + " is uniform but not 2-connected");
        }

        auto search(const SearchReport & r) -> void
        {
            for (auto & s : r.found)
                uniform_graph(blow_up(s).graph(), "search hit " + describe(s));
            if (r.found.empty()) {
                ++empty_claims;
                if (! r.exhausted)
                    failures.push_back("empty search over " + serialize_graph6(r.base) + " was not exhausted");
            }
        }
    };

    class Suite
    {
        private:
            const VerifyOptions & _options;
            Sanity _sanity;
            std::vector<BlowupSpec> _corpus;

            auto uniform(const BlowupSpec & spec) -> Uniformity
            {
                auto g = blow_up(spec).graph();
                auto u = is_betweenness_uniform(g);
                if (u.uniform)
                    _sanity.uniform_graph(g, describe(spec));
                return u;
            }

            auto budget(PartFamily family, int size) const -> SearchBudget
            {
                SearchBudget b;
                b.family = family;
                b.max_part_size = size;
                return b;
            }

            auto search_options() const -> SearchOptions
            {
                SearchOptions o;
                o.jobs = _options.jobs;
                return o;
            }

        public:
            explicit Suite(const VerifyOptions & options) :
                _options(options),
                _corpus(random_tree_blowup_corpus(acceptance_corpus_seed, acceptance_corpus_size))
            {
            }

            auto oracle_equivalence(Recorder & r) -> void
            {
                std::vector<Graph> graphs{ Graph(0) };
                for (int n = 1 ; n <= max_enumerated_graph_order ; ++n)
                    for (auto & g : enumerate_graphs(n))
                        graphs.push_back(g);

                for (auto & g : graphs) {
                    auto exact = betweenness_exact(g);
                    r.expect(exact == betweenness_oracle(g), "mismatch on " + serialize_graph6(g));
                    if (uniformity_of(exact).uniform)
                        _sanity.uniform_graph(g, "graph " + serialize_graph6(g));
                }
                r.result.detail = std::to_string(graphs.size()) + " isomorphism classes on at most "
                    + std::to_string(max_enumerated_graph_order) + " vertices";
            }

            auto p3_single(Recorder & r) -> void
            {
                BlowupSpec spec{ path_graph(3), { PartDescriptor::clique(1), PartDescriptor::independent(2),
                    PartDescriptor::clique(1) } };
                auto g = blow_up(spec).graph();
                auto u = uniformity_of(betweenness_oracle(g));
                r.expect(is_isomorphic(g, cycle_graph(4)), "P3[K1,I2,K1] is not C4");
                r.expect(u.uniform && u.common == Rational(1, 2), "P3[K1,I2,K1] is not uniform with value 1/2");
                if (u.uniform)
                    _sanity.uniform_graph(g, describe(spec));
                r.result.detail = "P3[K1,I2,K1] = C4, common value "
                    + (u.common ? u.common->to_string() : std::string("none"));
            }

            auto p3_family(Recorder & r) -> void
            {
                for (int a = 1 ; a <= 6 ; ++a)
                    for (int b = 1 ; b <= 6 ; ++b)
                        r.expect(uniform(p3_independent_spec(a, b)).uniform,
                                "P3[I" + std::to_string(a) + ",I" + std::to_string(a + b) + ",I"
                                + std::to_string(b) + "] is not uniform");
                r.result.detail = std::to_string(r.checked) + " specs P3[I_a,I_a+b,I_b], 1 <= a,b <= 6";
            }

            auto stars(Recorder & r) -> void
            {
                long controls = 0;
                for (int k = 1 ; k <= 4 ; ++k) {
                    std::vector<int> sizes(k, 1);
                    while (true) {
                        auto spec = star_spec(sizes);
                        r.expect(uniform(spec).uniform, describe(spec) + " is not uniform");

                        int centre = spec.parts.back().size();
                        for (int perturbed : { centre - 1, centre + 1 }) {
                            if (perturbed < 1)
                                continue;
                            auto control = spec;
                            control.parts.back() = PartDescriptor::independent(perturbed);
                            ++controls;
                            r.expect(! uniform(control).uniform, "control " + describe(control) + " is uniform");
                        }

                        int i = 0;
                        while (i < k && sizes[i] == 4)
                            sizes[i++] = 1;
                        if (i == k)
                            break;
                        ++sizes[i];
                    }
                }
                r.result.detail = std::to_string(r.checked - controls) + " star specs with k <= 4 and sizes <= 4, "
                    + std::to_string(controls) + " perturbed controls";
            }

            auto p2_family(Recorder & r) -> void
            {
                for (int m = 1 ; m <= 8 ; ++m) {
                    auto u = uniform(p2_clique_spec(m));
                    r.expect(u.uniform && u.common == Rational(0), "P2[K" + std::to_string(m) + ",K"
                            + std::to_string(m) + "] is not uniform with value 0");
                }
                r.result.detail = "P2[K_m,K_m] for m <= 8, common value 0";
            }

            auto decomposition_identity(Recorder & r) -> void
            {
                for (auto & spec : _corpus) {
                    auto bg = blow_up(spec);
                    auto exact = betweenness_exact(bg.graph());
                    if (uniformity_of(exact).uniform)
                        _sanity.uniform_graph(bg.graph(), describe(spec));
                    try {
                        auto all = decompose_all(bg);
                        for (auto & d : all)
                            r.expect(d.total() == exact.values[d.vertex], describe(spec) + " vertex "
                                    + std::to_string(d.vertex) + ": " + d.total().to_string() + " != "
                                    + exact.values[d.vertex].to_string());
                    }
                    catch (const std::logic_error & e) {
                        r.fail(describe(spec) + ": " + e.what());
                    }
                }
                r.result.detail = std::to_string(_corpus.size()) + " random specs (seed "
                    + std::to_string(acceptance_corpus_seed) + "), " + std::to_string(r.checked) + " vertices";
            }

            auto closed_forms(Recorder & r) -> void
            {
                long neighbour_checks = 0, exact_global = 0, bounded_global = 0, differential = 0;
                for (auto & spec : _corpus) {
                    auto bg = blow_up(spec);
                    auto & base = bg.base();
                    auto all = decompose_all(bg);
                    auto name = describe(spec);

                    for (auto & d : all)
                        for (auto & [j, value] : d.neighbor_locals) {
                            ++neighbour_checks;
                            auto closed = closed_form_neighbor_contribution(bg, d.part, j);
                            r.expect(closed == value, name + " vertex " + std::to_string(d.vertex) + " neighbour part "
                                    + std::to_string(j) + ": closed form " + closed.to_string() + " != "
                                    + value.to_string());
                        }

                    for (int leaf = 0 ; leaf < base.size() ; ++leaf) {
                        if (base.degree(leaf) != 1)
                            continue;
                        int middle = base.neighbours(leaf)[0];
                        long leaf_size = spec.parts[leaf].size(), middle_size = spec.parts[middle].size();
                        long total = bg.graph().size();
                        Rational formula(leaf_size * (total - leaf_size - middle_size), middle_size);

                        for (int y : bg.part_vertices(middle)) {
                            auto & global = all[y].global_part;
                            if (base.degree(middle) <= 2) {
                                ++exact_global;
                                r.expect(global_leaf_neighbor_formula(bg, y) == global, name + " vertex "
                                        + std::to_string(y) + ": global formula " + formula.to_string() + " != "
                                        + global.to_string());
                            }
                            else {
                                ++bounded_global;
                                r.expect(formula <= global, name + " vertex " + std::to_string(y)
                                        + ": leaf pairs alone exceed the global part");
                            }

                            for (int x : bg.part_vertices(leaf)) {
                                ++differential;
                                auto & dx = all[x];
                                auto & dy = all[y];
                                r.expect(dy.neighbor_locals.at(leaf) - dx.own_local == local_differential(bg, x)
                                        && dx.neighbor_locals.at(middle) - dy.own_local == local_differential(bg, y),
                                        name + " pair " + std::to_string(x) + "," + std::to_string(y)
                                        + ": local differential mismatch");
                            }
                        }
                    }
                }
                r.result.detail = std::to_string(neighbour_checks) + " neighbour-part sums, "
                    + std::to_string(exact_global) + " global formula matches, " + std::to_string(bounded_global)
                    + " lower bounds at branching parts, " + std::to_string(differential) + " leaf pairs";
            }

            auto lemmas(Recorder & r) -> void
            {
                for (int m = 1 ; m <= 4 ; ++m)
                    for (int p = 1 ; p <= 3 ; ++p)
                        for (int q = 1 ; q <= 3 ; ++q)
                            for (int s = 1 ; s <= 3 ; ++s) {
                                auto point = std::to_string(p) + "," + std::to_string(q) + "," + std::to_string(s);
                                auto independent = verify_lemma_independent(m, p, q, s);
                                r.expect(independent.holds, "P4[K_a,H,I_c,K_d] m=" + std::to_string(m) + " (a,c,d)=("
                                        + point + "): I_m gives " + independent.extreme_delta.to_string()
                                        + ", maximum " + independent.max_delta.to_string());
                                auto clique = verify_lemma_clique(m, p, q, s);
                                r.expect(clique.holds, "P4[H,I_b,I_c,K_d] m=" + std::to_string(m) + " (b,c,d)=("
                                        + point + "): K_m gives " + clique.extreme_delta.to_string()
                                        + ", maximum " + clique.max_delta.to_string());
                            }
                r.result.detail = std::to_string(r.checked) + " grid points, m <= 4, context sizes in {1,2,3}";
            }

            auto p4(Recorder & r) -> void
            {
                long tuples = 0;
                for (long a = 1 ; a <= 20 ; ++a)
                    for (long b = 1 ; b <= 20 ; ++b)
                        for (long c = 1 ; c <= 20 ; ++c)
                            for (long d = 1 ; d <= 20 ; ++d) {
                                ++tuples;
                                P4SizeTuple t{ a, b, c, d };
                                try {
                                    r.expect(p4_infeasibility_check(t).combined_violated, "tuple ("
                                            + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c)
                                            + "," + std::to_string(d) + ") not infeasible");
                                }
                                catch (const std::logic_error & e) {
                                    r.fail(e.what());
                                }
                            }

                int size = _options.level == VerifyLevel::full ? 6 : 4;
                auto report = search_blowups(path_graph(4), budget(PartFamily::ik_only, size), search_options());
                _sanity.search(report);
                r.expect(report.found.empty() && report.exhausted, "search over P4 found "
                        + std::to_string(report.found.size()) + (report.exhausted ? "" : " without finishing"));
                for (auto & s : report.found)
                    r.result.notes.push_back("hit " + describe(s));
                r.result.detail = std::to_string(tuples) + " size tuples; P4 search up to size "
                    + std::to_string(size) + ": " + std::to_string(report.specs_examined) + " specs, "
                    + std::to_string(report.found.size()) + " found";
            }

            auto trees(Recorder & r) -> void
            {
                long searched = 0;
                std::uint64_t specs = 0;
                auto run = [&] (int n_max, PartFamily family, int size) {
                    for (auto & v : verify_tree_theorem(n_max, budget(family, size), search_options())) {
                        if (v.construction && v.construction_uniform)
                            _sanity.uniform_graph(blow_up(*v.construction).graph(), describe(*v.construction));
                        if (! v.search)
                            continue;
                        ++searched;
                        specs += v.search->specs_examined;
                        _sanity.search(*v.search);
                        r.expect(v.search->found.empty() && v.search->exhausted, "tree " + serialize_graph6(v.tree)
                                + " (" + std::string(part_family_name(family)) + ", size " + std::to_string(size)
                                + "): " + std::to_string(v.search->found.size()) + " found"
                                + (v.search->exhausted ? "" : ", not exhausted"));
                    }
                };
                run(6, PartFamily::ik_only, 4);
                run(5, PartFamily::all_graphs, 3);
                r.result.detail = std::to_string(searched) + " tree searches of diameter >= 3, "
                    + std::to_string(specs) + " specs";
            }

            auto cut_conjecture(Recorder & r) -> void
            {
                long hits = 0;
                auto reports = explore_cut_conjecture(5, budget(PartFamily::ik_only, 4), search_options());
                for (auto & report : reports) {
                    _sanity.search(report);
                    r.expect(report.exhausted, "search over " + serialize_graph6(report.base) + " not exhausted");
                    for (auto & s : report.found) {
                        ++hits;
                        r.result.notes.push_back("COUNTEREXAMPLE " + describe(s));
                    }
                }
                r.result.detail = std::to_string(reports.size()) + " graphs with a cut vertex and diameter >= 3, "
                    + std::to_string(hits) + " hits";
            }

            auto sanity(Recorder & r) -> void
            {
                r.expect(_sanity.uniform_graphs > 0 && _sanity.empty_claims > 0, "nothing was collected");
                for (auto & f : _sanity.failures)
                    r.fail(f);
                r.result.detail = std::to_string(_sanity.uniform_graphs) + " uniform graphs 2-connected, "
                    + std::to_string(_sanity.empty_claims) + " empty searches exhausted";
            }
    };

    using Step = void (Suite::*)(Recorder &);

    struct Criterion
    {
        int number;
        const char * title;
        Step step;
    };

    // sanity goes last since it inspects what the others produced
    const Criterion criteria[] = {
        { 1, "exact and oracle betweenness agree", &Suite::oracle_equivalence },
        { 2, "P3[K1,I2,K1] is C4 with value 1/2", &Suite::p3_single },
        { 3, "P3[I_a,I_a+b,I_b] family", &Suite::p3_family },
        { 4, "star blow-ups and controls", &Suite::stars },
        { 5, "P2[K_m,K_m] family", &Suite::p2_family },
        { 6, "decomposition identity", &Suite::decomposition_identity },
        { 7, "neighbour-part and global closed forms", &Suite::closed_forms },
        { 8, "extremal part graphs maximise Delta", &Suite::lemmas },
        { 9, "no uniform blow-up of P4", &Suite::p4 },
        { 10, "no uniform blow-up of trees with diameter >= 3", &Suite::trees },
        { 12, "graphs with a cut vertex", &Suite::cut_conjecture },
        { 11, "uniform graphs are 2-connected, empty searches exhausted", &Suite::sanity },
    };
}

auto bbu::run_acceptance(const VerifyOptions & options) -> std::vector<CriterionResult>
{
    Suite suite(options);
    std::vector<CriterionResult> results;
    for (auto & c : criteria) {
        Recorder r;
        r.result.number = c.number;
        r.result.title = c.title;
        auto start = std::chrono::steady_clock::now();
        try {
            (suite.*c.step)(r);
            r.result.passed = r.failed == 0;
        }
        catch (const std::exception & e) {
            r.result.passed = false;
            r.result.notes.push_back(std::string("error: ") + e.what());
        }
        if (r.failed > static_cast<long>(max_notes))
            r.result.notes.push_back("... " + std::to_string(r.failed - static_cast<long>(max_notes)) + " more");
        r.result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (options.on_result)
            options.on_result(r.result);
        results.push_back(std::move(r.result));
    }
    std::sort(results.begin(), results.end(), [] (auto & a, auto & b) { return a.number < b.number; });
    return results;
}

auto bbu::format_result(const CriterionResult & r) -> std::string
{
    char time[32];
    std::snprintf(time, sizeof(time), "%.1fs", r.seconds);
    std::string line = std::string(r.passed ? "PASS" : "FAIL") + "  " + (r.number < 10 ? " " : "")
        + std::to_string(r.number) + "  " + r.title;
    if (! r.detail.empty())
        line += ": " + r.detail;
    line += " (" + std::string(time) + ")";
    for (auto & note : r.notes)
        line += "\n        " + note;
    return line;
}
