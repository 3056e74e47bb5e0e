/* vim: set sw=4 sts=4 et : */

#include <bbu/cli.hpp>
#include <bbu/betweenness.hpp>
#include <bbu/blowup.hpp>
#include <bbu/constructions.hpp>
#include <bbu/enumerate.hpp>
#include <bbu/errors.hpp>
#include <bbu/graph_io.hpp>
#include <bbu/json_io.hpp>
#include <bbu/search.hpp>
#include <bbu/verify.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace bbu;

namespace
{
    struct InputError : std::runtime_error
    {
        using std::runtime_error::runtime_error;
    };

    /// An existing file is read, anything else is taken as the text itself.
    auto input_text(const std::string & value, bool literal) -> std::string
    {
        if (literal || ! std::filesystem::is_regular_file(value))
            return value;
        std::ifstream in(value, std::ios::binary);
        if (! in)
            throw InputError("cannot read " + value);
        std::ostringstream buffer;
        buffer << in.rdbuf();
        return buffer.str();
    }

    auto print(std::ostream & out, const Json & j) -> void
    {
        out << j.dump(2) << '\n';
    }

    struct Arguments
    {
        std::string graph;
        std::string spec;
        bool literal = false;
        int vertex = 0;
        std::string construction;
        std::vector<int> sizes;
        std::string family = "ik";
        int max_size = 0;
        int max_vertices = 1 << 20;
        int jobs = 1;
        double time_limit = 0.0;
        bool no_prune = false;
        std::string format = "json";
        std::string level = "quick";
        std::string what;
        int order = 0;
    };

    auto construct(const Arguments & a) -> BlowupSpec
    {
        auto need = [&] (std::size_t count) {
            if (a.sizes.size() != count)
                throw CLI::ValidationError("construct " + a.construction + " takes " + std::to_string(count)
                        + " size" + (count == 1 ? "" : "s"));
        };
        if (a.construction == "p2") {
            need(1);
            return p2_clique_spec(a.sizes[0]);
        }
        if (a.construction == "p3") {
            need(2);
            return p3_independent_spec(a.sizes[0], a.sizes[1]);
        }
        if (a.sizes.empty())
            throw CLI::ValidationError("construct star needs at least one leaf size");
        return star_spec(a.sizes);
    }

    auto dispatch(CLI::App & app, const Arguments & a, std::ostream & out, std::ostream & err) -> int
    {
        auto graph = [&] { return parse_graph_text(input_text(a.graph, a.literal)); };
        auto spec = [&] { return parse_blowup_spec(input_text(a.spec, a.literal)); };

        if (app.got_subcommand("bc")) {
            print(out, to_json(betweenness_exact(graph())));
            return exit_code::ok;
        }

        if (app.got_subcommand("uniform")) {
            auto u = is_betweenness_uniform(graph());
            print(out, to_json(u));
            return u.uniform ? exit_code::ok : exit_code::not_uniform;
        }

        if (app.got_subcommand("blowup")) {
            print(out, to_json(blow_up(spec())));
            return exit_code::ok;
        }

        if (app.got_subcommand("decompose")) {
            print(out, to_json(decompose_betweenness(blow_up(spec()), a.vertex)));
            return exit_code::ok;
        }

        if (app.got_subcommand("construct")) {
            auto s = construct(a);
            auto bg = blow_up(s);
            Json verification = to_json(is_betweenness_uniform(bg.graph()));
            verification["n"] = bg.graph().size();
            verification["graph6"] = serialize_graph6(bg.graph());
            Json j;
            j["spec"] = to_json(s);
            j["verification"] = std::move(verification);
            print(out, j);
            return exit_code::ok;
        }

        if (app.got_subcommand("search")) {
            SearchBudget budget;
            budget.family = *parse_part_family(a.family);
            budget.max_part_size = a.max_size;
            budget.max_total_vertices = a.max_vertices;
            if (a.time_limit > 0.0)
                budget.time_limit_seconds = a.time_limit;
            SearchOptions options;
            options.jobs = a.jobs;
            options.prune_small_parts = ! a.no_prune;

            auto report = search_blowups(graph(), budget, options);
            if (a.format == "tsv")
                out << summary_tsv(report) << '\n';
            else
                print(out, to_json(report));
            return exit_code::ok;
        }

        if (app.got_subcommand("verify-paper")) {
            VerifyOptions options;
            options.level = *parse_verify_level(a.level);
            options.jobs = a.jobs;
            auto results = run_acceptance(options);
            int failed = 0;
            for (auto & r : results) {
                out << format_result(r) << '\n';
                failed += r.passed ? 0 : 1;
            }
            out << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << '\n';
            if (failed > 0)
                err << "verify-paper: " << failed << " of " << results.size() << " criteria failed\n";
            return failed == 0 ? exit_code::ok : exit_code::internal;
        }

        if (app.got_subcommand("enum")) {
            auto graphs = a.what == "trees" ? enumerate_trees(a.order) : enumerate_graphs(a.order);
            for (auto & g : graphs)
                out << serialize_graph6(g) << '\n';
            return exit_code::ok;
        }

        err << app.help();
        return exit_code::usage;
    }
}

auto bbu::run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int
{
    CLI::App app{ "Exact betweenness centrality and betweenness-uniform blow-ups", "bbu" };
    app.require_subcommand(1, 1);
    Arguments a;

    auto graph_option = [&] (CLI::App * sub) {
        sub->add_option("-g,--graph", a.graph, "graph6 string, adjacency list, or a file holding either")->required();
        sub->add_flag("--literal", a.literal, "never treat the argument as a file path");
    };
    auto spec_option = [&] (CLI::App * sub) {
        sub->add_option("-s,--spec", a.spec, "blow-up spec as JSON text or a JSON file")->required();
        sub->add_flag("--literal", a.literal, "never treat the argument as a file path");
    };
    auto jobs_option = [&] (CLI::App * sub) {
        sub->add_option("--jobs", a.jobs, "worker threads (default: $BBU_JOBS or 1)")->check(CLI::PositiveNumber);
    };

    graph_option(app.add_subcommand("bc", "print the betweenness profile"));
    graph_option(app.add_subcommand("uniform", "test betweenness uniformity (exit 10 if not uniform)"));
    spec_option(app.add_subcommand("blowup", "build a blow-up and print it as graph6 with its parts"));

    auto decompose = app.add_subcommand("decompose", "split a vertex's betweenness by pair type");
    spec_option(decompose);
    decompose->add_option("-v,--vertex", a.vertex, "vertex of the blown-up graph")->required();

    auto construct = app.add_subcommand("construct", "print a known uniform construction and check it");
    construct->add_option("family", a.construction, "p2, p3 or star")->required()
        ->check(CLI::IsMember({ "p2", "p3", "star" }));
    construct->add_option("sizes", a.sizes, "p2: m; p3: a b; star: leaf part sizes")
        ->check(CLI::PositiveNumber);

    auto search = app.add_subcommand("search", "exhaustive search for uniform blow-ups of a base graph");
    graph_option(search);
    search->add_option("--family", a.family, "part family")->check(CLI::IsMember({ "ik", "all" }));
    search->add_option("--max-size", a.max_size, "largest part size")->required()->check(CLI::PositiveNumber);
    search->add_option("--max-vertices", a.max_vertices, "skip specs with more vertices")->check(CLI::PositiveNumber);
    search->add_option("--time-limit", a.time_limit, "seconds before giving up")->check(CLI::PositiveNumber);
    search->add_flag("--no-prune", a.no_prune, "also try size-one parts on cut vertices of the base");
    search->add_option("--format", a.format, "json report or a tsv summary line")
        ->check(CLI::IsMember({ "json", "tsv" }));
    jobs_option(search);

    auto verify = app.add_subcommand("verify-paper", "run the acceptance checks");
    verify->add_option("--level", a.level, "quick or full")->check(CLI::IsMember({ "quick", "full" }));
    jobs_option(verify);

    auto enumerate = app.add_subcommand("enum", "print one graph6 line per isomorphism class");
    enumerate->add_option("what", a.what, "trees or graphs")->required()
        ->check(CLI::IsMember({ "trees", "graphs" }));
    enumerate->add_option("-n", a.order, "number of vertices")->required();

    if (const char * env = std::getenv("BBU_JOBS") ; env && *env) {
        std::string value(env);
        std::size_t used = 0;
        int jobs = 0;
        try {
            jobs = std::stoi(value, &used);
        }
        catch (const std::exception &) {
        }
        if (used != value.size() || jobs < 1) {
            err << "BBU_JOBS must be a positive integer, got \"" << value << "\"\n";
            return exit_code::usage;
        }
        a.jobs = jobs;
    }

    try {
        std::vector<std::string> reversed(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
        std::reverse(reversed.begin(), reversed.end());
        app.parse(reversed);
        return dispatch(app, a, out, err);
    }
    catch (const CLI::ParseError & e) {
        int code = app.exit(e, out, err);
        return code == 0 ? exit_code::ok : exit_code::usage;
    }
    catch (const bbu::ParseError & e) {
        err << "malformed input: " << e.what() << '\n';
        return exit_code::malformed_input;
    }
    catch (const PreconditionError & e) {
        err << "invalid input: " << e.what() << '\n';
        return exit_code::malformed_input;
    }
    catch (const InputError & e) {
        err << e.what() << '\n';
        return exit_code::malformed_input;
    }
    catch (const std::exception & e) {
        err << "internal error: " << e.what() << '\n';
        return exit_code::internal;
    }
}
