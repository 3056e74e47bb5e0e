/* vim: set sw=4 sts=4 et : */

#include <doctest.h>

#include <bbu/constructions.hpp>
#include <bbu/errors.hpp>
#include <bbu/generators.hpp>
#include <bbu/graph_io.hpp>
#include <bbu/json_io.hpp>
#include <bbu/properties.hpp>
#include <bbu/verify.hpp>

using namespace bbu;

TEST_CASE("profile json")
{
    auto j = to_json(betweenness_exact(path_graph(3)));
    CHECK(j.dump() == R"({"n":3,"values":["0","1","0"],"uniform":false,"common":null})");

    auto c4 = to_json(betweenness_exact(cycle_graph(4)));
    CHECK(c4["common"] == "1/2");
    CHECK(c4["uniform"] == true);

    CHECK(to_json(betweenness_exact(Graph(0))).dump() == R"({"n":0,"values":[],"uniform":true,"common":null})");
}

TEST_CASE("spec json round trip")
{
    BlowupSpec spec{ path_graph(4), { PartDescriptor::clique(2), PartDescriptor::from_graph(path_graph(3)),
        PartDescriptor::independent(1), PartDescriptor::independent(4) } };
    auto j = to_json(spec);
    CHECK(j["base"] == serialize_graph6(path_graph(4)));
    CHECK(j["parts"][0].dump() == R"({"kind":"K","size":2})");
    CHECK(j["parts"][1]["kind"] == "X");
    CHECK(parse_blowup_spec(j.dump()) == spec);
    CHECK(parse_blowup_spec(j.dump(2)) == spec);
}

TEST_CASE("spec json errors")
{
    auto parse_error_at = [] (const std::string & text) -> std::size_t {
        try {
            parse_blowup_spec(text);
        }
        catch (const ParseError & e) {
            return e.offset();
        }
        return std::string::npos;
    };

    CHECK(parse_error_at(R"({"base": "Bg", )") != std::string::npos);
    CHECK(parse_error_at("[1, 2") == 5);
    CHECK_THROWS_AS(parse_blowup_spec("[]"), ParseError);
    CHECK_THROWS_AS(parse_blowup_spec(R"({"parts": []})"), ParseError);
    CHECK_THROWS_AS(parse_blowup_spec(R"({"base": 3, "parts": []})"), ParseError);
    CHECK_THROWS_AS(parse_blowup_spec(R"({"base": "Bg"})"), ParseError);
    CHECK_THROWS_AS(parse_blowup_spec(R"({"base": "B!", "parts": []})"), ParseError);
    CHECK_THROWS_AS(parse_blowup_spec(R"({"base": "Bg", "parts": [{"kind": "Z", "size": 1}, {"kind": "I", "size": 1}, {"kind": "I", "size": 1}]})"), ParseError);
    CHECK_THROWS_AS(parse_blowup_spec(R"({"base": "Bg", "parts": [{"kind": "I", "size": "2"}, {"kind": "I", "size": 1}, {"kind": "I", "size": 1}]})"), ParseError);
    CHECK_THROWS_AS(parse_blowup_spec(R"({"base": "Bg", "parts": [{"kind": "X"}, {"kind": "I", "size": 1}, {"kind": "I", "size": 1}]})"), ParseError);
    CHECK_THROWS_AS(parse_blowup_spec(R"({"base": "Bg", "parts": [{"kind": "I", "size": 0}, {"kind": "I", "size": 1}, {"kind": "I", "size": 1}]})"), PreconditionError);
    CHECK_THROWS_AS(parse_blowup_spec(R"({"base": "Bg", "parts": [{"kind": "I", "size": 1}]})"), PreconditionError);
    CHECK_THROWS_AS(parse_blowup_spec(R"({"base": "B?", "parts": [{"kind": "I", "size": 1}, {"kind": "I", "size": 1}, {"kind": "I", "size": 1}]})"), PreconditionError);
}

TEST_CASE("blown graph and decomposition json")
{
    auto bg = blow_up(p3_independent_spec(1, 1));
    auto j = to_json(bg);
    CHECK(j["n"] == 4);
    CHECK(j["edges"] == 4);
    CHECK(j["part_of"].dump() == "[0,1,1,2]");
    CHECK(is_two_connected(parse_graph6(j["graph6"].get<std::string>())));

    auto d = to_json(decompose_betweenness(bg, 0));
    CHECK(d.dump() == R"({"vertex":0,"part":0,"global":"0","own_local":"0",)"
            R"("neighbor_locals":[{"part":1,"value":"1/2"}],"total":"1/2"})");
}

TEST_CASE("search report json and summary")
{
    SearchBudget budget;
    budget.max_part_size = 2;
    auto report = search_blowups(path_graph(3), budget);
    auto j = to_json(report);
    CHECK(j["budget"].dump() == R"({"family":"ik","max_part_size":2,"max_total_vertices":1048576,"time_limit_seconds":null})");
    CHECK(j["found_count"] == 1);
    CHECK(j["exhausted"] == true);
    CHECK(parse_blowup_spec(j["found"][0].dump()) == p3_independent_spec(1, 1));
    CHECK(summary_tsv(report) == "Bg\t18\t1\ttrue");
}

TEST_CASE("acceptance corpus")
{
    auto a = random_tree_blowup_corpus(acceptance_corpus_seed, 50);
    auto b = random_tree_blowup_corpus(acceptance_corpus_seed, 50);
    CHECK(a == b);
    CHECK(a != random_tree_blowup_corpus(acceptance_corpus_seed + 1, 50));
    int sizes[6] = {};
    for (auto & s : a) {
        CHECK(is_tree(s.base));
        CHECK(s.base.size() >= 2);
        CHECK(s.base.size() <= 5);
        ++sizes[s.base.size()];
        for (auto & p : s.parts)
            CHECK(p.size() <= 3);
    }
    for (int n = 2 ; n <= 5 ; ++n)
        CHECK(sizes[n] > 0);

    CHECK(parse_verify_level("full") == VerifyLevel::full);
    CHECK(! parse_verify_level("slow"));
}
