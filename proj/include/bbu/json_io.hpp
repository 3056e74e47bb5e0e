/* vim: set sw=4 sts=4 et : */

#ifndef BBU_JSON_IO_HPP
#define BBU_JSON_IO_HPP

#include <bbu/betweenness.hpp>
#include <bbu/blowup.hpp>
#include <bbu/search.hpp>

#include <json.hpp>

#include <string>
#include <string_view>

namespace bbu
{
    using Json = nlohmann::ordered_json;

    auto to_json(const Rational & r) -> Json;
    auto to_json(const Uniformity & u) -> Json;

    /// {"n", "values", "uniform", "common"}
    auto to_json(const BetweennessProfile & profile) -> Json;

    /// {"kind": "I"|"K", "size"} or {"kind": "X", "graph6"}
    auto to_json(const PartDescriptor & part) -> Json;
    auto to_json(const BlowupSpec & spec) -> Json;

    /// The blown graph as graph6 together with the spec and the part of each vertex.
    auto to_json(const BlownGraph & bg) -> Json;
    auto to_json(const Decomposition & d) -> Json;
    auto to_json(const SearchBudget & budget) -> Json;
    auto to_json(const SearchReport & report) -> Json;

    /// Throws ParseError for malformed JSON or a malformed part list, and
    /// PreconditionError if the spec does not describe a valid blow-up.
    auto parse_blowup_spec(std::string_view text) -> BlowupSpec;
    auto blowup_spec_from_json(const Json & j) -> BlowupSpec;

    /// base-graph6, examined, found, exhausted; tab separated, no newline.
    auto summary_tsv(const SearchReport & report) -> std::string;
}

#endif
