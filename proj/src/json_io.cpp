/* vim: set sw=4 sts=4 et : */

#include <bbu/json_io.hpp>
#include <bbu/errors.hpp>
#include <bbu/graph_io.hpp>

using namespace bbu;

auto bbu::to_json(const Rational & r) -> Json
{
    return r.to_string();
}

auto bbu::to_json(const Uniformity & u) -> Json
{
    Json j;
    j["uniform"] = u.uniform;
    j["common"] = u.common ? to_json(*u.common) : Json(nullptr);
    return j;
}

auto bbu::to_json(const BetweennessProfile & profile) -> Json
{
    Json values = Json::array();
    for (auto & v : profile.values)
        values.push_back(to_json(v));

    auto u = uniformity_of(profile);
    Json j;
    j["n"] = profile.values.size();
    j["values"] = std::move(values);
    j["uniform"] = u.uniform;
    j["common"] = u.common ? to_json(*u.common) : Json(nullptr);
    return j;
}

auto bbu::to_json(const PartDescriptor & part) -> Json
{
    Json j;
    switch (part.kind()) {
        case PartKind::independent:
            j["kind"] = "I";
            j["size"] = part.size();
            break;
        case PartKind::clique:
            j["kind"] = "K";
            j["size"] = part.size();
            break;
        case PartKind::explicit_graph:
            j["kind"] = "X";
            j["graph6"] = serialize_graph6(part.graph());
            break;
    }
    return j;
}

auto bbu::to_json(const BlowupSpec & spec) -> Json
{
    Json parts = Json::array();
    for (auto & p : spec.parts)
        parts.push_back(to_json(p));
    Json j;
    j["base"] = serialize_graph6(spec.base);
    j["parts"] = std::move(parts);
    return j;
}

auto bbu::to_json(const BlownGraph & bg) -> Json
{
    Json j;
    j["graph6"] = serialize_graph6(bg.graph());
    j["n"] = bg.graph().size();
    j["edges"] = bg.graph().edge_count();
    j["spec"] = to_json(bg.spec());
    j["part_of"] = bg.part_of();
    return j;
}

auto bbu::to_json(const Decomposition & d) -> Json
{
    Json locals = Json::array();
    for (auto & [part, value] : d.neighbor_locals)
        locals.push_back(Json{ { "part", part }, { "value", to_json(value) } });

    Json j;
    j["vertex"] = d.vertex;
    j["part"] = d.part;
    j["global"] = to_json(d.global_part);
    j["own_local"] = to_json(d.own_local);
    j["neighbor_locals"] = std::move(locals);
    j["total"] = to_json(d.total());
    return j;
}

auto bbu::to_json(const SearchBudget & budget) -> Json
{
    Json j;
    j["family"] = std::string(part_family_name(budget.family));
    j["max_part_size"] = budget.max_part_size;
    j["max_total_vertices"] = budget.max_total_vertices;
    j["time_limit_seconds"] = budget.time_limit_seconds ? Json(*budget.time_limit_seconds) : Json(nullptr);
    return j;
}

auto bbu::to_json(const SearchReport & report) -> Json
{
    Json found = Json::array();
    for (auto & s : report.found)
        found.push_back(to_json(s));

    Json j;
    j["base"] = serialize_graph6(report.base);
    j["budget"] = to_json(report.budget);
    j["specs_examined"] = report.specs_examined;
    j["found_count"] = report.found.size();
    j["exhausted"] = report.exhausted;
    j["found"] = std::move(found);
    return j;
}

namespace
{
    auto field(const Json & j, const char * name, const std::string & where) -> const Json &
    {
        auto it = j.find(name);
        if (it == j.end())
            throw ParseError(where + ": missing \"" + name + "\"", 0);
        return *it;
    }

    auto graph6_field(const Json & j, const char * name, const std::string & where) -> Graph
    {
        auto & value = field(j, name, where);
        if (! value.is_string())
            throw ParseError(where + ": \"" + name + "\" must be a graph6 string", 0);
        return parse_graph6(value.get<std::string>());
    }

    auto part_from_json(const Json & j, std::size_t index) -> PartDescriptor
    {
        auto where = "part " + std::to_string(index);
        if (! j.is_object())
            throw ParseError(where + ": expected an object", 0);
        auto & kind = field(j, "kind", where);
        if (! kind.is_string())
            throw ParseError(where + ": \"kind\" must be a string", 0);
        auto k = kind.get<std::string>();

        if (k == "X")
            return PartDescriptor::from_graph(graph6_field(j, "graph6", where));
        if (k != "I" && k != "K")
            throw ParseError(where + ": unknown kind \"" + k + "\"", 0);

        auto & size = field(j, "size", where);
        if (! size.is_number_integer())
            throw ParseError(where + ": \"size\" must be an integer", 0);
        auto m = size.get<long long>();
        if (m < 1 || m > 1000000)
            throw PreconditionError(where + ": size " + std::to_string(m) + " out of range");
        return k == "I" ? PartDescriptor::independent(static_cast<int>(m)) : PartDescriptor::clique(static_cast<int>(m));
    }
}

auto bbu::blowup_spec_from_json(const Json & j) -> BlowupSpec
{
    if (! j.is_object())
        throw ParseError("blow-up spec must be a JSON object", 0);
    BlowupSpec spec{ graph6_field(j, "base", "spec"), {} };
    auto & parts = field(j, "parts", "spec");
    if (! parts.is_array())
        throw ParseError("spec: \"parts\" must be an array", 0);
    for (std::size_t i = 0 ; i < parts.size() ; ++i)
        spec.parts.push_back(part_from_json(parts[i], i));
    spec.validate();
    return spec;
}

auto bbu::parse_blowup_spec(std::string_view text) -> BlowupSpec
{
    Json j;
    try {
        j = Json::parse(text);
    }
    catch (const nlohmann::json::parse_error & e) {
        throw ParseError("malformed JSON", e.byte > 0 ? e.byte - 1 : 0);
    }
    return blowup_spec_from_json(j);
}

auto bbu::summary_tsv(const SearchReport & report) -> std::string
{
    return serialize_graph6(report.base) + "\t" + std::to_string(report.specs_examined) + "\t"
        + std::to_string(report.found.size()) + "\t" + (report.exhausted ? "true" : "false");
}
