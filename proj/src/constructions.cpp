/* vim: set sw=4 sts=4 et : */

#include <bbu/constructions.hpp>
#include <bbu/errors.hpp>
#include <bbu/generators.hpp>

#include <numeric>
#include <stdexcept>
#include <string>

using namespace bbu;

auto bbu::p2_clique_spec(int m) -> BlowupSpec
{
    if (m < 1)
        throw PreconditionError("p2 clique size must be positive, got " + std::to_string(m));
    return BlowupSpec{ path_graph(2), { PartDescriptor::clique(m), PartDescriptor::clique(m) } };
}

auto bbu::p3_independent_spec(int a, int b) -> BlowupSpec
{
    if (a < 1 || b < 1)
        throw PreconditionError("p3 sizes must be positive, got " + std::to_string(a) + ", " + std::to_string(b));
    return BlowupSpec{ path_graph(3), {
        PartDescriptor::independent(a), PartDescriptor::independent(a + b), PartDescriptor::independent(b) } };
}

auto bbu::star_spec(std::span<const int> sizes) -> BlowupSpec
{
    if (sizes.empty())
        throw PreconditionError("star construction needs at least one leaf size");
    BlowupSpec result{ star_graph(static_cast<int>(sizes.size())), {} };
    for (int s : sizes) {
        if (s < 1)
            throw PreconditionError("star leaf sizes must be positive, got " + std::to_string(s));
        result.parts.push_back(PartDescriptor::independent(s));
    }
    result.parts.push_back(PartDescriptor::independent(std::accumulate(sizes.begin(), sizes.end(), 0)));
    return result;
}

namespace
{
    auto check_tuple(const P4SizeTuple & t) -> void
    {
        for (long x : { t.a, t.b, t.c, t.d })
            if (x < 1 || x > max_p4_entry)
                throw PreconditionError("P4 size tuple entries must lie in 1.." + std::to_string(max_p4_entry)
                        + ", got " + std::to_string(x));
    }
}

auto bbu::p4_spec(const P4SizeTuple & t) -> BlowupSpec
{
    check_tuple(t);
    return BlowupSpec{ path_graph(4), {
        PartDescriptor::clique(static_cast<int>(t.a)), PartDescriptor::independent(static_cast<int>(t.b)),
        PartDescriptor::independent(static_cast<int>(t.c)), PartDescriptor::clique(static_cast<int>(t.d)) } };
}

auto bbu::p4_infeasibility_check(const P4SizeTuple & t) -> P4InfeasibilityReport
{
    check_tuple(t);
    using Wide = __int128;
    Wide a = t.a, b = t.b, c = t.c, d = t.d;
    Wide b2 = b * (b - 1) / 2, c2 = c * (c - 1) / 2;

    P4InfeasibilityReport report;
    // both sides of the first condition times b (a+c) (b+d)
    report.ineq1_holds = b2 * b * (b + d) >= a * (c + d) * (a + c) * (b + d) + c2 * b * (a + c);
    // both sides of the second condition times c (a+c) (b+d)
    report.ineq2_holds = c2 * c * (a + c) >= d * (a + b) * (b + d) * (a + c) + b2 * c * (b + d);
    report.combined_violated = a * c * (c + d) + b * d * (a + b) > 0;

    if (report.ineq1_holds && report.ineq2_holds && report.combined_violated)
        throw std::logic_error("both P4 balance conditions hold although their combination is positive");
    return report;
}
