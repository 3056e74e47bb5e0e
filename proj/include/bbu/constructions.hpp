/* vim: set sw=4 sts=4 et : */

#ifndef BBU_CONSTRUCTIONS_HPP
#define BBU_CONSTRUCTIONS_HPP

#include <bbu/blowup.hpp>

#include <span>

namespace bbu
{
    /// P_2[K_m, K_m].
    auto p2_clique_spec(int m) -> BlowupSpec;

    /// P_3[I_a, I_{a+b}, I_b].
    auto p3_independent_spec(int a, int b) -> BlowupSpec;

    /// S_k[I_{s_1}, ..., I_{s_k}, I_{s_1 + ... + s_k}] with the centre as the
    /// last base vertex.
    auto star_spec(std::span<const int> sizes) -> BlowupSpec;

    /// Sizes for P_4[K_a, I_b, I_c, K_d].
    struct P4SizeTuple
    {
        long a = 1, b = 1, c = 1, d = 1;
    };

    auto p4_spec(const P4SizeTuple & t) -> BlowupSpec;

    /// Largest entry accepted by p4_infeasibility_check; keeps every product
    /// inside 128 bits.
    constexpr long max_p4_entry = 1'000'000;

    struct P4InfeasibilityReport
    {
        /// C(b,2)/(a+c) >= a(c+d)/b + C(c,2)/(b+d)
        bool ineq1_holds = false;
        /// C(c,2)/(b+d) >= d(a+b)/c + C(b,2)/(a+c)
        bool ineq2_holds = false;
        /// ac(c+d) + bd(a+b) > 0
        bool combined_violated = false;
    };

    /// Evaluates both balance conditions exactly by cross-multiplication.
    /// Throws std::logic_error if both hold while the combination is positive.
    auto p4_infeasibility_check(const P4SizeTuple & t) -> P4InfeasibilityReport;
}

#endif
