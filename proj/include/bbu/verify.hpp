/* vim: set sw=4 sts=4 et : */

#ifndef BBU_VERIFY_HPP
#define BBU_VERIFY_HPP

#include <bbu/blowup.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bbu
{
    enum class VerifyLevel
    {
        quick,
        full
    };

    auto parse_verify_level(std::string_view name) -> std::optional<VerifyLevel>;

    constexpr int acceptance_criterion_count = 12;
    constexpr std::uint64_t acceptance_corpus_seed = 20240229;
    constexpr int acceptance_corpus_size = 200;

    struct CriterionResult
    {
        int number = 0;
        std::string title;
        bool passed = false;
        /// One line summary of what was checked.
        std::string detail;
        /// Failing cases, counterexamples and other lines worth printing.
        std::vector<std::string> notes;
        double seconds = 0.0;
    };

    struct VerifyOptions
    {
        VerifyLevel level = VerifyLevel::quick;
        int jobs = 1;
        /// Called as each criterion finishes, in the order they are run.
        std::function<void (const CriterionResult &)> on_result;
    };

    /// Random blow-up specs over tree bases on 2..5 vertices with parts drawn
    /// from every graph on at most three vertices. Deterministic for a seed.
    auto random_tree_blowup_corpus(std::uint64_t seed, int count) -> std::vector<BlowupSpec>;

    /// Runs every criterion and returns the results ordered by number. The
    /// two-connectivity and exhaustion sanity criterion looks at everything
    /// the other criteria produced, so it is evaluated last.
    auto run_acceptance(const VerifyOptions & options) -> std::vector<CriterionResult>;

    /// "PASS  3  title: detail" style line.
    auto format_result(const CriterionResult & r) -> std::string;
}

#endif
