/* vim: set sw=4 sts=4 et : */

#include <bbu/verify.hpp>

#include <algorithm>
#include <cstring>
#include <iostream>
#include <thread>

using namespace bbu;

auto main(int argc, char * argv[]) -> int
{
    VerifyOptions options;
    options.level = VerifyLevel::full;
    options.jobs = std::max(1u, std::thread::hardware_concurrency());
    if (argc == 2 && std::strcmp(argv[1], "--quick") == 0)
        options.level = VerifyLevel::quick;
    else if (argc != 1) {
        std::cerr << "usage: " << argv[0] << " [--quick]" << std::endl;
        return 2;
    }

    options.on_result = [] (const CriterionResult & r) {
        std::cout << format_result(r) << std::endl;
    };

    int failed = 0;
    for (auto & r : run_acceptance(options))
        failed += r.passed ? 0 : 1;

    std::cout << (failed == 0 ? "all " + std::to_string(acceptance_criterion_count) + " criteria passed"
            : std::to_string(failed) + " of " + std::to_string(acceptance_criterion_count) + " criteria failed")
        << std::endl;
    return failed == 0 ? 0 : 1;
}
