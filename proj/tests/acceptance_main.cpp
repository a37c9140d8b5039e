#include "p2stab/acceptance.hpp"

#include <cstdlib>
#include <iostream>
#include <string>

// One line per criterion; exit status 1 if any criterion fails.
int main(int argc, char** argv) {
    p2stab::Level level = p2stab::Level::full;
    if (argc > 1) level = p2stab::parse_level(argv[1]);
    int failed = 0;
    p2stab::run_acceptance(level, 0, [&](const p2stab::CriterionResult& r) {
        std::cout << p2stab::format_result(r) << std::endl;
        if (!r.pass) ++failed;
    });
    std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
    return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
