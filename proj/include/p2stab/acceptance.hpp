#pragma once

// The acceptance suite, shared by `p2stab selftest` and the acceptance test
// binary. Each criterion reports one pass/fail line.

#include "p2stab/geometry.hpp"
#include "p2stab/quiver.hpp"

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

namespace p2stab {

enum class Level { quick, full };
Level parse_level(const std::string& s);

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0;
};

/// Runs criteria 1-12, then the runtime criterion for the level itself.
/// `progress` sees each result as soon as it is known.
std::vector<CriterionResult> run_acceptance(Level level, std::uint64_t seed = 0,
                                            const std::function<void(const CriterionResult&)>& progress = {});

std::string format_result(const CriterionResult& r);

// Random inputs shared with the unit tests.

/// Random gamma, then a random delta from the solution space of the relations.
QuiverRep random_relation_rep(Algebra algebra, const Field& field, const Dims& dims, std::mt19937_64& rng);
/// n distinct points with small rational coordinates; `collinear` forces a line.
PointConfig random_config(std::size_t n, std::mt19937_64& rng, bool collinear = false);
Rational random_rational(std::mt19937_64& rng, long num_bound, long den_bound);

}  // namespace p2stab
