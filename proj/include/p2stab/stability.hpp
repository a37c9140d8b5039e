#pragma once

// King theta-stability of quiver modules.
//
// Submodule dimension vectors are found by two layers:
//   Layer 1  explicit submodules over the module's own field, grown from
//            generated and "largest inside" seeds and closed under sums and
//            intersections. Every vector it reports is realized.
//   Layer 2  exhaustive enumeration of invariant subspaces over F_p. For a
//            module over F_p this is the exact answer. A module over Q is
//            reduced modulo primes avoiding its denominators; the reduction
//            of any rational submodule is a submodule of the same dimension,
//            so the intersection over primes is an upper bound.

#include "p2stab/quiver.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace p2stab {

struct SearchOptions {
    double budget = 4e6;       // subspaces visited per prime in Layer 2
    bool layer2 = true;
    int max_primes = 3;        // reductions tried for modules over Q
    int random_vectors = 4;    // per vertex, Layer 1
    std::size_t cap = 160;     // Layer 1 lattice size limit
    std::uint64_t seed = 0;
};

struct SubmoduleSearch {
    DimensionVector full;
    std::map<DimensionVector, SubspaceTriple> lower;  // realized, with witnesses
    std::optional<std::set<DimensionVector>> upper;   // Layer 2 bound
    std::vector<std::uint32_t> primes;                 // primes used by Layer 2
    bool complete = false;                             // lower == upper

    std::set<DimensionVector> dimvecs() const;
    std::string layers() const;
};

SubmoduleSearch submodule_search(const QuiverRep& rep, const SearchOptions& opt = {});

/// Layer 1 only; exposed for the oracle comparison.
std::map<DimensionVector, SubspaceTriple> layer1_submodules(const QuiverRep& rep, const SearchOptions& opt = {});
/// Layer 2 over the module's own prime field; nullopt when over budget.
std::optional<std::set<DimensionVector>> layer2_dimvecs(const QuiverRep& rep, double budget = 4e6);

/// Smallest submodule containing u / largest submodule contained in u.
SubspaceTriple generated_submodule(const QuiverRep& rep, const SubspaceTriple& u);
SubspaceTriple largest_submodule_inside(const QuiverRep& rep, const SubspaceTriple& u);

enum class Verdict { stable, semistable, unstable, theta_nonvanishing };
std::string to_string(Verdict v);

struct KingResult {
    Verdict verdict = Verdict::theta_nonvanishing;
    bool certified = false;
    std::string layers;
    std::optional<DimensionVector> witness;          // theta < 0 (unstable) or theta = 0 (strictly semistable)
    std::optional<SubspaceTriple> witness_subspaces;  // when realized explicitly
};

KingResult king_test(const QuiverRep& rep, const ThetaVector& theta, const SearchOptions& opt = {});
KingResult king_test(const SubmoduleSearch& search, const ThetaVector& theta);

struct JHResult {
    std::vector<QuiverRep> factors;
    bool certified = true;  // every factor certified stable
};

JHResult jh_factors(const QuiverRep& rep, const ThetaVector& theta, const SearchOptions& opt = {});

struct SEquivResult {
    bool equivalent = false;
    bool certain = true;
    std::vector<DimensionVector> factors_a;
    std::vector<DimensionVector> factors_b;
};

SEquivResult s_equiv(const QuiverRep& a, const QuiverRep& b, const ThetaVector& theta, const SearchOptions& opt = {});

}  // namespace p2stab
