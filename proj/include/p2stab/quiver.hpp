#pragma once

// Right modules over the Beilinson algebras B = CQ/J and B' = CQ/J'.
//
// Q has vertices v0, v1, v2 with arrows gamma_i and delta_j. A module is
// recorded through the pull-back actions
//
//     N0 --gamma*_i--> N1 --delta*_j--> N2      (i, j = 0, 1, 2)
//
// so gamma[i] is an n1 x n0 matrix and delta[j] an n2 x n1 matrix. The path
// gamma_i delta_j acts as delta*_j o gamma*_i, and the relations read
//
//     B : delta*_j gamma*_i + delta*_i gamma*_j = 0  (all i, j; so delta*_i gamma*_i = 0)
//     B': delta*_j gamma*_i - delta*_i gamma*_j = 0  (i != j)

#include "p2stab/ktheory.hpp"
#include "p2stab/linalg.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace p2stab {

enum class Algebra { B, Bprime };

std::string to_string(Algebra a);
Algebra parse_algebra(const std::string& s);

struct ThetaVector {
    std::array<Rational, 3> w{0, 0, 0};

    Rational operator()(const DimensionVector& v) const;
    const Rational& operator[](std::size_t i) const { return w[i]; }
    Rational& operator[](std::size_t i) { return w[i]; }
    bool operator==(const ThetaVector&) const = default;

    ThetaVector operator+(const ThetaVector& o) const;
    ThetaVector operator-() const;
    std::string str() const;
};

ThetaVector operator*(const Rational& k, const ThetaVector& t);

/// (theta0, theta1, theta2) -> (-theta2, -theta1, -theta0): the weight that
/// pairs with duals of quotients exactly as theta pairs with submodules.
ThetaVector reverse_negate(const ThetaVector& t);

using Dims = std::array<std::size_t, 3>;

class QuiverRep {
public:
    QuiverRep(Algebra algebra, Field field, Dims dims, std::array<Matrix, 3> gamma, std::array<Matrix, 3> delta);

    static QuiverRep zero(Algebra algebra, Field field = Field::rationals());

    Algebra algebra() const { return algebra_; }
    const Field& field() const { return field_; }
    const Dims& dims() const { return dims_; }
    std::size_t dim(std::size_t vertex) const { return dims_[vertex]; }
    std::size_t total_dim() const { return dims_[0] + dims_[1] + dims_[2]; }
    DimensionVector dimvec() const;

    const Matrix& gamma(std::size_t i) const { return gamma_[i]; }
    const Matrix& delta(std::size_t j) const { return delta_[j]; }
    const std::array<Matrix, 3>& gammas() const { return gamma_; }
    const std::array<Matrix, 3>& deltas() const { return delta_; }

    /// Map of the composite delta*_j o gamma*_i : N0 -> N2.
    Matrix composite(std::size_t i, std::size_t j) const;

    bool operator==(const QuiverRep&) const = default;

private:
    Algebra algebra_;
    Field field_;
    Dims dims_;
    std::array<Matrix, 3> gamma_;
    std::array<Matrix, 3> delta_;
};

struct RelationCheck {
    bool ok = true;
    std::optional<std::pair<int, int>> violation;  // first failing (i, j)
};

RelationCheck check_relations(const QuiverRep& rep);

/// The simple module C v_i.
QuiverRep simple(Algebra algebra, std::size_t vertex, Field field = Field::rationals());
QuiverRep direct_sum(const QuiverRep& a, const QuiverRep& b);

/// Subspaces U0, U1, U2 given by spanning columns.
struct SubspaceTriple {
    std::array<Matrix, 3> basis;

    DimensionVector dims() const;
};

SubspaceTriple canonical(const SubspaceTriple& t, const Field& f);
std::string key(const SubspaceTriple& t);

bool is_invariant(const QuiverRep& rep, const SubspaceTriple& u);
QuiverRep sub_from(const QuiverRep& rep, const SubspaceTriple& u);
QuiverRep quotient_by(const QuiverRep& rep, const SubspaceTriple& u);

/// A morphism f = (f0, f1, f2) with f1 gamma_i = gamma_i f0, f2 delta_j = delta_j f1.
using Morphism = std::array<Matrix, 3>;

std::vector<Morphism> hom_space(const QuiverRep& a, const QuiverRep& b);
bool is_morphism(const QuiverRep& a, const QuiverRep& b, const Morphism& f);

struct IsoResult {
    bool isomorphic = false;
    bool certain = false;          // an explicit isomorphism was found, or no candidate exists
    double failure_bound = 0;      // probability that "false" is wrong
    int samples = 0;
    std::optional<Morphism> witness;
};

/// Random linear combinations of a Hom basis, tested for vertexwise
/// invertibility (Schwartz-Zippel); exhaustive over small prime fields.
IsoResult iso_test(const QuiverRep& a, const QuiverRep& b, std::uint64_t seed = 0);

QuiverRep dualize(const QuiverRep& rep);

/// B -> B': M0 = N0, M1 = N2, M2 = coker(delta_V : N1 -> N2 (x) V).
QuiverRep tilt_B_to_Bprime(const QuiverRep& n);

struct TiltResult {
    QuiverRep rep;
    bool generic = true;  // delta^V : M1 (x) V -> M2 was surjective
};

/// B' -> B: N0 = M0, N1 = ker(delta^V), N2 = M1.
TiltResult tilt_Bprime_to_B(const QuiverRep& m);

/// (theta0, theta1, theta2) -> (theta0, 3 theta1 + theta2, -theta1).
ThetaVector theta_transform(const ThetaVector& theta);

}  // namespace p2stab
