#pragma once

// Numerical Grothendieck lattice of P^2.
//
// A class is a triple (rank, degree, ch2) where degree is the coefficient of
// the hyperplane class H in c1 and ch2 is a half-integer. The canonical class
// is -3H throughout.

#include "p2stab/rational.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>

namespace p2stab {

/// A point of N(P^2) (x) Q; no integrality constraints.
struct NumClass {
    Rational r;
    Rational d;
    Rational s;

    bool operator==(const NumClass&) const = default;
};

NumClass operator+(const NumClass& a, const NumClass& b);
NumClass operator-(const NumClass& a, const NumClass& b);
NumClass operator-(const NumClass& a);
NumClass operator*(const Rational& k, const NumClass& a);

/// Lattice point of Z + Z + (1/2)Z. The constructor rejects triples whose
/// rank or degree is fractional or whose ch2 has denominator other than 1, 2.
class ChernCharacter {
public:
    ChernCharacter() = default;
    ChernCharacter(Rational r, Rational d, Rational s);
    ChernCharacter(std::int64_t r, std::int64_t d, const Rational& s)
        : ChernCharacter(Rational(static_cast<long>(r)), Rational(static_cast<long>(d)), s) {}

    static bool in_lattice(const NumClass& c);
    static ChernCharacter from(const NumClass& c);

    const Rational& r() const { return c_.r; }
    const Rational& d() const { return c_.d; }
    const Rational& s() const { return c_.s; }

    operator const NumClass&() const { return c_; }
    const NumClass& num() const { return c_; }

    bool operator==(const ChernCharacter&) const = default;

    std::string str() const;

private:
    NumClass c_{0, 0, 0};
};

ChernCharacter operator+(const ChernCharacter& a, const ChernCharacter& b);
ChernCharacter operator-(const ChernCharacter& a, const ChernCharacter& b);
ChernCharacter operator-(const ChernCharacter& a);
ChernCharacter operator*(std::int64_t k, const ChernCharacter& a);

ChernCharacter ch_line_bundle(std::int64_t m);  // ch(O(m))
ChernCharacter ch_cotangent(std::int64_t m);    // ch(Omega^1(m))
ChernCharacter ch_point();                      // ch(O_x)

struct DimensionVector {
    std::array<std::int64_t, 3> a{0, 0, 0};

    std::int64_t& operator[](std::size_t i) { return a[i]; }
    std::int64_t operator[](std::size_t i) const { return a[i]; }
    auto operator<=>(const DimensionVector&) const = default;

    DimensionVector operator-() const { return {{-a[0], -a[1], -a[2]}}; }
    DimensionVector operator+(const DimensionVector& o) const {
        return {{a[0] + o.a[0], a[1] + o.a[1], a[2] + o.a[2]}};
    }
    DimensionVector operator-(const DimensionVector& o) const { return *this + (-o); }
    bool is_zero() const { return a[0] == 0 && a[1] == 0 && a[2] == 0; }
    bool nonnegative() const { return a[0] >= 0 && a[1] >= 0 && a[2] >= 0; }
    std::int64_t total() const { return a[0] + a[1] + a[2]; }

    std::string str() const;
};

/// The exceptional hearts A_k = <O(k-1)[2], O(k)[1], O(k+1)> and
/// A'_k = <O(k-1)[2], Omega^1(k+1)[1], O(k)>. The basis holds the classes of
/// the three simple objects, shift signs included.
class HeartBasis {
public:
    enum class Kind { A, Aprime };

    static HeartBasis A(std::int64_t k);
    static HeartBasis Aprime(std::int64_t k);
    /// "A1", "A0", "A1p", "Ak:<k>", "Apk:<k>".
    static HeartBasis parse(const std::string& name);

    Kind kind() const { return kind_; }
    std::int64_t k() const { return k_; }
    const std::array<ChernCharacter, 3>& basis() const { return basis_; }
    std::string name() const;

private:
    HeartBasis(Kind kind, std::int64_t k);

    Kind kind_;
    std::int64_t k_;
    std::array<ChernCharacter, 3> basis_;
};

Rational mukai_pair(const NumClass& a, const NumClass& b);
Rational euler_chi(const NumClass& a, const NumClass& b);
NumClass twist(const NumClass& a, const Rational& k);
ChernCharacter twist(const ChernCharacter& a, std::int64_t k);

/// Slope value that may be +infinity (rank-zero classes).
struct Slope {
    bool infinite = false;
    Rational value;

    std::strong_ordering operator<=>(const Slope& o) const;
    bool operator==(const Slope& o) const;
    std::string str() const;
};

struct Slopes {
    Slope mu;
    std::optional<Rational> nu;  // empty for rank zero
};

Slopes slopes(const NumClass& a, const Rational& gamma);

/// Lexicographic (mu, nu_gamma) comparison of two positive-rank classes.
std::strong_ordering gieseker_compare(const NumClass& f, const NumClass& e, const Rational& gamma);

Rational bogomolov(const NumClass& a);
Rational expected_dim(const NumClass& a);

DimensionVector dimvec(const ChernCharacter& a, const HeartBasis& h);
ChernCharacter chern_of_dimvec(const DimensionVector& v, const HeartBasis& h);

}  // namespace p2stab
