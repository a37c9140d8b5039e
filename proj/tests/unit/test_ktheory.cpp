#include "helpers.hpp"

#include "p2stab/ktheory.hpp"

#include <random>

using namespace p2stab;
using namespace p2stab::test;

TEST_CASE("mukai pairing") {
    CHECK(mukai_pair(nc("1", "0", "0"), nc("1", "0", "0")) == 0);
    CHECK(mukai_pair(nc("0", "0", "1"), nc("1", "0", "0")) == -1);
    CHECK(mukai_pair(nc("1", "1", "1/2"), nc("1", "2", "2")) == q("-1/2"));
}

TEST_CASE("euler pairing") {
    CHECK(euler_chi(nc("1", "0", "0"), nc("1", "0", "0")) == 1);
    CHECK(euler_chi(nc("1", "0", "0"), nc("1", "1", "1/2")) == 3);
    CHECK(euler_chi(nc("1", "1", "1/2"), nc("1", "0", "0")) == 0);
    // h^0(O(m)) = (m+1)(m+2)/2 for m >= 0
    for (std::int64_t m = 0; m <= 6; ++m)
        CHECK(euler_chi(ch_line_bundle(0), ch_line_bundle(m)) == Rational((m + 1) * (m + 2) / 2));
    // Exceptional collection O, O(1), O(2): chi vanishes backwards
    CHECK(euler_chi(ch_line_bundle(2), ch_line_bundle(0)) == 0);
    CHECK(euler_chi(ch_line_bundle(1), ch_line_bundle(0)) == 0);
}

TEST_CASE("twist") {
    CHECK(twist(nc("1", "0", "0"), 1) == nc("1", "1", "1/2"));
    CHECK(twist(nc("2", "-3", "3/2"), 2) == nc("2", "1", "-1/2"));
    for (long m = -3; m <= 3; ++m) CHECK(twist(nc("0", "1", "-1/2"), Rational(m)) == NumClass{0, 1, Rational(m) - q("1/2")});
    CHECK(ch_cotangent(2) == ChernCharacter(2, 1, q("-1/2")));
}

TEST_CASE("twist is a group action and preserves the discriminant") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        NumClass a{Rational(static_cast<long>(rng() % 7) - 3), Rational(static_cast<long>(rng() % 9) - 4),
                   make_rational(static_cast<long>(rng() % 11) - 5, 2)};
        Rational k(static_cast<long>(rng() % 5) - 2), l(static_cast<long>(rng() % 5) - 2);
        CHECK(twist(twist(a, k), l) == twist(a, k + l));
        CHECK(bogomolov(twist(a, k)) == bogomolov(a));
        CHECK(mukai_pair(twist(a, k), twist(nc("1", "0", "0"), k)) == mukai_pair(a, nc("1", "0", "0")));
    }
}

TEST_CASE("slopes") {
    auto s = slopes(nc("1", "0", "0"), 0);
    CHECK(s.mu.value == 0);
    CHECK(*s.nu == 0);
    s = slopes(nc("1", "1", "1/2"), 0);
    CHECK(s.mu.value == 1);
    CHECK(*s.nu == 2);
    s = slopes(nc("2", "1", "0"), q("3/2"));
    CHECK(s.mu.value == q("1/2"));
    CHECK(*s.nu == 0);
    s = slopes(nc("0", "0", "1"), 0);
    CHECK(s.mu.infinite);
    CHECK_FALSE(s.nu.has_value());
}

TEST_CASE("gieseker comparison") {
    CHECK(gieseker_compare(nc("1", "1", "0"), nc("1", "1", "0"), 0) == std::strong_ordering::equal);
    CHECK(gieseker_compare(nc("1", "0", "0"), nc("1", "1", "1/2"), 0) == std::strong_ordering::less);
    CHECK(gieseker_compare(nc("1", "1", "0"), nc("1", "1", "1/2"), 0) == std::strong_ordering::less);
    CHECK(gieseker_compare(nc("2", "1", "0"), nc("1", "1", "0"), 0) == std::strong_ordering::less);
    CHECK_THROWS_AS(gieseker_compare(nc("1", "1", "1/2"), nc("0", "0", "1"), 0), Error);
}

TEST_CASE("bogomolov and expected dimension") {
    for (std::int64_t k = -3; k <= 3; ++k) CHECK(bogomolov(ch_line_bundle(k)) == 0);
    CHECK(bogomolov(nc("2", "3", "3/2")) == 3);
    for (std::int64_t n = 0; n <= 5; ++n) {
        const Rational qn(static_cast<long>(n));
        CHECK(bogomolov(NumClass{1, 0, -qn}) == 2 * qn);
        CHECK(expected_dim(NumClass{1, 1, q("1/2") - qn}) == 2 * qn);
        CHECK(expected_dim(NumClass{1, 0, -qn}) == 2 * qn);
    }
    CHECK(expected_dim(nc("1", "1", "1/2")) == 0);
}

TEST_CASE("lattice membership") {
    CHECK(ChernCharacter::in_lattice(nc("1", "1", "1/2")));
    CHECK_FALSE(ChernCharacter::in_lattice(nc("1", "1/2", "0")));
    CHECK_FALSE(ChernCharacter::in_lattice(nc("1", "0", "1/3")));
    CHECK_THROWS_AS(ChernCharacter(q("1/2"), 0, 0), Error);
}

TEST_CASE("dimension vectors in the heart bases") {
    CHECK(dimvec(ch_point(), HeartBasis::A(1)) == dv(1, 2, 1));
    for (std::int64_t n = 1; n <= 6; ++n) {
        ChernCharacter ideal(1, 1, q("1/2") - Rational(static_cast<long>(n)));
        CHECK(dimvec(ideal, HeartBasis::A(1)) == dv(-n, -2 * n - 1, -n));
        CHECK(dimvec(ideal, HeartBasis::A(0)) == dv(-n, -2 * n, 1 - n));
        CHECK(dimvec(ideal, HeartBasis::Aprime(1)) == dv(-n, -n, 1 - n));
    }
    CHECK(dimvec(ChernCharacter(1, 1, q("-3/2")), HeartBasis::A(1)) == dv(-2, -5, -2));
}

TEST_CASE("chern character of a dimension vector") {
    CHECK(chern_of_dimvec(dv(1, 0, 0), HeartBasis::A(1)) == ChernCharacter(1, 0, 0));
    CHECK(chern_of_dimvec(dv(0, 1, 0), HeartBasis::A(1)) == ChernCharacter(-1, -1, q("-1/2")));
    CHECK(chern_of_dimvec(dv(1, 2, 1), HeartBasis::A(1)) == ch_point());
}

TEST_CASE("dimvec and chern_of_dimvec are inverse") {
    std::mt19937_64 rng(11);
    for (const auto& h : {HeartBasis::A(0), HeartBasis::A(1), HeartBasis::A(-2), HeartBasis::Aprime(1), HeartBasis::Aprime(3)})
        for (int i = 0; i < 100; ++i) {
            DimensionVector v{{static_cast<std::int64_t>(rng() % 11) - 5, static_cast<std::int64_t>(rng() % 11) - 5,
                               static_cast<std::int64_t>(rng() % 11) - 5}};
            CHECK(dimvec(chern_of_dimvec(v, h), h) == v);
        }
}

TEST_CASE("dimvec reports classes outside the span of a heart basis") {
    // The A_k basis spans a sublattice of index 2; (0,1,0) is not an integral combination.
    CHECK_THROWS_AS(dimvec(ChernCharacter(0, 1, 0), HeartBasis::A(1)), Error);
}

TEST_CASE("heart names") {
    CHECK(HeartBasis::parse("A1").name() == "A1");
    CHECK(HeartBasis::parse("A0").name() == "A0");
    CHECK(HeartBasis::parse("A1p").name() == HeartBasis::Aprime(1).name());
    CHECK(HeartBasis::parse("Ak:-2").name() == "Ak:-2");
    CHECK(HeartBasis::parse("Apk:3").name() == "Apk:3");
    CHECK_THROWS_AS(HeartBasis::parse("B7"), Error);
}
