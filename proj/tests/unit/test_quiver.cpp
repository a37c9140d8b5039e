#include "helpers.hpp"

#include "p2stab/acceptance.hpp"
#include "p2stab/quiver.hpp"

#include <random>

using namespace p2stab;
using namespace p2stab::test;

namespace {

Matrix col2(long a, long b) { return Matrix(2, 1, {Rational(a), Rational(b)}); }
Matrix row2(long a, long b) { return Matrix(1, 2, {Rational(a), Rational(b)}); }

// O_x at [1:0:0] written out by hand.
QuiverRep hand_point(long delta2_sign = 1) {
    return QuiverRep(Algebra::B, Field::rationals(), {1, 2, 1}, {col2(0, 0), col2(1, 0), col2(0, 1)},
                     {row2(0, 0), row2(0, 1), row2(-delta2_sign, 0)});
}

QuiverRep scalar_rep(Algebra alg, const Point& x) {
    std::array<Matrix, 3> g, d;
    for (std::size_t i = 0; i < 3; ++i) {
        g[i] = Matrix(1, 1, {x[i]});
        d[i] = Matrix(1, 1, {x[i]});
    }
    return QuiverRep(alg, Field::rationals(), {1, 1, 1}, g, d);
}

}  // namespace

TEST_CASE("relation check") {
    CHECK(check_relations(scalar_rep(Algebra::Bprime, pt(1, 2, 3))).ok);
    CHECK(check_relations(hand_point()).ok);
    auto bad = check_relations(hand_point(-1));
    CHECK_FALSE(bad.ok);
    REQUIRE(bad.violation);
    CHECK(*bad.violation == std::pair<int, int>{1, 2});
    // commuting scalars violate the anticommutation relations of B
    CHECK_FALSE(check_relations(scalar_rep(Algebra::B, pt(1, 2, 3))).ok);
}

TEST_CASE("constructor validates shapes") {
    CHECK_THROWS_AS(QuiverRep(Algebra::B, Field::rationals(), {1, 2, 1}, {col2(0, 0), col2(1, 0), Matrix(1, 1)},
                              {row2(0, 0), row2(0, 1), row2(-1, 0)}),
                    Error);
}

TEST_CASE("direct sum, sub and quotient") {
    auto p = hand_point();
    auto s = direct_sum(p, p);
    CHECK(s.dimvec() == dv(2, 4, 2));
    CHECK(check_relations(s).ok);
    SubspaceTriple all{{full_space(1), full_space(2), full_space(1)}};
    CHECK(quotient_by(p, all).dimvec() == dv(0, 0, 0));
    SubspaceTriple top{{zero_space(1), zero_space(2), full_space(1)}};
    CHECK(is_invariant(p, top));
    CHECK(sub_from(p, top).dimvec() == dv(0, 0, 1));
    CHECK(quotient_by(p, top).dimvec() == dv(1, 2, 0));
    SubspaceTriple bottom{{full_space(1), zero_space(2), zero_space(1)}};
    CHECK_FALSE(is_invariant(p, bottom));
}

TEST_CASE("hom spaces") {
    for (auto alg : {Algebra::B, Algebra::Bprime}) {
        CHECK(hom_space(simple(alg, 1), simple(alg, 1)).size() == 1);
        CHECK(hom_space(simple(alg, 1), simple(alg, 2)).empty());
    }
    auto p = hand_point();
    CHECK(hom_space(p, p).size() == 1);
    CHECK(hom_space(simple(Algebra::B, 2), p).size() == 1);
    CHECK(hom_space(p, simple(Algebra::B, 0)).size() == 1);
    for (const auto& f : hom_space(direct_sum(p, simple(Algebra::B, 2)), direct_sum(p, p)))
        CHECK(is_morphism(direct_sum(p, simple(Algebra::B, 2)), direct_sum(p, p), f));
}

TEST_CASE("isomorphism test") {
    auto p = hand_point();
    CHECK(iso_test(p, p).isomorphic);
    CHECK_FALSE(iso_test(simple(Algebra::B, 0), simple(Algebra::B, 2)).isomorphic);
    CHECK(iso_test(simple(Algebra::B, 0), simple(Algebra::B, 2)).certain);
    // different affine representatives of the same point
    CHECK(iso_test(module_point(pt(1, 0, 0)), module_point(pt(-3, 0, 0))).isomorphic);
    CHECK(iso_test(module_point(pt(1, 2, 3)), module_point(pt(2, 4, 6))).isomorphic);
    CHECK(iso_test(module_point(pt(1, 0, 0)), p).isomorphic);
    auto r = iso_test(module_point(pt(1, 0, 0)), module_point(pt(0, 1, 0)));
    CHECK_FALSE(r.isomorphic);
    CHECK(r.certain);
}

TEST_CASE("duality is an involution") {
    std::mt19937_64 rng(2);
    for (int i = 0; i < 20; ++i) {
        auto n = random_relation_rep(Algebra::B, Field::rationals(), {1 + rng() % 2, 1 + rng() % 3, 1 + rng() % 2}, rng);
        auto dd = dualize(dualize(n));
        CHECK(check_relations(dualize(n)).ok);
        CHECK(dd.dimvec() == n.dimvec());
        CHECK(iso_test(dd, n).isomorphic);
    }
    CHECK(dualize(hand_point()).dimvec() == dv(1, 2, 1));
}

TEST_CASE("tilt from B to B'") {
    auto m = tilt_B_to_Bprime(hand_point());
    CHECK(m.algebra() == Algebra::Bprime);
    CHECK(m.dimvec() == dv(1, 1, 1));
    CHECK(check_relations(m).ok);
    // multiplication by the coordinates of [1:0:0]
    CHECK(iso_test(m, scalar_rep(Algebra::Bprime, pt(1, 0, 0))).isomorphic);
    auto v0 = tilt_B_to_Bprime(simple(Algebra::B, 0));
    CHECK(v0.dimvec() == dv(1, 0, 0));
    CHECK_THROWS_AS(tilt_B_to_Bprime(simple(Algebra::B, 1)), Error);
}

TEST_CASE("tilt from B' to B") {
    for (const auto& x : {pt(1, 0, 0), pt(1, 2, 3), pt(0, -1, 5)}) {
        auto t = tilt_Bprime_to_B(scalar_rep(Algebra::Bprime, x));
        CHECK(t.rep.dimvec() == dv(1, 2, 1));
        CHECK(check_relations(t.rep).ok);
        CHECK(iso_test(t.rep, module_point(x)).isomorphic);
    }
}

TEST_CASE("tilts are inverse on modules of points") {
    for (const auto& x : {pt(1, 0, 0), pt(1, 1, 1), pt(2, -1, 3)}) {
        auto n = module_point(x);
        CHECK(iso_test(tilt_Bprime_to_B(tilt_B_to_Bprime(n)).rep, n).isomorphic);
    }
}

TEST_CASE("theta transform") {
    for (long n = 1; n <= 5; ++n) {
        const Rational qn(n);
        CHECK(theta_transform(th(-qn, 0, qn)) == th(-qn, qn, 0));
        CHECK(theta_transform(th(0, -qn, 2 * qn + 1)) == th(0, 1 - qn, qn));
    }
    CHECK(theta_transform(th(0, 0, 0)) == th(0, 0, 0));
}

TEST_CASE("modules over a prime field") {
    std::mt19937_64 rng(9);
    auto f = Field::prime(5);
    for (int i = 0; i < 20; ++i) {
        auto n = random_relation_rep(Algebra::B, f, {1, 2, 1}, rng);
        CHECK(check_relations(n).ok);
        CHECK(n.field() == f);
    }
    CHECK_THROWS_AS(Field::prime(6), Error);
}
