#include "helpers.hpp"

#include "p2stab/acceptance.hpp"
#include "p2stab/charge.hpp"
#include "p2stab/stability.hpp"
#include "p2stab/walls.hpp"

#include <random>

using namespace p2stab;
using namespace p2stab::test;

TEST_CASE("submodules of small modules") {
    auto s = submodule_search(module_point(pt(1, 0, 0)));
    CHECK(s.complete);
    CHECK(s.dimvecs() == std::set<DimensionVector>{dv(0, 0, 0), dv(0, 0, 1), dv(0, 1, 1), dv(0, 2, 1), dv(1, 2, 1)});

    s = submodule_search(direct_sum(simple(Algebra::B, 0), simple(Algebra::B, 2)));
    CHECK(s.complete);
    CHECK(s.dimvecs() == std::set<DimensionVector>{dv(0, 0, 0), dv(1, 0, 0), dv(0, 0, 1), dv(1, 0, 1)});

    s = submodule_search(QuiverRep::zero(Algebra::B));
    CHECK(s.complete);
    CHECK(s.dimvecs() == std::set<DimensionVector>{dv(0, 0, 0)});
}

TEST_CASE("every realized submodule is invariant") {
    std::mt19937_64 rng(4);
    for (int i = 0; i < 10; ++i) {
        auto n = random_relation_rep(Algebra::B, Field::rationals(), {2, 3, 2}, rng);
        for (const auto& [d, u] : layer1_submodules(n)) {
            CHECK(is_invariant(n, u));
            CHECK(u.dims() == d);
        }
    }
}

TEST_CASE("layer 1 is a subset of the exhaustive search over F_2") {
    std::mt19937_64 rng(8);
    auto f = Field::prime(2);
    for (int i = 0; i < 30; ++i) {
        auto n = random_relation_rep(Algebra::B, f, {1 + rng() % 2, 1 + rng() % 3, 1 + rng() % 2}, rng);
        auto exhaustive = layer2_dimvecs(n);
        REQUIRE(exhaustive);
        SearchOptions opt;
        opt.layer2 = false;
        for (const auto& [d, u] : layer1_submodules(n, opt)) CHECK(exhaustive->count(d) == 1);
        auto s = submodule_search(n);
        CHECK(s.complete);
        CHECK(s.dimvecs() == *exhaustive);
    }
}

TEST_CASE("King stability of small modules") {
    auto k = king_test(simple(Algebra::B, 1), th(1, 0, -1));
    CHECK(k.verdict == Verdict::stable);
    CHECK(k.certified);

    k = king_test(direct_sum(simple(Algebra::B, 0), simple(Algebra::B, 1)), th(-1, 1, 0));
    CHECK(k.verdict == Verdict::unstable);
    CHECK(k.certified);
    REQUIRE(k.witness);
    CHECK(*k.witness == dv(1, 0, 0));

    k = king_test(simple(Algebra::B, 1), th(1, 1, 0));
    CHECK(k.verdict == Verdict::theta_nonvanishing);

    k = king_test(direct_sum(simple(Algebra::B, 0), simple(Algebra::B, 0)), th(0, 1, -1));
    CHECK(k.verdict == Verdict::semistable);
    CHECK(k.certified);
}

TEST_CASE("point modules are stable for every sigma_b") {
    for (const auto& x : {pt(1, 0, 0), pt(0, 1, 0), pt(1, 1, 1), pt(3, -2, 7)})
        for (const auto& b : {q("1/10"), q("1/2"), q("2/3"), q("19/20")}) {
            auto m = module_point(x);
            auto k = king_test(m, king_theta(z_sigma_b(b), m.dimvec()));
            CHECK(k.verdict == Verdict::stable);
            CHECK(k.certified);
        }
}

TEST_CASE("Jordan-Holder factors") {
    auto j = jh_factors(direct_sum(simple(Algebra::B, 0), simple(Algebra::B, 0)), th(0, 1, -1));
    REQUIRE(j.factors.size() == 2);
    for (const auto& f : j.factors) CHECK(iso_test(f, simple(Algebra::B, 0)).isomorphic);
    CHECK(j.certified);

    PointConfig z({pt(1, 0, 0), pt(0, 1, 0), pt(1, 1, 1)});
    auto m = module_ideal_A1(z);
    j = jh_factors(m.rep, theta_b1(3, 1));
    std::multiset<DimensionVector> dims;
    for (const auto& f : j.factors) dims.insert(f.dimvec());
    CHECK(dims == std::multiset<DimensionVector>{dv(0, 1, 0), dv(1, 2, 1), dv(1, 2, 1), dv(1, 2, 1)});
    for (const auto& f : j.factors) {
        if (f.dimvec() != dv(1, 2, 1)) continue;
        int matches = 0;
        for (const auto& x : z.points()) matches += iso_test(f, module_point(x)).isomorphic ? 1 : 0;
        CHECK(matches == 1);
    }
}

TEST_CASE("S-equivalence at the Hilbert-Chow wall") {
    PointConfig a({pt(1, 0, 0), pt(0, 1, 0)});
    PointConfig b({pt(0, 2, 0), pt(-1, 0, 0)});  // same support, other representatives and order
    PointConfig c({pt(1, 0, 0), pt(1, 1, 1)});
    auto ma = module_ideal_A1(a).rep, mb = module_ideal_A1(b).rep, mc = module_ideal_A1(c).rep;
    auto theta = theta_b1(2, 1);
    auto ab = s_equiv(ma, mb, theta);
    CHECK(ab.equivalent);
    auto ac = s_equiv(ma, mc, theta);
    CHECK_FALSE(ac.equivalent);
}

TEST_CASE("verdict names") {
    CHECK(to_string(Verdict::stable) == "stable");
    CHECK(to_string(Verdict::semistable) == "semistable");
    CHECK(to_string(Verdict::unstable) == "unstable");
    CHECK(to_string(Verdict::theta_nonvanishing) == "theta-nonvanishing");
}
