#include "helpers.hpp"

#include "p2stab/acceptance.hpp"
#include "p2stab/geometry.hpp"
#include "p2stab/stability.hpp"
#include "p2stab/walls.hpp"

#include <random>

using namespace p2stab;
using namespace p2stab::test;

TEST_CASE("point configurations") {
    CHECK_THROWS_AS(PointConfig({pt(1, 0, 0), pt(2, 0, 0)}), Error);
    CHECK_THROWS_AS(PointConfig({pt(0, 0, 0)}), Error);
    CHECK(same_projective_point(pt(1, 2, 3), pt(-2, -4, -6)));
    CHECK_FALSE(same_projective_point(pt(1, 2, 3), pt(1, 2, 4)));
    CHECK(to_string(pt(1, 0, -2)) == "[1:0:-2]");
}

TEST_CASE("module of a point") {
    for (const auto& x : {pt(1, 0, 0), pt(0, 0, 1), pt(2, -3, 5)}) {
        auto m = module_point(x);
        CHECK(m.dimvec() == dv(1, 2, 1));
        CHECK(check_relations(m).ok);
    }
}

TEST_CASE("B' module of points") {
    auto m = bprime_module_points(PointConfig({pt(1, 0, 0)}));
    CHECK(m.dimvec() == dv(1, 1, 0));
    for (std::size_t j = 0; j < 3; ++j) CHECK(m.delta(j).rows() == 0);

    m = bprime_module_points(PointConfig({pt(1, 0, 0), pt(0, 1, 0)}));
    CHECK(m.dimvec() == dv(2, 2, 1));
    CHECK(m.gamma(0) == Matrix(2, 2, {1, 0, 0, 0}));
    CHECK(m.gamma(1) == Matrix(2, 2, {0, 0, 0, 1}));
    CHECK(m.gamma(2).is_zero());
    CHECK(check_relations(m).ok);
}

TEST_CASE("ideal sheaf modules in A1") {
    auto m = module_ideal_A1(PointConfig({pt(1, 0, 0)}));
    CHECK(m.rep.dimvec() == dv(1, 3, 1));
    CHECK(check_relations(m.rep).ok);
    CHECK(m.generic);
    std::mt19937_64 rng(12);
    for (std::size_t n = 2; n <= 4; ++n) {
        auto z = random_config(n, rng);
        auto mi = module_ideal_A1(z);
        CHECK(mi.rep.dimvec() == ideal_class_A1(static_cast<std::int64_t>(n)));
        CHECK(check_relations(mi.rep).ok);
        CHECK(composite_diagonality(mi.rep, z));
    }
    auto m2 = module_ideal_A1(PointConfig({pt(1, 0, 0), pt(1, 1, 1)}));
    auto k = king_test(m2.rep, theta_b1(2, 1 - default_epsilon(2)));
    CHECK((k.verdict == Verdict::stable || k.verdict == Verdict::semistable));
}

TEST_CASE("ideal sheaf modules in A0") {
    CHECK(module_ideal_A0(PointConfig({pt(1, 0, 0)})).dimvec() == dv(1, 2, 0));
    PointConfig general({pt(1, 0, 0), pt(0, 1, 0), pt(0, 0, 1)});
    PointConfig line({pt(1, 0, 0), pt(0, 1, 0), pt(1, 1, 0)});
    auto mg = module_ideal_A0(general), ml = module_ideal_A0(line);
    CHECK(mg.dimvec() == dv(3, 6, 2));
    CHECK(check_relations(mg).ok);
    CHECK(check_relations(ml).ok);
    CHECK(hom_space(simple(Algebra::B, 1), mg).empty());
    CHECK(hom_space(simple(Algebra::B, 1), ml).size() == 1);
    CHECK(theta_b0(3, 0)(dv(0, 1, 0)) == 0);
}

TEST_CASE("collinearity") {
    CHECK(collinear_test(PointConfig({pt(1, 0, 0), pt(5, 1, 2)})).collinear);
    auto r = collinear_test(PointConfig({pt(1, 0, 0), pt(0, 1, 0), pt(0, 0, 1)}));
    CHECK_FALSE(r.collinear);
    CHECK(r.agree);
    r = collinear_test(PointConfig({pt(1, 0, 0), pt(0, 1, 0), pt(1, 1, 0)}));
    CHECK(r.collinear);
    REQUIRE(r.by_hom);
    CHECK(*r.by_hom);
    CHECK(r.agree);
    std::mt19937_64 rng(13);
    for (std::size_t n = 3; n <= 5; ++n) {
        CHECK(collinear_test(random_config(n, rng, true)).agree);
        CHECK(collinear_test(random_config(n, rng, false)).agree);
    }
}

TEST_CASE("composite forms are diagonal") {
    std::mt19937_64 rng(14);
    for (std::size_t n = 1; n <= 4; ++n) {
        auto z = random_config(n, rng);
        CHECK(composite_diagonality(tilt_Bprime_to_B(bprime_module_points(z)).rep, z));
    }
}

TEST_CASE("filtration data on the two walls") {
    PointConfig two({pt(1, 0, 0), pt(1, 1, 1)});
    auto f = wall_filtration_data(two, WallKind::theta1_1);
    std::multiset<DimensionVector> dims(f.factor_dims.begin(), f.factor_dims.end());
    CHECK(dims == std::multiset<DimensionVector>{dv(0, 1, 0), dv(1, 2, 1), dv(1, 2, 1)});
    CHECK(f.all_points_matched);
    CHECK(f.factors_certified);

    PointConfig line({pt(1, 0, 0), pt(0, 1, 0), pt(1, 1, 0)});
    f = wall_filtration_data(line, WallKind::theta0_0);
    REQUIRE(f.sub_dims);
    CHECK(*f.sub_dims == dv(0, 1, 0));
    CHECK(*f.quotient_dims == dv(3, 5, 2));
    CHECK(f.quotient_class_ok);

    PointConfig general({pt(1, 0, 0), pt(0, 1, 0), pt(0, 0, 1)});
    try {
        wall_filtration_data(general, WallKind::theta0_0);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("requires collinear configuration") != std::string::npos);
    }
    CHECK(parse_wall(to_string(WallKind::theta0_0)) == WallKind::theta0_0);
}
