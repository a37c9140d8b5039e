#include "helpers.hpp"

#include "p2stab/charge.hpp"
#include "p2stab/io.hpp"
#include "p2stab/walls.hpp"

#include <algorithm>
#include <random>

using namespace p2stab;
using namespace p2stab::test;

TEST_CASE("King weight of sigma_b") {
    for (std::int64_t n = 1; n <= 4; ++n)
        for (std::int64_t r = 1; r <= 3; ++r)
            for (const auto& b : {q("1/9"), q("1/2"), q("5/6")}) {
                const Rational qn(static_cast<long>(n));
                ThetaVector want = (1 - b) * th(0, -qn, 2 * qn + 1) + b * th(-qn, 0, qn + 1 - Rational(static_cast<long>(r)));
                CHECK(king_theta(z_sigma_b(b), ideal_class_A1(n, r)) == want);
                CHECK(theta_family_r(n, r, b) == want);
            }
    // On the point class the weight reproduces the geometricity determinants.
    auto z = z_sigma_b(q("1/2"));
    auto t = king_theta(z, dv(1, 2, 1));
    auto abc = geom_conditions_abc(z);
    CHECK(t(dv(0, 0, 1)) == abc.a);
    CHECK(t(dv(0, 1, 1)) == abc.b);
    CHECK(t(dv(0, 2, 1)) == abc.c);
    CHECK(t(dv(1, 2, 1)) == 0);
    CHECK_THROWS_AS(king_theta(z_sigma_b(q("1/2")), dv(0, 0, 0)), Error);
}

TEST_CASE("theta families") {
    for (std::int64_t n = 1; n <= 5; ++n) {
        const Rational qn(static_cast<long>(n));
        CHECK(theta_b1(n, 0) == th(0, -qn, 2 * qn + 1));
        CHECK(theta_b1(n, 0)(dv(1, 0, 0)) == 0);
        CHECK(theta_b1(n, 1) == th(-qn, 0, qn));
        for (const auto& b : {q("-1/3"), q("0"), q("2/7"), q("1"), q("3/2")}) {
            CHECK(theta_b1(n, b)(ideal_class_A1(n)) == 0);
            CHECK(theta_b0(n, b)(ideal_class_A0(n)) == 0);
            CHECK(family_consistency(n, b).ok);
        }
    }
    CHECK(theta_b1(3, 1).str() == "[-3,0,3]");
}

TEST_CASE("perpendicular plane") {
    std::mt19937_64 rng(21);
    for (int i = 0; i < 50; ++i) {
        DimensionVector d{{static_cast<std::int64_t>(rng() % 6), static_cast<std::int64_t>(rng() % 8),
                           static_cast<std::int64_t>(rng() % 6)}};
        if (d.is_zero()) continue;
        auto p = perp_plane(d);
        CHECK(p.contains(p.basis[0]));
        CHECK(p.contains(p.basis[1]));
        ThetaVector t = q("3/2") * p.basis[0] + q("-2/5") * p.basis[1];
        auto c = p.coords(t);
        CHECK(c[0] == q("3/2"));
        CHECK(c[1] == q("-2/5"));
        CHECK(p.point(c) == t);
    }
    CHECK_THROWS_AS(perp_plane(dv(0, 0, 0)), Error);
}

TEST_CASE("numerical walls") {
    CHECK(numerical_walls(dv(1, 0, 0)).empty());
    // both sub-classes cut out the same line of the plane
    auto w = numerical_walls(dv(1, 1, 0));
    REQUIRE(w.size() == 1);
    CHECK(std::set<DimensionVector>(w[0].witnesses.begin(), w[0].witnesses.end()) ==
          std::set<DimensionVector>{dv(1, 0, 0), dv(0, 1, 0)});
    CHECK(numerical_walls(dv(1, 2, 1)).size() == 4);  // d' and d - d' share a line
    auto plane = perp_plane(dv(3, 7, 3));
    for (const auto& x : numerical_walls(dv(3, 7, 3))) {
        CHECK(x.status == "numerical");
        // every witness kills the same line of the plane
        auto dir = x.direction();
        ThetaVector on = plane.point({Rational(dir[0]), Rational(dir[1])});
        for (const auto& d : x.witnesses) CHECK(on(d) == 0);
    }
    CHECK(numerical_walls(dv(3, 7, 3)) == numerical_walls(dv(3, 7, 3)));
}

TEST_CASE("chamber membership") {
    for (std::int64_t n = 1; n <= 4; ++n) {
        CHECK(chamber_membership(theta_b1(n, q("1/2")), n, Side::A1).label == "C_P2");
        CHECK(chamber_membership(theta_b1(n, q("101/100")), n, Side::A1).label == "C_plus");
        CHECK(chamber_membership(theta_b1(n, 1 + default_epsilon(n)), n, Side::A1).label == "C_plus");
        CHECK(chamber_membership(theta_b1(n, 1 + default_epsilon(n) / 10), n, Side::A1).label == "C_plus");
        CHECK(chamber_membership(theta_b1(n, 1), n, Side::A1).label == "on_wall");
        if (n >= 2) {
            CHECK(chamber_membership(theta_b0(n, q("1/2")), n, Side::A0).label == "C_P2");
            CHECK(chamber_membership(theta_b0(n, q("-1/100")), n, Side::A0).label == "C_minus");
            CHECK(chamber_membership(theta_b0(n, -default_epsilon(n) / 10), n, Side::A0).label == "C_minus");
        }
    }
    CHECK_THROWS_AS(chamber_membership(th(1, 0, 0), 2, Side::A1), Error);
}

TEST_CASE("wall diagram JSON round trip") {
    for (std::int64_t n = 1; n <= 3; ++n)
        for (Side s : {Side::A1, Side::A0}) {
            auto d = ideal_wall_diagram(n, s);
            CHECK(walls_from_json(walls_json(d)) == d);
            CHECK(walls_from_json(json::parse(walls_json(d).dump())) == d);
        }
}

TEST_CASE("wall drawings") {
    auto empty = wall_svg(wall_diagram(dv(1, 0, 0)));
    std::size_t lines = 0;
    for (std::size_t p = empty.find("<line"); p != std::string::npos; p = empty.find("<line", p + 1)) ++lines;
    CHECK(lines == 2);
    CHECK(empty.find("<circle") != std::string::npos);
    auto d = ideal_wall_diagram(2, Side::A1);
    CHECK(wall_svg(d) == wall_svg(d));
    CHECK(wall_svg(d).find("width=\"800\" height=\"800\"") != std::string::npos);
}

TEST_CASE("Hilbert-scheme report") {
    std::vector<PointConfig> configs{PointConfig({pt(1, 0, 0), pt(0, 1, 0)}), PointConfig({pt(0, 3, 0), pt(2, 0, 0)}),
                                     PointConfig({pt(1, 1, 1), pt(1, 2, 3)})};
    auto r = hilbert_report(2, configs);
    CHECK(r.ok);
    CHECK(r.s_classes_match_support);
    REQUIRE(r.s_classes.size() == 2);
    CHECK(r.s_classes[0] == std::vector<std::size_t>{0, 1});
    CHECK(r.s_classes[1] == std::vector<std::size_t>{2});
    for (const auto& c : r.configs) CHECK(c.ok);
    bool verified = std::any_of(r.a1.walls.begin(), r.a1.walls.end(), [](const Wall& w) { return w.status == "verified"; });
    CHECK(verified);
    CHECK_THROWS_AS(hilbert_report(3, configs), Error);
}
