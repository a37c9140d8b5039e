#include "helpers.hpp"

#include "p2stab/charge.hpp"

#include <algorithm>
#include <random>

using namespace p2stab;
using namespace p2stab::test;

TEST_CASE("geometric central charge") {
    for (const auto& [b, t2] : {std::pair{q("0"), q("1")}, {q("1/3"), q("1/5")}, {q("-2"), q("7")}}) {
        auto z = z_geometric(nc("0", "0", "1"), b, t2);
        CHECK(z.re == -1);
        CHECK(z.im_coeff == 0);
    }
    auto z = z_geometric(nc("1", "0", "0"), 0, 1);
    CHECK(z.re == q("1/2"));
    CHECK(z.im_coeff == 0);
    for (long n = 1; n <= 5; ++n) {
        z = z_geometric(NumClass{1, 1, q("1/2") - Rational(n)}, q("1/2"), q("1/4"));
        CHECK(z.re == Rational(n));
        CHECK(z.im_coeff == q("1/2"));
        REQUIRE(z.t());
        CHECK(*z.t() == q("1/2"));
    }
}

TEST_CASE("discriminant form of the real part") {
    CHECK(z_cha_form(nc("1", "0", "0"), 0, 1).re == q("1/2"));
    CHECK(z_cha_form(nc("2", "1", "0"), 0, 1).re == 1);
    CHECK(z_cha_form(nc("1", "1", "1/2"), 1, 1).re == q("1/2"));
}

TEST_CASE("the two real-part forms agree on random classes") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 500; ++i) {
        long r = static_cast<long>(rng() % 7) - 3;
        if (r == 0) r = 1;
        NumClass a{r, static_cast<long>(rng() % 13) - 6, make_rational(static_cast<long>(rng() % 21) - 10, 2)};
        Rational b = make_rational(static_cast<long>(rng() % 41) - 20, 1 + static_cast<long>(rng() % 9));
        Rational t2 = make_rational(1 + static_cast<long>(rng() % 30), 1 + static_cast<long>(rng() % 9));
        CHECK(z_geometric(a, b, t2).re == z_cha_form(a, b, t2).re);
        CHECK(z_geometric(a, b, t2).im_coeff == z_cha_form(a, b, t2).im_coeff);
    }
}

TEST_CASE("sigma_b central charge") {
    auto z = z_sigma_b(q("1/2"));
    CHECK(z.values()[0] == ChargeValue{q("-1/2"), 0});
    CHECK(z.values()[1] == ChargeValue{q("-1/2"), 0});
    CHECK(z.values()[2] == ChargeValue{q("3/2"), 1});
    z = z_sigma_b(q("4/5"));
    CHECK(z.values()[0] == ChargeValue{q("-4/5"), 0});
    CHECK(z.values()[1] == ChargeValue{q("-1/5"), 0});
    CHECK(z.values()[2] == ChargeValue{q("3/5"), 1});
    for (const auto& b : {q("1/7"), q("1/2"), q("2/3"), q("99/100")}) {
        auto zb = z_sigma_b(b);
        CHECK(eval(zb, dv(1, 2, 1)) == ChargeValue{1 - 2 * b, 1});
        CHECK(eval(zb, dv(1, 0, 0)) == ChargeValue{-b, 0});
        CHECK(eval(zb, dv(0, 0, 0)) == ChargeValue{0, 0});
        CHECK(eval(zb, ch_point()) == eval(zb, dv(1, 2, 1)));
    }
    CHECK(eval(z_sigma_b(q("1/2")), dv(1, 2, 1)) == ChargeValue{0, 1});
    CHECK_THROWS_AS(z_sigma_b(0), Error);
    CHECK_THROWS_AS(z_sigma_b(1), Error);
}

TEST_CASE("phases") {
    CHECK(phase(ChargeValue{0, 1}).phi == doctest::Approx(0.5));
    CHECK(phase(ChargeValue{-1, 0}).phi == doctest::Approx(1.0));
    CHECK(phase(ChargeValue{1, 1}).phi == doctest::Approx(0.25));
    CHECK(phase(ChargeValue{-1, 0}).mu.infinite);
    CHECK(phase(ChargeValue{1, 1}).mu.value == -1);
}

TEST_CASE("GL action") {
    auto z = z_sigma_b(q("1/3"));
    auto w = gl_act(GLMatrix(1, 0, 0, 1), z);
    CHECK(w.values() == z.values());
    GLMatrix t(2, 1, -1, 3);
    CHECK(t * t.inverse() == GLMatrix(1, 0, 0, 1));
}

TEST_CASE("T matrix carries sigma_b to a geometric charge") {
    for (const auto& b : {q("1/2"), q("4/5"), q("9/10")}) {
        auto tinv = sigma_b_t_inverse(b);
        REQUIRE(tinv);
        auto [x, y] = tinv->apply(1 - 2 * b, 1);
        CHECK(x == -1);
        CHECK(y == 0);
        auto r = verify_t_identity(b);
        CHECK(r.ok);
        CHECK(r.exact);
    }
    // t = sqrt(b - b^2) irrational: exact mode refuses, float mode agrees
    CHECK_FALSE(sigma_b_t_inverse(q("1/3")).has_value());
    CHECK_THROWS_AS(verify_t_identity(q("1/3")), Error);
    auto r = verify_t_identity(q("1/3"), true);
    CHECK(r.ok);
    CHECK_FALSE(r.exact);
}

TEST_CASE("projection of sigma_b to the geometric pair") {
    auto [u, v] = pi_sigma_b(q("1/2"));
    CHECK(u == nc("0", "1", "1/2"));
    CHECK(v == nc("-1", "-1/2", "0"));
    CHECK(pi_sigma_b(q("4/5")).first == nc("3/5", "13/10", "4/5"));
}

TEST_CASE("geometricity determinants") {
    for (const auto& b : {q("1/100"), q("1/3"), q("1/2"), q("7/8")}) {
        auto r = geom_conditions_abc(z_sigma_b(b));
        CHECK(r.a == 2 - b);
        CHECK(r.b == 1);
        CHECK(r.c == b);
        CHECK(r.ok);
    }
    auto custom = CentralCharge::exact({ChargeValue{-1, 0}, ChargeValue{-1, 0}, ChargeValue{1, 1}});
    auto r = geom_conditions_abc(custom);
    CHECK(r.a == 3);
    CHECK(r.b == 2);
    CHECK(r.c == 1);
    CHECK(r.ok);
    auto flat = CentralCharge::exact({ChargeValue{-1, 1}, ChargeValue{0, -1}, ChargeValue{2, 1}});
    r = geom_conditions_abc(flat);  // Z of the point class is real
    CHECK_FALSE(r.ok);
    CHECK((r.a == 0 || r.b == 0 || r.c == 0 || r.a < 0 || r.b < 0 || r.c < 0));
}

TEST_CASE("comparison-theorem hypotheses") {
    for (long n = 1; n <= 6; ++n) {
        Rational b = 1 - make_rational(1, 4 * n);
        auto h = theorem1_hypotheses(NumClass{1, 1, q("1/2") - Rational(n)}, b, b - b * b);
        CHECK(h.epsilon == make_rational(1, 4 * n));
        CHECK(h.all());
    }
    auto h = theorem1_hypotheses(nc("2", "1", "0"), q("9/20"), q("99/400"));
    CHECK(h.epsilon == q("1/10"));
    CHECK(h.z.re == q("99/200"));
    CHECK(h.all());
    h = theorem1_hypotheses(nc("1", "1", "1/2"), 2, q("1/4"));
    CHECK(h.epsilon == -1);
    CHECK_FALSE(h.ok_range);
    CHECK_THROWS_AS(theorem1_hypotheses(nc("0", "0", "1"), 0, 1), Error);
}

TEST_CASE("slope identity") {
    CHECK(slope_identity_check(nc("1", "1", "1/2"), q("1/2"), q("1/4")));
    CHECK(slope_identity_check(nc("2", "1", "0"), 0, 1));
    std::mt19937_64 rng(5);
    int checked = 0;
    while (checked < 1000) {
        long r = static_cast<long>(rng() % 7) - 3;
        if (r == 0) continue;
        NumClass a{r, static_cast<long>(rng() % 13) - 6, make_rational(static_cast<long>(rng() % 21) - 10, 2)};
        Rational b = make_rational(static_cast<long>(rng() % 41) - 20, 1 + static_cast<long>(rng() % 9));
        if (a.d == a.r * b) continue;
        Rational t2 = make_rational(1 + static_cast<long>(rng() % 30), 1 + static_cast<long>(rng() % 9));
        CHECK(slope_identity_check(a, b, t2));
        ++checked;
    }
}

TEST_CASE("charge scan grid") {
    auto rows = charge_scan(nc("1", "1", "-3/2"), 0, 1, 4, q("1/4"), 1, 3);
    CHECK(rows.size() == 20);
    CHECK(rows.front().b == 0);
    CHECK(rows.back().b == 1);
    CHECK(rows.back().t2 == 1);
    std::string csv = scan_csv(rows);
    CHECK(csv.rfind("b,t2,", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 21);
}
