#include "helpers.hpp"

#include "p2stab/acceptance.hpp"
#include "p2stab/io.hpp"

#include <cstdio>
#include <filesystem>
#include <random>

using namespace p2stab;
using namespace p2stab::test;

TEST_CASE("rationals") {
    CHECK(parse_rational("-3/6") == q("-1/2"));
    CHECK(to_string(q("4/2")) == "2");
    CHECK(to_string(q("-7/21")) == "-1/3");
    CHECK_THROWS_AS(parse_rational("1/0"), Error);
    CHECK_THROWS_AS(parse_rational("abc"), Error);
    CHECK_THROWS_AS(parse_rational("0.5"), Error);
    CHECK(rational_from_json(json("5/10")) == q("1/2"));
    CHECK(rational_from_json(json(3)) == 3);
    CHECK_THROWS_AS(rational_from_json(json(0.5)), Error);
    CHECK(make_rational(6, -4) == q("-3/2"));
}

TEST_CASE("chern characters as JSON") {
    ChernCharacter c(1, 1, q("-3/2"));
    CHECK(chern_json(c).dump() == R"(["1","1","-3/2"])");
    CHECK(chern_from_json(chern_json(c)) == c);
}

TEST_CASE("module JSON round trip") {
    std::mt19937_64 rng(31);
    for (auto f : {Field::rationals(), Field::prime(7)}) {
        auto n = random_relation_rep(Algebra::B, f, {2, 3, 1}, rng);
        auto back = module_from_json(json::parse(module_json(n).dump()));
        CHECK(back == n);
    }
    auto p = module_point(pt(1, 2, 3));
    CHECK(module_from_json(module_json(p)) == p);
    json bad = module_json(p);
    bad["dims"] = json::array({1, 3, 1});
    CHECK_THROWS_AS(module_from_json(bad), Error);
}

TEST_CASE("points files") {
    auto one = points_from_json(json::parse(R"({"points": [["1","0","0"], ["0","1","0"]]})"));
    REQUIRE(one.size() == 1);
    CHECK(one[0].size() == 2);
    auto many = points_from_json(json::parse(R"({"configs": [[["1","0","0"]], [["0","0","1"], ["1","1","1/2"]]]})"));
    REQUIRE(many.size() == 2);
    CHECK(many[1][1][2] == q("1/2"));
    CHECK_THROWS_AS(points_from_json(json::parse(R"({"points": [["1","0"]]})")), Error);
    CHECK_THROWS_AS(points_from_json(json::parse(R"({"points": [["1","0","0"], ["2","0","0"]]})")), Error);
    CHECK(points_from_json(points_json(one[0]))[0].points() == one[0].points());
}

TEST_CASE("atomic writes") {
    auto dir = std::filesystem::temp_directory_path() / "p2stab_io_test";
    std::filesystem::create_directories(dir);
    auto path = (dir / "out.json").string();
    write_file_atomic(path, "first\n");
    write_file_atomic(path, "second\n");
    CHECK(read_text_file(path) == "second\n");
    std::size_t files = 0;
    for (const auto& e : std::filesystem::directory_iterator(dir)) files += e.is_regular_file() ? 1 : 0;
    CHECK(files == 1);
    std::filesystem::remove_all(dir);
    CHECK_THROWS_AS(read_json_file((dir / "missing.json").string()), Error);
}

TEST_CASE("header") {
    auto h = header_json(42);
    CHECK(h["tool"] == "p2stab");
    CHECK(h["seed"] == 42);
    CHECK(h.dump() == R"({"seed":42,"tool":"p2stab","version":"0.1.0"})");
}
