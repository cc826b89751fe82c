#include <catch2/catch_amalgamated.hpp>

#include "tsmzv/io.hpp"

using namespace tsmzv;

TEST_CASE("series JSON round trip is byte-identical") {
    Series s(3);
    s.c = {rat(0), rat(-5, 4), rat(-9, 8)};
    json j = to_json(s);
    CHECK(j.dump() == R"({"coeffs":["0","-5/4","-9/8"],"order":3})");
    Series back = series_from_json(j);
    CHECK(back == s);
    CHECK(to_json(back).dump() == j.dump());

    json bad = j;
    bad["coeffs"] = json::array({"1"});
    CHECK_THROWS_AS(series_from_json(bad), ArgumentError);
}

TEST_CASE("lincomb JSON forms") {
    LinComb lc = Rat(2) * LinComb::basis(Index{1, 2}) - LinComb::basis(Index{3});
    json zj = to_zbasis_json(lc);
    CHECK(zj["terms"]["1,2"] == "2");
    CHECK(zj["terms"]["3"] == "-1");
    json wj = to_json(lc);
    CHECK(wj["terms"]["yyx"] == "2");
}

TEST_CASE("symbol combos serialize by index string") {
    SymbolCombo c = SymbolCombo::symbol(Index{2}, rat(-1, 2)) + SymbolCombo::constant(rat(3));
    json j = to_json(c);
    CHECK(j["2"] == "-1/2");
    CHECK(j[""] == "3");
}

TEST_CASE("tree JSON round trip and rejection") {
    json j = {{"vertices", {"a", "b", "r"}},
              {"edges", {{{"u", "a"}, {"v", "b"}, {"k", 1}}, {{"u", "b"}, {"v", "r"}, {"k", 2}}}},
              {"root", "r"},
              {"black", {"a", "b", "r"}}};
    auto [X, k] = tree_from_json(j);
    CHECK(X.root == "r");
    CHECK(k.at(TreeEdge("a", "b")) == 1);
    json j2 = to_json(X, k);
    auto [X2, k2] = tree_from_json(j2);
    CHECK(X2.vertices == X.vertices);
    CHECK(k2 == k);
    CHECK(to_json(X2, k2).dump() == j2.dump());

    json white_terminal = j;
    white_terminal["black"] = {"b", "r"};
    CHECK_THROWS_WITH(tree_from_json(white_terminal),
                      Catch::Matchers::ContainsSubstring("not black"));

    json negative = j;
    negative["edges"][0]["k"] = -1;
    CHECK_THROWS_WITH(tree_from_json(negative), Catch::Matchers::ContainsSubstring("negative"));

    json dup = j;
    dup["vertices"] = {"a", "b", "r", "a"};
    CHECK_THROWS_WITH(tree_from_json(dup), Catch::Matchers::ContainsSubstring("duplicate"));

    json loose = j;
    loose["vertices"] = {"a", "b", "r", "z"};
    CHECK_THROWS_WITH(tree_from_json(loose), Catch::Matchers::ContainsSubstring("#V != #E + 1"));
}

TEST_CASE("mod value JSON") {
    ModValue m(7, 2, 13);
    json j = to_json(m);
    CHECK(j["p"] == 7);
    CHECK(j["n"] == 2);
    CHECK(j["residue"] == 13);
}
