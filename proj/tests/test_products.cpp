#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "tsmzv/lincomb.hpp"

using namespace tsmzv;

namespace {

LinComb zb(std::initializer_list<int> es) { return LinComb::basis(Index(std::vector<int>(es))); }

} // namespace

TEST_CASE("harmonic product basics") {
    CHECK(harmonic_product(Index{2}, Index{3}) == zb({2, 3}) + zb({3, 2}) + zb({5}));
    CHECK(harmonic_product(Index{1}, Index{1}) == Rat(2) * zb({1, 1}) + zb({2}));
    CHECK(harmonic_product(LinComb::one(), zb({2, 1})) == zb({2, 1}));
    CHECK_THROWS_AS(harmonic_product(LinComb::term(Word("xy"), Rat(1)), zb({1})), SubspaceError);
}

TEST_CASE("shuffle product basics") {
    LinComb x = LinComb::term(Word("x"), Rat(1));
    LinComb y = LinComb::term(Word("y"), Rat(1));
    LinComb xy = LinComb::term(Word("xy"), Rat(1));
    LinComb yx = LinComb::term(Word("yx"), Rat(1));
    CHECK(shuffle_product(x, y) == xy + yx);
    CHECK(shuffle_product(Index{1}, Index{1}) == Rat(2) * zb({1, 1}));
    CHECK(shuffle_product(Index{2}, Index{1}) == Rat(2) * zb({1, 2}) + zb({2, 1}));
}

TEST_CASE("products are commutative and associative") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 12; ++trial) {
        LinComb a = oracle::random_h1_comb(rng, 3);
        LinComb b = oracle::random_h1_comb(rng, 2);
        LinComb c = oracle::random_h1_comb(rng, 1);
        CHECK(harmonic_product(a, b) == harmonic_product(b, a));
        CHECK(shuffle_product(a, b) == shuffle_product(b, a));
        CHECK(harmonic_product(harmonic_product(a, b), c) ==
              harmonic_product(a, harmonic_product(b, c)));
        CHECK(shuffle_product(shuffle_product(a, b), c) ==
              shuffle_product(a, shuffle_product(b, c)));
    }
}

TEST_CASE("products are bilinear") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 8; ++trial) {
        LinComb a = oracle::random_h1_comb(rng, 3);
        LinComb b = oracle::random_h1_comb(rng, 2);
        LinComb c = oracle::random_h1_comb(rng, 2);
        Rat s = rat(3, 2);
        CHECK(harmonic_product(a, b + c * s) ==
              harmonic_product(a, b) + harmonic_product(a, c) * s);
        CHECK(shuffle_product(a, b + c * s) == shuffle_product(a, b) + shuffle_product(a, c) * s);
    }
}

TEST_CASE("H0 closure and weight grading") {
    auto indices = all_indices_up_to_weight(6);
    for (const auto& k : indices)
        for (const auto& l : indices) {
            if (weight(k) + weight(l) > 6) continue;
            LinComb st = harmonic_product(k, l);
            LinComb sh = shuffle_product(k, l);
            for (const auto& [w, c] : st.terms())
                CHECK(weight(index_from_word(w)) == weight(k) + weight(l));
            for (const auto& [w, c] : sh.terms())
                CHECK(weight(index_from_word(w)) == weight(k) + weight(l));
            if (is_admissible(k) && is_admissible(l)) {
                CHECK(st.in_h0());
                CHECK(sh.in_h0());
            }
            CHECK(st.in_h1());
            CHECK(sh.in_h1());
        }
}

TEST_CASE("shuffle agrees with the interleaving oracle") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 20; ++trial) {
        Word u = word_from_index(oracle::random_index(rng, 4));
        Word v = word_from_index(oracle::random_index(rng, 3));
        CHECK(shuffle_product(LinComb::term(u, Rat(1)), LinComb::term(v, Rat(1))) ==
              oracle::brute_shuffle(u, v));
    }
}

TEST_CASE("canonical form prunes zeros") {
    LinComb a = zb({2}) - zb({2});
    CHECK(a.is_zero());
    CHECK(a.terms().empty());
    LinComb b = zb({2}) * Rat(0);
    CHECK(b.is_zero());
}
