#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "tsmzv/truncated.hpp"

using namespace tsmzv;

TEST_CASE("truncated MZV values") {
    Evaluator ev;
    CHECK(ev.z_trunc(Index{}, 1) == 1);
    CHECK(ev.z_trunc(Index{}, 17) == 1);
    CHECK(ev.z_trunc(Index{2}, 1) == 0);
    CHECK(ev.z_trunc(Index{1, 2}, 4) == rat(5, 12));
    CHECK(ev.z_trunc(Index{1, 1}, 5) == rat(35, 24));
}

TEST_CASE("truncated MZV against chain enumeration") {
    Evaluator ev;
    for (const auto& k : all_indices_up_to_weight(5))
        for (int M : {1, 2, 3, 7, 11})
            CHECK(ev.z_trunc(k, M) == oracle::brute_z_trunc(k, M));
}

TEST_CASE("Z_M is a harmonic homomorphism") {
    Evaluator ev;
    auto indices = all_indices_up_to_weight(5);
    for (const auto& k : indices)
        for (const auto& l : indices) {
            if (weight(k) + weight(l) > 5) continue;
            for (int M : {2, 5, 9})
                CHECK(ev.z_trunc(harmonic_product(k, l), M) ==
                      ev.z_trunc(k, M) * ev.z_trunc(l, M));
        }
}

TEST_CASE("Kontsevich chain factor") {
    Series three = kontsevich_factor(3, 2);
    CHECK(three.c == std::vector<Rat>{Rat(3), Rat(0)});
    Series neg = kontsevich_factor(-2, 2);
    CHECK(neg.c == std::vector<Rat>{Rat(-2), Rat(1)});
    CHECK_THROWS_AS(kontsevich_factor(0, 2), ArgumentError);

    // chain 1 < -1: product of inverses expands to -1 - t
    Series prod = expand_inverse_power(-1, 1, 2) * rat(1, 1);
    CHECK(prod.c == std::vector<Rat>{Rat(-1), Rat(-1)});
}

TEST_CASE("star-truncated examples") {
    Evaluator ev;
    Series s = ev.star_trunc(Index{1}, TruncationParams(3, 3));
    CHECK(s.c == std::vector<Rat>{Rat(0), rat(-5, 4), rat(-9, 8)});

    CHECK(ev.star_trunc(Index{}, TruncationParams(5, 2)) == Series::one(2));

    Series c2 = ev.star_trunc(Index{2}, TruncationParams(3, 1));
    CHECK(c2.c == std::vector<Rat>{rat(5, 2)});
}

TEST_CASE("sh-truncated examples") {
    Evaluator ev;
    Series s = ev.sh_trunc(Index{1}, TruncationParams(3, 3));
    CHECK(s.c == std::vector<Rat>{Rat(0), rat(-5, 4), rat(-9, 8)});

    CHECK(ev.sh_trunc(Index{}, TruncationParams(4, 2)) == Series::one(2));

    // all three split sums are empty at M = 2, so the value vanishes; the
    // brute-force enumeration and the degree-slice identity both confirm it
    Series v = ev.sh_trunc(Index{1, 1}, TruncationParams(2, 1));
    CHECK(v.c == std::vector<Rat>{Rat(0)});
    CHECK(oracle::brute_sh_trunc(Index{1, 1}, 2, 1).c == std::vector<Rat>{Rat(0)});
    CHECK(ev.z_trunc(w_hatS(Index{1, 1}, Bullet::Sh, 0), 2) == 0);
}

TEST_CASE("factored evaluators match the brute-force enumeration") {
    Evaluator ev;
    for (const auto& k : all_indices_up_to_weight(4))
        for (int M : {1, 2, 4, 8}) {
            TruncationParams p(M, 3);
            CHECK(ev.star_trunc(k, p) == oracle::brute_star_trunc(k, M, 3));
            CHECK(ev.sh_trunc(k, p) == oracle::brute_sh_trunc(k, M, 3));
        }
}

TEST_CASE("depth-1 star and sh values agree") {
    Evaluator ev;
    for (int k = 1; k <= 6; ++k)
        for (int M = 1; M <= 20; ++M) {
            TruncationParams p(M, 3);
            CHECK(ev.star_trunc(Index{k}, p) == ev.sh_trunc(Index{k}, p));
        }
}

TEST_CASE("degree slices") {
    CHECK(w_hatS(Index{1}, Bullet::Star, 0).is_zero());
    CHECK(w_hatS(Index{1}, Bullet::Star, 1) == Rat(-1) * LinComb::basis(Index{2}));
    CHECK(w_hatS(Index{}, Bullet::Star, 0) == LinComb::one());
    CHECK(w_hatS(Index{}, Bullet::Sh, 0) == LinComb::one());
    CHECK(w_hatS(Index{}, Bullet::Sh, 1).is_zero());

    for (const auto& k : all_indices_up_to_weight(6))
        for (int n = 0; n <= 4; ++n) {
            CHECK(w_hatS(k, Bullet::Star, n).in_h0());
            CHECK(w_hatS(k, Bullet::Sh, n).in_h0());
        }
}

TEST_CASE("degree-slice identity") {
    Evaluator ev;
    CHECK(ev.check_taylor_identity(Index{1}, TruncationParams(3, 3)).ok);
    CHECK(ev.check_taylor_identity(Index{}, TruncationParams(2, 3)).ok);
    CHECK(ev.check_taylor_identity(Index{2, 1}, TruncationParams(5, 2)).ok);
}

TEST_CASE("joint double-chain sums") {
    Evaluator ev;
    CHECK(ev.check_partial_fraction_lemma(Index{1}, Index{1}, 3).ok);
    CHECK(ev.check_partial_fraction_lemma(Index{1}, Index{2}, 4).ok);
    CHECK(ev.check_partial_fraction_lemma(Index{2, 1}, Index{1}, 9).ok);
    CHECK_THROWS_AS(ev.check_partial_fraction_lemma(Index{2}, Index{}, 4), ArgumentError);
}

TEST_CASE("double shuffle relations, small instances") {
    Evaluator ev;
    {
        auto [harm, shuf] = ev.check_dsr(Index{1}, Index{1}, TruncationParams(4, 3));
        CHECK(harm.ok);
        CHECK(shuf.ok);
    }
    {
        auto [harm, shuf] = ev.check_dsr(Index{}, Index{2, 1}, TruncationParams(5, 3));
        CHECK(harm.ok);
        CHECK(shuf.ok);
    }
    {
        auto [harm, shuf] = ev.check_dsr(Index{1}, Index{2}, TruncationParams(5, 3));
        CHECK(harm.ok);
        CHECK(shuf.ok);
    }
}

TEST_CASE("sh-linear extension") {
    Evaluator ev;
    TruncationParams p(3, 2);
    CHECK(ev.sh_linear(LinComb::basis(Index{1}), p) == ev.sh_trunc(Index{1}, p));
    CHECK(ev.sh_linear(LinComb{}, p) == Series(2));
    LinComb w = Rat(2) * LinComb::basis(Index{2}) + LinComb::basis(Index{1});
    Series expected = ev.sh_trunc(Index{2}, p) * Rat(2) + ev.sh_trunc(Index{1}, p);
    CHECK(ev.sh_linear(w, p) == expected);
    CHECK_THROWS_AS(ev.sh_linear(LinComb::term(Word("xy"), Rat(1)), p), SubspaceError);
}

TEST_CASE("work cap interrupts long enumerations") {
    Evaluator ev;
    ev.set_work_cap(10);
    CHECK_THROWS_AS(ev.z_trunc(Index{1, 1, 1}, 50), WorkLimitError);
}
