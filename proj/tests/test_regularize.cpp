#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "tsmzv/regularize.hpp"

using namespace tsmzv;

namespace {

SymbolCombo sym(std::initializer_list<int> es, Rat c = Rat(1)) {
    return SymbolCombo::symbol(Index(std::vector<int>(es)), c);
}

} // namespace

TEST_CASE("regularization of the basics") {
    Regularizer reg;
    for (Bullet b : {Bullet::Star, Bullet::Sh}) {
        RegPoly t = reg.zeta_reg(Index{1}, b);
        CHECK(t.degree() == 1);
        CHECK(t.coeff[0].is_zero());
        CHECK(t.coeff[1] == SymbolCombo::constant(Rat(1)));
    }

    RegPoly st = reg.zeta_reg(Index{1, 1}, Bullet::Star);
    CHECK(st.coeff[2] == SymbolCombo::constant(rat(1, 2)));
    CHECK(st.coeff[1].is_zero());
    CHECK(st.coeff[0] == sym({2}, rat(-1, 2)));

    RegPoly sh = reg.zeta_reg(Index{1, 1}, Bullet::Sh);
    CHECK(sh.coeff[2] == SymbolCombo::constant(rat(1, 2)));
    CHECK(sh.coeff[1].is_zero());
    CHECK(sh.coeff[0].is_zero());
}

TEST_CASE("regularized values at T = 0") {
    Regularizer reg;
    CHECK(reg.zeta_reg(Index{2}, Bullet::Star) == RegPoly::constant(sym({2})));
    CHECK(reg.zeta_reg_at_zero(Index{1}, Bullet::Sh).is_zero());
    CHECK(reg.zeta_reg_at_zero(Index{1, 1}, Bullet::Star) == sym({2}, rat(-1, 2)));
}

TEST_CASE("degree counts trailing ones") {
    Regularizer reg;
    for (const auto& k : all_indices_up_to_weight(5)) {
        int trailing = 0;
        for (auto it = k.entries.rbegin(); it != k.entries.rend() && *it == 1; ++it) ++trailing;
        for (Bullet b : {Bullet::Star, Bullet::Sh}) {
            RegPoly p = reg.zeta_reg(k, b);
            CHECK(p.degree() == trailing);
            CHECK((p.degree() == 0) == is_admissible(k));
        }
    }
}

TEST_CASE("idempotence on H0") {
    Regularizer reg;
    for (const auto& k : all_indices_up_to_weight(5)) {
        if (!is_admissible(k)) continue;
        for (Bullet b : {Bullet::Star, Bullet::Sh})
            CHECK(reg.zeta_reg(k, b) == RegPoly::constant(SymbolCombo::symbol(k)));
    }
}

TEST_CASE("regularization is an algebra homomorphism") {
    Regularizer reg;
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 10; ++trial) {
        LinComb a = oracle::random_h1_comb(rng, 3, 2);
        LinComb b = oracle::random_h1_comb(rng, 2, 2);
        for (Bullet bl : {Bullet::Star, Bullet::Sh}) {
            LinComb prod = bl == Bullet::Star ? harmonic_product(a, b) : shuffle_product(a, b);
            RegPoly lhs = reg.regularize(prod, bl);
            RegPoly rhs = regpoly_mul(reg.regularize(a, bl), reg.regularize(b, bl), bl);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("subspace error") {
    Regularizer reg;
    CHECK_THROWS_AS(reg.regularize(LinComb::term(Word("xy"), Rat(1)), Bullet::Star),
                    SubspaceError);
}

TEST_CASE("symbolic truncated-value limits") {
    Regularizer reg;
    SymbolicSeries s = reg.zeta_hatS_symbolic(Index{1}, Bullet::Star, 3);
    CHECK(s.c[0].is_zero());
    CHECK(s.c[1] == sym({2}, Rat(-1)));
    CHECK(s.c[2] == sym({3}, Rat(-1)));

    SymbolicSeries e = reg.zeta_hatS_symbolic(Index{}, Bullet::Sh, 2);
    CHECK(e.c[0] == SymbolCombo::constant(Rat(1)));
    CHECK(e.c[1].is_zero());

    SymbolicSeries d = reg.zeta_hatS_symbolic(Index{2}, Bullet::Sh, 1);
    CHECK(d.c[0] == sym({2}, Rat(2)));
}

TEST_CASE("symbolic coefficients are the regularized degree slices") {
    // the n-th coefficient of the symbolic series equals Z^bullet applied to
    // the slice w_n, which is constant because the slice lies in H0
    Regularizer reg;
    for (const auto& k : all_indices_up_to_weight(5))
        for (Bullet b : {Bullet::Star, Bullet::Sh}) {
            SymbolicSeries s = reg.zeta_hatS_symbolic(k, b, 3);
            for (int n = 0; n < 3; ++n) {
                RegPoly slice = reg.regularize(w_hatS(k, b, n), b);
                CHECK(slice.degree() == 0);
                CHECK(s.c[static_cast<size_t>(n)] == slice.at_zero());
            }
        }
}

TEST_CASE("double shuffle relations hold at the symbolic level") {
    Regularizer reg;
    const int N = 3;
    auto indices = all_indices_up_to_weight(4);
    for (const auto& k : indices)
        for (const auto& l : indices) {
            if (weight(k) + weight(l) > 4) continue;

            // harmonic: series of k*l equals the coefficientwise product
            SymbolicSeries lhs(N);
            {
                LinComb prod = harmonic_product(k, l);
                for (const auto& [w, c] : prod.terms()) {
                    SymbolicSeries s =
                        reg.zeta_hatS_symbolic(index_from_word(w), Bullet::Star, N);
                    for (int n = 0; n < N; ++n)
                        lhs.c[static_cast<size_t>(n)] += s.c[static_cast<size_t>(n)] * c;
                }
            }
            SymbolicSeries sk = reg.zeta_hatS_symbolic(k, Bullet::Star, N);
            SymbolicSeries sl = reg.zeta_hatS_symbolic(l, Bullet::Star, N);
            SymbolicSeries rhs(N);
            for (int a = 0; a < N; ++a)
                for (int b = 0; a + b < N; ++b)
                    rhs.c[static_cast<size_t>(a + b)] +=
                        combo_mul(sk.c[static_cast<size_t>(a)], sl.c[static_cast<size_t>(b)],
                                  Bullet::Star);
            CHECK(lhs == rhs);

            // shuffle: series of k sh l equals the signed shifted sum
            SymbolicSeries shlhs(N);
            {
                LinComb prod = shuffle_product(k, l);
                for (const auto& [w, c] : prod.terms()) {
                    SymbolicSeries s = reg.zeta_hatS_symbolic(index_from_word(w), Bullet::Sh, N);
                    for (int n = 0; n < N; ++n)
                        shlhs.c[static_cast<size_t>(n)] += s.c[static_cast<size_t>(n)] * c;
                }
            }
            SymbolicSeries shrhs(N);
            for (int n = 0; n < N; ++n)
                for_each_composition(n, depth(l), [&](const Composition& lp) {
                    Rat b = b_binom(l, lp);
                    if (b == 0) return;
                    SymbolicSeries s = reg.zeta_hatS_symbolic(
                        concat(k, reversed(shifted(l, lp))), Bullet::Sh, N);
                    for (int a = 0; a + n < N; ++a)
                        shrhs.c[static_cast<size_t>(a + n)] += s.c[static_cast<size_t>(a)] * b;
                });
            if (weight(l) % 2)
                for (auto& c : shrhs.c) c *= Rat(-1);
            CHECK(shlhs == shrhs);
        }
}

TEST_CASE("t = 0 slice matches the plain symmetric sum") {
    Regularizer reg;
    for (const auto& k : all_indices_up_to_weight(5))
        for (Bullet b : {Bullet::Star, Bullet::Sh})
            CHECK(reg.zeta_hatS_symbolic(k, b, 1).c[0] == reg.zeta_S_symbolic(k, b));
}

TEST_CASE("symbol products stay admissible") {
    SymbolCombo a = sym({2}) + sym({1, 2}, rat(1, 3));
    SymbolCombo b = sym({3});
    for (Bullet bl : {Bullet::Star, Bullet::Sh}) {
        SymbolCombo prod = combo_mul(a, b, bl);
        for (const auto& [k, c] : prod.terms()) CHECK(is_admissible(k));
    }
    CHECK_THROWS_AS(SymbolCombo::symbol(Index{2, 1}), ArgumentError);
}
