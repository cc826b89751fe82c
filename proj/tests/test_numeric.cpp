#include <catch2/catch_amalgamated.hpp>

#include <numbers>

#include "tsmzv/numeric.hpp"

using namespace tsmzv;

TEST_CASE("numeric zeta values") {
    NumericEval num;
    const double pi = std::numbers::pi;

    NumericValue z2 = num.mzv(Index{2}, 1e-6);
    CHECK(std::abs(z2.value - pi * pi / 6) < 1e-6);
    CHECK(z2.abs_error_bound <= 1e-6);

    NumericValue e = num.mzv(Index{}, 1e-9);
    CHECK(e.value == 1.0);
    CHECK(e.abs_error_bound == 0.0);

    // zeta(1,2) = zeta(3), used here only as a numeric cross-check
    NumericValue z12 = num.mzv(Index{1, 2}, 1e-5);
    CHECK(std::abs(z12.value - 1.2020569031595943) < 1e-5);

    CHECK_THROWS_AS(num.mzv(Index{2, 1}, 1e-4), PreconditionError);
}

TEST_CASE("error bounds are sound under doubling") {
    NumericEval num;
    for (const auto& k : all_indices_up_to_weight(4)) {
        if (k.entries.empty() || !is_admissible(k)) continue;
        long M = 1 << 12;
        double v1 = num.z_trunc_f(k, M);
        double bound = num.tail_bound(k, M);
        double v2 = num.z_trunc_f(k, 2 * M);
        CHECK(std::abs(v2 - v1) < bound);
    }
}

TEST_CASE("float truncated series match the exact ones at small M") {
    NumericEval num;
    Evaluator ev;
    for (const auto& k : all_indices_up_to_weight(3))
        for (Bullet b : {Bullet::Star, Bullet::Sh}) {
            auto f = num.trunc_f(k, b, 6, 3);
            Series s = ev.trunc(k, b, TruncationParams(6, 3));
            for (int n = 0; n < 3; ++n)
                CHECK(std::abs(f[static_cast<size_t>(n)] - s.c[static_cast<size_t>(n)].get_d()) <
                      1e-9);
        }
}

TEST_CASE("limit theorem at desk scale") {
    NumericEval num;
    const double pi = std::numbers::pi;

    LimitReport r2 = num.check_limit_theorem(Index{2}, Bullet::Star, 1, {100, 1000, 10000}, 2e-4);
    CHECK(r2.pass);
    CHECK(std::abs(r2.rows.front().limit - 2 * pi * pi / 6) < 1e-5);

    LimitReport r1 = num.check_limit_theorem(Index{1}, Bullet::Star, 2, {100, 10000}, 2e-4);
    CHECK(r1.pass);

    LimitReport re = num.check_limit_theorem(Index{}, Bullet::Sh, 2, {10, 100}, 1e-12);
    CHECK(re.pass);
    for (const auto& row : re.rows) CHECK(row.abs_diff == 0.0);

    LimitReport rsh = num.check_limit_theorem(Index{2}, Bullet::Sh, 1, {100, 2000}, 2e-3);
    CHECK(rsh.pass);
    CHECK(std::abs(rsh.rows.front().limit - 2 * pi * pi / 6) < 1e-4);

    CHECK_THROWS_AS(num.check_limit_theorem(Index{2}, Bullet::Star, 1, {100, 50}, 1e-3),
                    ArgumentError);
}

TEST_CASE("depth-1 convergence rate halves when M quadruples") {
    NumericEval num;
    for (int k : {2, 3}) {
        auto a = num.check_limit_theorem(Index{k}, Bullet::Star, 1, {1000, 4000}, 1.0);
        double d1 = a.rows[0].abs_diff, d4 = a.rows[1].abs_diff;
        CHECK(d4 * 2 <= d1);
    }
}

TEST_CASE("rational recovery") {
    auto [n, d] = closest_rational(-0.16666668, 64);
    CHECK(n == -1);
    CHECK(d == 6);
    auto [n2, d2] = closest_rational(0.0, 64);
    CHECK(n2 == 0);
    CHECK(d2 == 1);
}

TEST_CASE("star and sh limits agree mod pi^2 with rational ratios") {
    NumericEval num;

    IndepReport r1 = num.check_indep_bullet(Index{1}, 2, 1e-4);
    CHECK(r1.pass);
    for (const auto& row : r1.rows) CHECK(row.num == 0);

    IndepReport re = num.check_indep_bullet(Index{}, 2, 1e-4);
    CHECK(re.pass);

    IndepReport r11 = num.check_indep_bullet(Index{1, 1}, 1, 1e-4);
    CHECK(r11.pass);
    CHECK(r11.rows[0].num == -1);
    CHECK(r11.rows[0].den == 6);

    CHECK_THROWS_AS(num.check_indep_bullet(Index{2, 2, 1}, 1, 1e-4), PreconditionError);
}
