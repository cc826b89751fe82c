#pragma once

/**
 * @file numeric.hpp
 * @brief Double-precision evaluation of MZV symbols and truncated values,
 *        convergence checks against the symbolic limits, and the pi^2
 *        rational-recovery spot check.
 *
 * Summation order is fixed (ascending n) for reproducibility.  Error bounds
 * combine an integral tail estimate for the outermost variable with a crude
 * harmonic-power bound for inner non-admissible chains, plus a flat slack for
 * float rounding; they are meant to dominate honestly at desk scale.
 */

#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>

#include "tsmzv/regularize.hpp"

namespace tsmzv {

struct NumericValue {
    double value = 0;
    double abs_error_bound = 0;
};

struct LimitRow {
    int coefficient_index;
    long M;
    double truncated;
    double limit;
    double abs_diff;
};

struct LimitReport {
    Index k;
    Bullet bullet;
    double tol;
    std::vector<LimitRow> rows;
    bool pass = true;
};

struct IndepRow {
    int coefficient_index;
    double value_over_pi2;
    bool recovered;
    long num = 0, den = 1;
    double err = 0;
};

struct IndepReport {
    Index k;
    double tol;
    std::vector<IndepRow> rows;
    bool pass = true;
};

/// Closest p/q with 1 <= q <= max_den (scanned exhaustively; max_den is small).
inline std::pair<long, long> closest_rational(double x, long max_den) {
    long bn = 0, bd = 1;
    double berr = std::abs(x);
    for (long q = 1; q <= max_den; ++q) {
        long p = std::lround(x * static_cast<double>(q));
        double err = std::abs(x - static_cast<double>(p) / static_cast<double>(q));
        if (err < berr) {
            berr = err;
            bn = p;
            bd = q;
        }
    }
    long g = std::gcd(std::abs(bn), bd);
    if (g > 1) {
        bn /= g;
        bd /= g;
    }
    return {bn, bd};
}

class NumericEval {
  public:
    /// Truncated MZV in doubles, ascending summation.
    double z_trunc_f(const Index& k, long M) {
        if (M < 1) throw ArgumentError("z_trunc_f: M must be >= 1");
        if (k.entries.empty()) return 1.0;
        int r = depth(k);
        // running[d] = sum over chains of depth d+1 with top entry < current m
        std::vector<double> running(static_cast<size_t>(r), 0.0);
        for (long m = 1; m < M; ++m) {
            std::vector<double> powers(static_cast<size_t>(r));
            for (int d = 0; d < r; ++d)
                powers[static_cast<size_t>(d)] = std::pow(static_cast<double>(m),
                                                          -k.entries[static_cast<size_t>(d)]);
            for (int d = r - 1; d >= 1; --d)
                running[static_cast<size_t>(d)] += running[static_cast<size_t>(d - 1)] *
                                                   powers[static_cast<size_t>(d)];
            running[0] += powers[0];
        }
        return running[static_cast<size_t>(r - 1)];
    }

    /// Sound upper bound on the tail sum over chains whose top entry is >= M.
    double tail_bound(const Index& k, long M) const {
        int r = depth(k);
        int kr = k.entries.back();
        int ones = 0;
        double head = 1.0;
        for (int d = 0; d < r - 1; ++d) {
            int kd = k.entries[static_cast<size_t>(d)];
            if (kd == 1)
                ++ones;
            else
                head *= static_cast<double>(kd) / (kd - 1.0); // zeta(kd) <= kd/(kd-1)
        }
        // tail <= head * sum_{m >= M} (1 + ln m)^ones * m^{-kr}
        auto g = [&](double x) {
            return std::pow(1.0 + std::log(x), ones) / std::pow(x, kr);
        };
        // g decreases once 1 + ln x > ones / kr
        double x0 = std::max(static_cast<double>(M), std::exp(static_cast<double>(ones) / kr));
        double sum = 0.0;
        for (long m = M; m < static_cast<long>(x0); ++m) sum += g(static_cast<double>(m));
        // integral of (1+u)^a e^{-(kr-1)u} du from ln(x0), by parts
        double c = kr - 1.0;
        double u0 = std::log(x0);
        double integral = 0.0, falling = 1.0;
        for (int j = 0; j <= ones; ++j) {
            integral += falling * std::pow(1.0 + u0, ones - j) / std::pow(c, j + 1);
            falling *= ones - j;
        }
        integral *= std::exp(-c * u0);
        return head * (sum + g(x0) + integral);
    }

    /// Adaptive partial sum with an honest tail bound; the empty index is
    /// exactly 1, non-admissible indices diverge.
    NumericValue mzv(const Index& k, double target_eps) {
        if (k.entries.empty()) return {1.0, 0.0};
        if (!is_admissible(k)) throw PreconditionError("mzv: divergent (non-admissible) index");
        auto key = std::make_pair(k, target_eps);
        if (auto it = cache_.find(key); it != cache_.end()) return it->second;
        long M = 1 << 12;
        double bound = tail_bound(k, M);
        while (bound > target_eps / 2 && M < (1l << 25)) {
            M <<= 1;
            bound = tail_bound(k, M);
        }
        NumericValue out{z_trunc_f(k, M), bound + 1e-12};
        cache_.emplace(std::move(key), out);
        return out;
    }

    NumericValue combo(const SymbolCombo& c, double target_eps) {
        double value = 0, bound = 0;
        size_t nterms = std::max<size_t>(c.terms().size(), 1);
        for (const auto& [k, q] : c.terms()) {
            double coeff = q.get_d();
            NumericValue v = mzv(k, target_eps / static_cast<double>(nterms) /
                                        std::max(1.0, std::abs(coeff)));
            value += coeff * v.value;
            bound += std::abs(coeff) * v.abs_error_bound;
        }
        return {value, bound};
    }

    /// Truncated series coefficients in doubles via the factored i-split form.
    std::vector<double> trunc_f(const Index& k, Bullet bullet, long M, int N) {
        std::vector<double> out(static_cast<size_t>(N), 0.0);
        int r = depth(k);
        for (int i = 0; i <= r; ++i) {
            Index pre = prefix(k, i), suf = suffix(k, i);
            double sign = weight(suf) % 2 ? -1.0 : 1.0;
            double zpre = bullet == Bullet::Star ? z_trunc_f(pre, M) : 0.0;
            for (int n = 0; n < N; ++n)
                for_each_composition(n, r - i, [&](const Composition& l) {
                    double b = b_binom(suf, l).get_d();
                    Index rev = reversed(shifted(suf, l));
                    double v;
                    if (bullet == Bullet::Star) {
                        v = zpre * z_trunc_f(rev, M);
                    } else {
                        v = 0;
                        LinComb sh = shuffle_product(pre, rev);
                        for (const auto& [w, c] : sh.terms())
                            v += c.get_d() * z_trunc_f(index_from_word(w), M);
                    }
                    out[static_cast<size_t>(n)] += sign * b * v;
                });
        }
        return out;
    }

    /// Convergence of the truncated coefficients to the symbolic limits over an
    /// increasing M list; passes when every coefficient lands within tol at the
    /// largest M.
    LimitReport check_limit_theorem(const Index& k, Bullet bullet, int N,
                                    const std::vector<long>& M_list, double tol) {
        if (M_list.empty()) throw ArgumentError("check_limit_theorem: empty M list");
        for (size_t j = 1; j < M_list.size(); ++j)
            if (M_list[j] <= M_list[j - 1])
                throw ArgumentError("check_limit_theorem: M list must increase");
        Regularizer reg;
        SymbolicSeries sym = reg.zeta_hatS_symbolic(k, bullet, N);
        std::vector<double> limits(static_cast<size_t>(N));
        for (int n = 0; n < N; ++n)
            limits[static_cast<size_t>(n)] = combo(sym.c[static_cast<size_t>(n)], tol / 16).value;

        LimitReport rep{k, bullet, tol, {}, true};
        for (long M : M_list) {
            auto tr = trunc_f(k, bullet, M, N);
            for (int n = 0; n < N; ++n) {
                double diff = std::abs(tr[static_cast<size_t>(n)] - limits[static_cast<size_t>(n)]);
                rep.rows.push_back({n, M, tr[static_cast<size_t>(n)], limits[static_cast<size_t>(n)], diff});
                if (M == M_list.back() && diff >= tol) rep.pass = false;
            }
        }
        return rep;
    }

    /// Coefficients of the star/sh symbolic difference divided by pi^2 must sit
    /// within tol of a small-denominator rational.
    IndepReport check_indep_bullet(const Index& k, int N, double tol, long max_den = 64) {
        if (weight(k) > 4)
            throw PreconditionError("check_indep_bullet: weight must be <= 4");
        Regularizer reg;
        SymbolicSeries star = reg.zeta_hatS_symbolic(k, Bullet::Star, N);
        SymbolicSeries sh = reg.zeta_hatS_symbolic(k, Bullet::Sh, N);
        IndepReport rep{k, tol, {}, true};
        const double pi2 = std::numbers::pi * std::numbers::pi;
        for (int n = 0; n < N; ++n) {
            SymbolCombo diff = star.c[static_cast<size_t>(n)] - sh.c[static_cast<size_t>(n)];
            double x = combo(diff, tol / 16).value / pi2;
            auto [num, den] = closest_rational(x, max_den);
            double err = std::abs(x - static_cast<double>(num) / static_cast<double>(den));
            bool ok = err <= tol;
            rep.rows.push_back({n, x, ok, num, den, err});
            if (!ok) rep.pass = false;
        }
        return rep;
    }

  private:
    std::map<std::pair<Index, double>, NumericValue> cache_;
};

} // namespace tsmzv
