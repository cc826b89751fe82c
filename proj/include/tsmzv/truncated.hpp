#pragma once

/**
 * @file truncated.hpp
 * @brief Truncated MZVs Z_M and the *-/sh-truncated series values, with the
 *        finite-M identity checks built on them.
 *
 * The evaluator memoizes Z_M tables and whole series per instance; instances
 * are cheap and single-threaded, the functions themselves are pure.
 */

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>

#include "tsmzv/lincomb.hpp"
#include "tsmzv/series.hpp"

namespace tsmzv {

enum class Bullet { Star, Sh };

inline std::string to_string(Bullet b) { return b == Bullet::Star ? "*" : "sh"; }

struct TruncationParams {
    int M = 1; // summation bound
    int N = 1; // t-order
    TruncationParams(int M_, int N_) : M(M_), N(N_) {
        if (M < 1 || N < 1) throw ArgumentError("truncation parameters must be >= 1");
    }
};

/// Failure evidence from a check_* operation: the first differing coefficient
/// with both sides.  ok == true means no mismatch was found.
struct Witness {
    bool ok = true;
    std::string context;
    int position = -1;
    Rat lhs, rhs;

    static Witness pass() { return Witness{}; }
    static Witness fail(std::string ctx, int pos, Rat l, Rat r) {
        return Witness{false, std::move(ctx), pos, std::move(l), std::move(r)};
    }
};

/// The length-<=1 chain factor n(t): n for n > 0, n + t for n < 0.
inline Series kontsevich_factor(long n, int N) {
    if (n == 0) throw ArgumentError("kontsevich_factor: n must be nonzero");
    Series s = Series::constant(Rat(n), N);
    if (n < 0 && N >= 2) s.c[1] = 1;
    return s;
}

/// The t^n-degree slice w_n of the truncated series, as an element of H1.
/// For each split i it pairs z_{k_[i]} with the bullet-product of the shifted
/// reversed suffixes of total shift n.
inline LinComb w_hatS(const Index& k, Bullet bullet, int n) {
    if (n < 0) throw ArgumentError("w_hatS: t-degree must be >= 0");
    int r = depth(k);
    LinComb out;
    for (int i = 0; i <= r; ++i) {
        Index pre = prefix(k, i), suf = suffix(k, i);
        LinComb inner;
        for_each_composition(n, r - i, [&](const Composition& l) {
            Rat b = b_binom(suf, l);
            if (b == 0) return;
            inner.add(word_from_index(reversed(shifted(suf, l))), b);
        });
        if (inner.is_zero()) continue;
        LinComb prod = bullet == Bullet::Star
                           ? harmonic_product(LinComb::basis(pre), inner)
                           : shuffle_product(LinComb::basis(pre), inner);
        if (weight(suf) % 2) prod *= Rat(-1);
        out += prod;
    }
    return out;
}

class Evaluator {
  public:
    Evaluator() = default;

    void set_work_cap(uint64_t cap) { work_cap_ = cap; }
    uint64_t work_used() const { return work_used_; }

    /// Z_M(k), the truncated MZV over chains 0 < n_1 < ... < n_r < M.
    Rat z_trunc(const Index& k, int M) {
        if (M < 1) throw ArgumentError("z_trunc: M must be >= 1");
        return ztab(k, M)[static_cast<size_t>(M)];
    }

    /// Linear extension of Z_M over the z-basis; operand must lie in H1.
    Rat z_trunc(const LinComb& w, int M) {
        Rat out(0);
        for (const auto& [word, c] : w.terms()) out += c * z_trunc(index_from_word(word), M);
        return out;
    }

    /// *-truncated value: split at i, both chains bounded by M.  Evaluated by
    /// the factored form  sum_i (-1)^{wt suf} Z_M(pre) sum_l b(suf;l) Z_M(rev(suf+l)) t^{wt l}.
    Series star_trunc(const Index& k, const TruncationParams& p) {
        auto key = std::make_tuple(k, p.M, p.N);
        if (auto it = star_cache_.find(key); it != star_cache_.end()) return it->second;
        Series out(p.N);
        int r = depth(k);
        for (int i = 0; i <= r; ++i) {
            Index pre = prefix(k, i), suf = suffix(k, i);
            Rat zpre = z_trunc(pre, p.M);
            if (zpre == 0) continue;
            if (weight(suf) % 2) zpre = -zpre;
            for (int n = 0; n < p.N; ++n)
                for_each_composition(n, r - i, [&](const Composition& l) {
                    out.c[n] += zpre * b_binom(suf, l) * z_trunc(reversed(shifted(suf, l)), p.M);
                });
        }
        star_cache_.emplace(std::move(key), out);
        return out;
    }

    /// sh-truncated value: split at i, the gap n_i - n_{i+1} bounded by M
    /// (boundary entries n_0 = n_{r+1} = 0).  The factored form replaces each
    /// joint double-chain sum by Z_M of a shuffle product.
    Series sh_trunc(const Index& k, const TruncationParams& p) {
        auto key = std::make_tuple(k, p.M, p.N);
        if (auto it = sh_cache_.find(key); it != sh_cache_.end()) return it->second;
        Series out(p.N);
        int r = depth(k);
        for (int i = 0; i <= r; ++i) {
            Index pre = prefix(k, i), suf = suffix(k, i);
            int sign = weight(suf) % 2 ? -1 : 1;
            for (int n = 0; n < p.N; ++n)
                for_each_composition(n, r - i, [&](const Composition& l) {
                    Rat b = b_binom(suf, l);
                    Rat v = z_trunc(shuffle_cached(pre, reversed(shifted(suf, l))), p.M);
                    out.c[n] += Rat(sign) * b * v;
                });
        }
        sh_cache_.emplace(std::move(key), out);
        return out;
    }

    Series trunc(const Index& k, Bullet bullet, const TruncationParams& p) {
        return bullet == Bullet::Star ? star_trunc(k, p) : sh_trunc(k, p);
    }

    /// Linear extension of the sh-truncated value over the z-basis.
    Series sh_linear(const LinComb& w, const TruncationParams& p) {
        Series out(p.N);
        for (const auto& [word, c] : w.terms())
            out += sh_trunc(index_from_word(word), p) * c;
        return out;
    }

    Series star_linear(const LinComb& w, const TruncationParams& p) {
        Series out(p.N);
        for (const auto& [word, c] : w.terms())
            out += star_trunc(index_from_word(word), p) * c;
        return out;
    }

    /// Coefficient-wise identity between the truncated series and Z_M applied
    /// to the degree slices w_n, for each bullet and each n < N.
    Witness check_taylor_identity(const Index& k, const TruncationParams& p) {
        for (Bullet b : {Bullet::Star, Bullet::Sh}) {
            Series lhs = trunc(k, b, p);
            for (int n = 0; n < p.N; ++n) {
                Rat rhs = z_trunc(w_hatS(k, b, n), p.M);
                if (lhs.c[n] != rhs)
                    return Witness::fail("bullet=" + to_string(b), n, lhs.c[n], rhs);
            }
        }
        return Witness::pass();
    }

    /// Joint double-chain sum with constraint m_r + n_s < M against Z_M of the
    /// shuffle product; both indices must be non-empty.
    Witness check_partial_fraction_lemma(const Index& k, const Index& l, int M) {
        if (k.entries.empty() || l.entries.empty())
            throw ArgumentError("partial fraction lemma requires non-empty indices");
        Rat lhs(0);
        // enumerate the k-chain; the n-chain then collapses to Z_{M - m_r}(l)
        std::vector<int> chain(k.entries.size());
        std::function<void(size_t, int)> rec = [&](size_t pos, int lo) {
            if (pos == chain.size()) {
                Rat f(1);
                for (size_t j = 0; j < chain.size(); ++j)
                    f *= rat_pow(Rat(chain[j]), -k.entries[j]);
                lhs += f * z_trunc(l, M - chain.back());
                return;
            }
            for (int m = lo + 1; m <= M - 2 - static_cast<int>(chain.size() - pos - 1); ++m) {
                tick();
                chain[pos] = m;
                rec(pos + 1, m);
            }
        };
        rec(0, 0);
        Rat rhs = z_trunc(shuffle_product(k, l), M);
        if (lhs != rhs) return Witness::fail("m_r+n_s<M double chain", 0, lhs, rhs);
        return Witness::pass();
    }

    /// Both double shuffle relations for the truncated values, exact mod t^N.
    std::pair<Witness, Witness> check_dsr(const Index& k, const Index& l, const TruncationParams& p) {
        Witness harm = Witness::pass();
        {
            Series lhs = star_linear(harmonic_product(k, l), p);
            Series rhs = star_trunc(k, p) * star_trunc(l, p);
            for (int n = 0; n < p.N && harm.ok; ++n)
                if (lhs.c[n] != rhs.c[n]) harm = Witness::fail("harmonic", n, lhs.c[n], rhs.c[n]);
        }
        Witness shuf = Witness::pass();
        {
            Series lhs = sh_linear(shuffle_product(k, l), p);
            Series rhs(p.N);
            int s = depth(l);
            for (int n = 0; n < p.N; ++n)
                for_each_composition(n, s, [&](const Composition& lp) {
                    Rat b = b_binom(l, lp);
                    if (b == 0) return;
                    Index arg = concat(k, reversed(shifted(l, lp)));
                    rhs += (sh_trunc(arg, p) * b).shifted(n);
                });
            if (weight(l) % 2) rhs *= Rat(-1);
            for (int n = 0; n < p.N && shuf.ok; ++n)
                if (lhs.c[n] != rhs.c[n]) shuf = Witness::fail("shuffle", n, lhs.c[n], rhs.c[n]);
        }
        return {harm, shuf};
    }

    /// Shuffle expansion with a per-evaluator cache.
    LinComb shuffle_cached(const Index& a, const Index& b) {
        auto key = a <= b ? std::make_pair(a, b) : std::make_pair(b, a);
        if (auto it = shuffle_cache_.find(key); it != shuffle_cache_.end()) return it->second;
        LinComb out = shuffle_product(a, b);
        shuffle_cache_.emplace(std::move(key), out);
        return out;
    }

    void tick(uint64_t amount = 1) {
        work_used_ += amount;
        if (work_used_ > work_cap_) throw WorkLimitError("enumeration work cap exceeded");
    }

  private:
    // ztab(k, M): table v with v[m] = Z_m(k) for 0 <= m <= M.
    const std::vector<Rat>& ztab(const Index& k, int M) {
        auto& v = ztab_[k];
        if (v.empty()) v.assign(2, k.entries.empty() ? Rat(1) : Rat(0));
        if (static_cast<int>(v.size()) > M) return v;
        if (k.entries.empty()) {
            v.resize(static_cast<size_t>(M) + 1, Rat(1));
            return v;
        }
        Index pre = prefix(k, depth(k) - 1);
        int kr = k.entries.back();
        const auto& pv = ztab(pre, M - 1);
        size_t from = v.size();
        v.resize(static_cast<size_t>(M) + 1);
        for (size_t m = from; m <= static_cast<size_t>(M); ++m) {
            tick();
            v[m] = v[m - 1] + pv[m - 1] * rat_pow(Rat(static_cast<long>(m - 1)), -kr);
        }
        return v;
    }

    std::map<Index, std::vector<Rat>> ztab_;
    std::map<std::tuple<Index, int, int>, Series> star_cache_, sh_cache_;
    std::map<std::pair<Index, Index>, LinComb> shuffle_cache_;
    uint64_t work_cap_ = UINT64_MAX;
    uint64_t work_used_ = 0;
};

} // namespace tsmzv
