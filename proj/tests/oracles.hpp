#pragma once

// Brute-force reference enumerations, kept independent of the evaluator paths
// they are used to check.

#include <functional>
#include <random>

#include "tsmzv/series.hpp"
#include "tsmzv/truncated.hpp"

namespace tsmzv::oracle {

/// Plain nested-chain enumeration of Z_M(k).
inline Rat brute_z_trunc(const Index& k, int M) {
    Rat out(0);
    int r = depth(k);
    if (r == 0) return Rat(1);
    std::function<void(int, int, Rat)> rec = [&](int pos, int lo, Rat partial) {
        if (pos == r) {
            out += partial;
            return;
        }
        for (int v = lo + 1; v < M; ++v)
            rec(pos + 1, v, partial * rat_pow(Rat(v), -k.entries[static_cast<size_t>(pos)]));
    };
    rec(0, 0, Rat(1));
    return out;
}

/// Kontsevich-chain enumeration of the *-truncated value: chains
/// n_1 < ... < n_r in the order 1 < 2 < ... < -2 < -1 with 0 < |n_j| < M,
/// multiplying the inverse factors 1/n(t)^k.
inline Series brute_star_trunc(const Index& k, int M, int N) {
    Series out(N);
    int r = depth(k);
    if (r == 0) return Series::one(N);
    for (int i = 0; i <= r; ++i) {
        std::vector<int> pos(static_cast<size_t>(i)), neg(static_cast<size_t>(r - i));
        auto emit = [&]() {
            Series term = Series::one(N);
            Rat scalar(1);
            for (int j = 0; j < i; ++j)
                scalar *= rat_pow(Rat(pos[static_cast<size_t>(j)]),
                                  -k.entries[static_cast<size_t>(j)]);
            for (int j = 0; j < r - i; ++j)
                term = term * expand_inverse_power(neg[static_cast<size_t>(j)],
                                                   k.entries[static_cast<size_t>(i + j)], N);
            out += term * scalar;
        };
        std::function<void(int, int)> rec_neg = [&](int at, int prev) {
            if (at == r - i) {
                emit();
                return;
            }
            for (int v = prev + 1; v < 0; ++v) {
                neg[static_cast<size_t>(at)] = v;
                rec_neg(at + 1, v);
            }
        };
        std::function<void(int, int)> rec_pos = [&](int at, int prev) {
            if (at == i) {
                rec_neg(0, -M);
                return;
            }
            for (int v = prev + 1; v < M; ++v) {
                pos[static_cast<size_t>(at)] = v;
                rec_pos(at + 1, v);
            }
        };
        rec_pos(0, 0);
    }
    return out;
}

/// Direct enumeration of the sh-truncated value: split at i, chains
/// 0 < n_1 < ... < n_i and n_{i+1} < ... < n_r < 0 under n_i - n_{i+1} < M,
/// with the missing boundary entries n_0 and n_{r+1} read as 0.
inline Series brute_sh_trunc(const Index& k, int M, int N) {
    Series out(N);
    int r = depth(k);
    if (r == 0) return Series::one(N);
    for (int i = 0; i <= r; ++i) {
        std::vector<int> pos(static_cast<size_t>(i)), neg(static_cast<size_t>(r - i));
        auto emit = [&]() {
            Series term = Series::one(N);
            Rat scalar(1);
            for (int j = 0; j < i; ++j)
                scalar *= rat_pow(Rat(pos[static_cast<size_t>(j)]),
                                  -k.entries[static_cast<size_t>(j)]);
            for (int j = 0; j < r - i; ++j)
                term = term * expand_inverse_power(neg[static_cast<size_t>(j)],
                                                   k.entries[static_cast<size_t>(i + j)], N);
            out += term * scalar;
        };
        std::function<void(int, int)> rec_neg = [&](int at, int prev) {
            if (at == r - i) {
                emit();
                return;
            }
            for (int v = prev + 1; v <= -(r - i - at); ++v) {
                neg[static_cast<size_t>(at)] = v;
                rec_neg(at + 1, v);
            }
        };
        std::function<void(int, int)> rec_pos = [&](int at, int prev) {
            if (at == i) {
                int a = i > 0 ? pos[static_cast<size_t>(i - 1)] : 0;
                if (r - i == 0) {
                    emit(); // the junction constraint n_r - 0 < M is the loop cap
                    return;
                }
                rec_neg(0, a - M); // junction: n_{i+1} > n_i - M
                return;
            }
            for (int v = prev + 1; v < M; ++v) {
                pos[static_cast<size_t>(at)] = v;
                rec_pos(at + 1, v);
            }
        };
        rec_pos(0, 0);
    }
    return out;
}

/// Shuffle by position choices: place u's letters at every increasing slot
/// selection, v's letters in the rest.
inline LinComb brute_shuffle(const Word& u, const Word& v) {
    size_t m = u.size(), n = v.size();
    LinComb out;
    std::vector<size_t> slots(m);
    std::function<void(size_t, size_t)> rec = [&](size_t at, size_t lo) {
        if (at == m) {
            std::string word(m + n, '?');
            for (size_t j = 0; j < m; ++j) word[slots[j]] = u.letters[j];
            size_t vi = 0;
            for (auto& ch : word)
                if (ch == '?') ch = v.letters[vi++];
            out.add(Word(word), Rat(1));
            return;
        }
        for (size_t s = lo; s + (m - at - 1) < m + n; ++s) {
            slots[at] = s;
            rec(at + 1, s + 1);
        }
    };
    rec(0, 0);
    return out;
}

inline Index random_index(std::mt19937_64& rng, int wt_max) {
    std::vector<int> es;
    int left = static_cast<int>(rng() % static_cast<uint64_t>(wt_max + 1));
    while (left > 0) {
        int v = 1 + static_cast<int>(rng() % static_cast<uint64_t>(left));
        es.push_back(v);
        left -= v;
    }
    return Index(std::move(es));
}

inline LinComb random_h1_comb(std::mt19937_64& rng, int wt_max, int terms = 3) {
    LinComb out;
    int n = 1 + static_cast<int>(rng() % static_cast<uint64_t>(terms));
    for (int j = 0; j < n; ++j) {
        long num = static_cast<long>(rng() % 7) - 3;
        long den = 1 + static_cast<long>(rng() % 3);
        out.add(word_from_index(random_index(rng, wt_max)), rat(num, den));
    }
    return out;
}

} // namespace tsmzv::oracle
