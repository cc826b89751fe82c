#pragma once

/**
 * @file index.hpp
 * @brief Indices (tuples of positive integers) and compositions of exponent shifts.
 */

#include <algorithm>
#include <compare>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "tsmzv/errors.hpp"
#include "tsmzv/rational.hpp"

namespace tsmzv {

/// Tuple of positive integers; the empty tuple is the empty index.
struct Index {
    std::vector<int> entries;

    Index() = default;
    Index(std::initializer_list<int> es) : entries(es) { validate(); }
    explicit Index(std::vector<int> es) : entries(std::move(es)) { validate(); }

    void validate() const {
        for (int e : entries)
            if (e < 1) throw ArgumentError("index entry must be >= 1");
    }

    auto operator<=>(const Index&) const = default;
};

/// Tuple of non-negative integers (exponent shifts, tree edge labels).
struct Composition {
    std::vector<int> entries;

    Composition() = default;
    Composition(std::initializer_list<int> es) : entries(es) { validate(); }
    explicit Composition(std::vector<int> es) : entries(std::move(es)) { validate(); }

    void validate() const {
        for (int e : entries)
            if (e < 0) throw ArgumentError("composition entry must be >= 0");
    }

    auto operator<=>(const Composition&) const = default;
};

inline int weight(const Index& k) { return std::accumulate(k.entries.begin(), k.entries.end(), 0); }
inline int depth(const Index& k) { return static_cast<int>(k.entries.size()); }
inline int weight(const Composition& l) { return std::accumulate(l.entries.begin(), l.entries.end(), 0); }

/// Empty, or last entry >= 2.
inline bool is_admissible(const Index& k) {
    return k.entries.empty() || k.entries.back() >= 2;
}

inline Index prefix(const Index& k, int i) {
    if (i < 0 || i > depth(k)) throw ArgumentError("prefix: slice position out of range");
    return Index(std::vector<int>(k.entries.begin(), k.entries.begin() + i));
}

inline Index suffix(const Index& k, int i) {
    if (i < 0 || i > depth(k)) throw ArgumentError("suffix: slice position out of range");
    return Index(std::vector<int>(k.entries.begin() + i, k.entries.end()));
}

inline Index reversed(const Index& k) {
    return Index(std::vector<int>(k.entries.rbegin(), k.entries.rend()));
}

inline Index concat(const Index& a, const Index& b) {
    std::vector<int> es = a.entries;
    es.insert(es.end(), b.entries.begin(), b.entries.end());
    return Index(std::move(es));
}

/// Entry-wise k + l; lengths must agree.
inline Index shifted(const Index& k, const Composition& l) {
    if (k.entries.size() != l.entries.size())
        throw ArgumentError("shifted: length mismatch");
    std::vector<int> es(k.entries.size());
    for (size_t j = 0; j < es.size(); ++j) es[j] = k.entries[j] + l.entries[j];
    return Index(std::move(es));
}

/// Product of binomials binom(k_j + l_j - 1, l_j), with binom(l-1, l) read as
/// 1 at l = 0 and 0 at l > 0.  Integer-valued.
inline Rat b_binom(const Composition& k, const Composition& l) {
    if (k.entries.size() != l.entries.size())
        throw ArgumentError("b_binom: length mismatch");
    Int prod(1);
    for (size_t j = 0; j < k.entries.size(); ++j) {
        int kj = k.entries[j], lj = l.entries[j];
        if (kj == 0) {
            if (lj > 0) return Rat(0);
            continue;
        }
        prod *= binomial(kj + lj - 1, lj);
    }
    return Rat(prod);
}

inline Rat b_binom(const Index& k, const Composition& l) {
    return b_binom(Composition(k.entries), l);
}

/// Visit every composition of n into m non-negative parts, lexicographically.
inline void for_each_composition(int n, int m, const std::function<void(const Composition&)>& fn) {
    if (m == 0) {
        if (n == 0) fn(Composition{});
        return;
    }
    std::vector<int> parts(m, 0);
    std::function<void(int, int)> rec = [&](int pos, int rest) {
        if (pos == m - 1) {
            parts[pos] = rest;
            fn(Composition(parts));
            return;
        }
        for (int v = 0; v <= rest; ++v) {
            parts[pos] = v;
            rec(pos + 1, rest - v);
        }
    };
    rec(0, n);
}

inline std::string to_string(const Index& k) {
    std::string out;
    for (size_t j = 0; j < k.entries.size(); ++j) {
        if (j) out += ',';
        out += std::to_string(k.entries[j]);
    }
    return out;
}

/// Comma-separated positive integers; "" parses to the empty index.
inline Index parse_index(const std::string& s) {
    std::vector<int> es;
    if (s.empty()) return Index{};
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        size_t pos = 0;
        int v;
        try {
            v = std::stoi(tok, &pos);
        } catch (const std::exception&) {
            throw ArgumentError("bad index entry: '" + tok + "'");
        }
        if (pos != tok.size()) throw ArgumentError("bad index entry: '" + tok + "'");
        es.push_back(v);
    }
    if (s.back() == ',') throw ArgumentError("trailing comma in index: '" + s + "'");
    return Index(std::move(es));
}

/// All indices of weight 0..wt_max, ordered by (weight, entries).
inline std::vector<Index> all_indices_up_to_weight(int wt_max) {
    std::vector<Index> out;
    for (int w = 0; w <= wt_max; ++w) {
        if (w == 0) {
            out.push_back(Index{});
            continue;
        }
        // compositions of w into positive parts
        std::vector<int> cur;
        std::function<void(int)> rec = [&](int rest) {
            if (rest == 0) {
                out.push_back(Index(cur));
                return;
            }
            for (int v = 1; v <= rest; ++v) {
                cur.push_back(v);
                rec(rest - v);
                cur.pop_back();
            }
        };
        rec(w);
    }
    return out;
}

} // namespace tsmzv
