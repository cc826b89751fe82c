#pragma once

/**
 * @file mt.hpp
 * @brief Truncated Mordell-Tornheim values, their sh-truncated series
 *        counterparts via words and star trees, and the identities relating them.
 */

#include <optional>

#include "tsmzv/tree.hpp"

namespace tsmzv {

/// Heads k_1..k_r and tail k_{r+1}, non-negative with at most one zero.
struct MtIndex {
    std::vector<int> heads;
    int tail = 0;

    MtIndex(std::vector<int> hs, int t) : heads(std::move(hs)), tail(t) { validate(); }

    void validate() const {
        if (heads.empty()) throw ArgumentError("MT index: at least one head is required");
        int zeros = tail == 0 ? 1 : 0;
        for (int h : heads) {
            if (h < 0) throw ArgumentError("MT index: negative entry");
            if (h == 0) ++zeros;
        }
        if (tail < 0) throw ArgumentError("MT index: negative entry");
        if (zeros > 1) throw ArgumentError("MT index: entries must be positive with at most one exception");
    }

    int r() const { return static_cast<int>(heads.size()); }
    int weight() const {
        int w = tail;
        for (int h : heads) w += h;
        return w;
    }
};

inline std::string to_string(const MtIndex& idx) {
    std::string out;
    for (size_t j = 0; j < idx.heads.size(); ++j) {
        if (j) out += ',';
        out += std::to_string(idx.heads[j]);
    }
    out += ';';
    out += std::to_string(idx.tail);
    return out;
}

/// "k1,...,kr;k_{r+1}"
inline MtIndex parse_mt_index(const std::string& s) {
    auto sep = s.find(';');
    if (sep == std::string::npos) throw ArgumentError("MT index: missing ';'");
    std::vector<int> heads;
    {
        std::string hs = s.substr(0, sep);
        std::stringstream ss(hs);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            size_t pos = 0;
            int v;
            try {
                v = std::stoi(tok, &pos);
            } catch (const std::exception&) {
                throw ArgumentError("MT index: bad entry '" + tok + "'");
            }
            if (pos != tok.size()) throw ArgumentError("MT index: bad entry '" + tok + "'");
            heads.push_back(v);
        }
    }
    int tail;
    {
        std::string ts = s.substr(sep + 1);
        size_t pos = 0;
        try {
            tail = std::stoi(ts, &pos);
        } catch (const std::exception&) {
            throw ArgumentError("MT index: bad tail '" + ts + "'");
        }
        if (pos != ts.size()) throw ArgumentError("MT index: bad tail '" + ts + "'");
    }
    return MtIndex(std::move(heads), tail);
}

/// Sum over m_1,...,m_r >= 1 with m_1+...+m_r < M of
/// prod m_i^{-k_i} * (m_1+...+m_r)^{-k_{r+1}}.
inline Rat mt_trunc(const MtIndex& idx, int M, Evaluator& ev) {
    if (M < 1) throw ArgumentError("mt_trunc: M must be >= 1");
    Rat out(0);
    int r = idx.r();
    std::vector<int> m(static_cast<size_t>(r));
    std::function<void(int, int, Rat)> rec = [&](int pos, int used, Rat partial) {
        if (pos == r) {
            out += partial * rat_pow(Rat(used), -idx.tail);
            return;
        }
        for (int v = 1; used + v <= M - 1 - (r - pos - 1); ++v) {
            ev.tick();
            m[static_cast<size_t>(pos)] = v;
            rec(pos + 1, used + v, partial * rat_pow(Rat(v), -idx.heads[static_cast<size_t>(pos)]));
        }
    };
    rec(0, 0, Rat(1));
    return out;
}

/// Word behind the sh-truncated MT value: shuffle of the z_{k_i} followed by
/// x^{k_{r+1}}, with a zero head skipping its factor and turning the x-power
/// into z_{k_{r+1}}.
inline LinComb mt_word(const MtIndex& idx) {
    int zero_head = -1;
    for (int i = 0; i < idx.r(); ++i)
        if (idx.heads[static_cast<size_t>(i)] == 0) zero_head = i;
    LinComb sh = LinComb::one();
    for (int i = 0; i < idx.r(); ++i) {
        if (i == zero_head) continue;
        sh = shuffle_product(sh, LinComb::basis(Index{idx.heads[static_cast<size_t>(i)]}));
    }
    Word tail_word = zero_head >= 0 ? word_from_index(Index{idx.tail})
                                    : append_x(Word{}, idx.tail);
    LinComb out;
    for (const auto& [w, c] : sh.terms()) out.add(concat(w, tail_word), c);
    return out;
}

inline Series mt_hatS_sh_trunc(const MtIndex& idx, const TruncationParams& p, Evaluator& ev) {
    return ev.sh_linear(mt_word(idx), p);
}

/// Star tree carrying an MT index: r black leaves over a white center over a
/// black root.
inline std::pair<ColoredTree, EdgeIndex> mt_star_tree(const MtIndex& idx) {
    ColoredTree X;
    X.root = "rt";
    X.vertices = {"rt", "w"};
    X.black = {"rt"};
    EdgeIndex k;
    for (int i = 1; i <= idx.r(); ++i) {
        std::string v = "v" + std::to_string(i);
        X.vertices.insert(v);
        X.black.insert(v);
        TreeEdge e(v, "w");
        X.edges.insert(e);
        k.emplace(e, idx.heads[static_cast<size_t>(i - 1)]);
    }
    TreeEdge e("w", "rt");
    X.edges.insert(e);
    k.emplace(e, idx.tail);
    return {std::move(X), std::move(k)};
}

/// Star-tree value against the word value, exact as series.
inline Witness check_mt_tree(const MtIndex& idx, const TruncationParams& p, Evaluator& ev) {
    auto [X, k] = mt_star_tree(idx);
    Series lhs = tree_value(X, k, p, ev);
    Series rhs = mt_hatS_sh_trunc(idx, p, ev);
    for (int n = 0; n < p.N; ++n)
        if (lhs.c[n] != rhs.c[n]) return Witness::fail("star tree vs word", n, lhs.c[n], rhs.c[n]);
    return Witness::pass();
}

/// t-expansion of the sh-truncated MT value in terms of plain truncated MT
/// values: the i = r+1 split contributes the plain value, each head i
/// contributes a doubly shifted, sign-twisted rearrangement.
inline Witness check_mt_t_expansion(const MtIndex& idx, const TruncationParams& p, Evaluator& ev) {
    Series lhs = mt_hatS_sh_trunc(idx, p, ev);
    Series rhs(p.N);
    rhs.c[0] = mt_trunc(idx, p.M, ev);
    for (int i = 0; i < idx.r(); ++i) {
        int ki = idx.heads[static_cast<size_t>(i)];
        int sign = (ki + idx.tail) % 2 ? -1 : 1;
        for (int l = 0; l < p.N; ++l)
            for (int lp = 0; l + lp < p.N; ++lp) {
                Rat b1 = ki == 0 ? (l == 0 ? Rat(1) : Rat(0)) : Rat(binomial(ki + l - 1, l));
                Rat b2 = idx.tail == 0 ? (lp == 0 ? Rat(1) : Rat(0))
                                       : Rat(binomial(idx.tail + lp - 1, lp));
                if (b1 == 0 || b2 == 0) continue;
                std::vector<int> heads;
                for (int j = 0; j < idx.r(); ++j)
                    if (j != i) heads.push_back(idx.heads[static_cast<size_t>(j)]);
                heads.push_back(idx.tail + lp);
                MtIndex shifted_idx(std::move(heads), ki + l);
                rhs.c[l + lp] += Rat(sign) * b1 * b2 * mt_trunc(shifted_idx, p.M, ev);
            }
    }
    for (int n = 0; n < p.N; ++n)
        if (lhs.c[n] != rhs.c[n]) return Witness::fail("t-expansion", n, lhs.c[n], rhs.c[n]);
    return Witness::pass();
}

/// Root-swap relation: the value equals the signed double shift sum of the
/// value with the first head and the tail exchanged.
inline Witness check_mt_root_relation(const MtIndex& idx, const TruncationParams& p, Evaluator& ev) {
    Series lhs = mt_hatS_sh_trunc(idx, p, ev);
    Series rhs(p.N);
    int k1 = idx.heads.front();
    int sign = (k1 + idx.tail) % 2 ? -1 : 1;
    for (int l = 0; l < p.N; ++l)
        for (int lp = 0; l + lp < p.N; ++lp) {
            Rat b1 = k1 == 0 ? (l == 0 ? Rat(1) : Rat(0)) : Rat(binomial(k1 + l - 1, l));
            Rat b2 = idx.tail == 0 ? (lp == 0 ? Rat(1) : Rat(0))
                                   : Rat(binomial(idx.tail + lp - 1, lp));
            if (b1 == 0 || b2 == 0) continue;
            std::vector<int> heads{idx.tail + lp};
            for (int j = 1; j < idx.r(); ++j) heads.push_back(idx.heads[static_cast<size_t>(j)]);
            MtIndex swapped(std::move(heads), k1 + l);
            rhs += (mt_hatS_sh_trunc(swapped, p, ev) * (Rat(sign) * b1 * b2)).shifted(l + lp);
        }
    for (int n = 0; n < p.N; ++n)
        if (lhs.c[n] != rhs.c[n]) return Witness::fail("root relation", n, lhs.c[n], rhs.c[n]);
    return Witness::pass();
}

/// Constant-coefficient corollary: moving the first factor of a shuffle
/// product to a right tail flips the sign by its weight; the x^l variant
/// trades the tail power against the first head.
inline Witness check_mt_corollary_t0(const std::vector<int>& ks, std::optional<int> l, int M,
                                     Evaluator& ev) {
    if (ks.empty()) throw ArgumentError("corollary: at least one k is required");
    for (int v : ks)
        if (v < 1) throw ArgumentError("corollary: entries must be >= 1");
    if (l && *l < 1) throw ArgumentError("corollary: x-power must be >= 1");
    TruncationParams p(M, 1);

    LinComb rest = LinComb::one();
    for (size_t j = 1; j < ks.size(); ++j)
        rest = shuffle_product(rest, LinComb::basis(Index{ks[j]}));

    if (!l) {
        LinComb full = shuffle_product(rest, LinComb::basis(Index{ks[0]}));
        Rat lhs = ev.sh_linear(full, p).c[0];
        Rat rhs = ev.sh_linear(rest.concat_right(word_from_index(Index{ks[0]})), p).c[0];
        if (ks[0] % 2) rhs = -rhs;
        if (lhs != rhs) return Witness::fail("tail move", 0, lhs, rhs);
        return Witness::pass();
    }

    LinComb full = shuffle_product(rest, LinComb::basis(Index{ks[0]}));
    Rat lhs = ev.sh_linear(full.concat_right(append_x(Word{}, *l)), p).c[0];
    LinComb swapped = shuffle_product(rest, LinComb::basis(Index{*l}));
    Rat rhs = ev.sh_linear(swapped.concat_right(append_x(Word{}, ks[0])), p).c[0];
    if ((ks[0] + *l) % 2) rhs = -rhs;
    if (lhs != rhs) return Witness::fail("x-power variant", 0, lhs, rhs);
    return Witness::pass();
}

} // namespace tsmzv
