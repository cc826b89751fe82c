#pragma once

/**
 * @file lincomb.hpp
 * @brief Rational linear combinations of words, with the harmonic and shuffle products.
 *
 * Combinations are kept canonical: words are ordered lexicographically by the
 * map, and zero coefficients are pruned eagerly, so equality is map equality.
 */

#include <map>
#include <utility>

#include "tsmzv/rational.hpp"
#include "tsmzv/word.hpp"

namespace tsmzv {

class LinComb {
  public:
    using Terms = std::map<Word, Rat>;

    LinComb() = default;
    static LinComb one() { return term(Word{}, Rat(1)); }
    static LinComb term(const Word& w, const Rat& c) {
        LinComb lc;
        lc.add(w, c);
        return lc;
    }
    static LinComb basis(const Index& k) { return term(word_from_index(k), Rat(1)); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add(const Word& w, const Rat& c) {
        if (c == 0) return;
        auto it = terms_.find(w);
        if (it == terms_.end()) {
            terms_.emplace(w, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Rat coeff(const Word& w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? Rat(0) : it->second;
    }

    LinComb& operator+=(const LinComb& o) {
        for (const auto& [w, c] : o.terms_) add(w, c);
        return *this;
    }
    LinComb& operator-=(const LinComb& o) {
        for (const auto& [w, c] : o.terms_) add(w, -c);
        return *this;
    }
    LinComb& operator*=(const Rat& s) {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [w, c] : terms_) c *= s;
        return *this;
    }
    friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
    friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
    friend LinComb operator*(LinComb a, const Rat& s) { return a *= s; }
    friend LinComb operator*(const Rat& s, LinComb a) { return a *= s; }

    bool operator==(const LinComb& o) const { return terms_ == o.terms_; }

    /// Right-concatenate every basis word with w0.
    LinComb concat_right(const Word& w0) const {
        LinComb out;
        for (const auto& [w, c] : terms_) out.add(concat(w, w0), c);
        return out;
    }

    bool in_h1() const {
        for (const auto& [w, c] : terms_)
            if (!tsmzv::in_h1(w)) return false;
        return true;
    }
    bool in_h0() const {
        for (const auto& [w, c] : terms_)
            if (!tsmzv::in_h0(w)) return false;
        return true;
    }

  private:
    Terms terms_;
};

namespace detail {

using PairMemo = std::map<std::pair<std::string, std::string>, LinComb>;

// Harmonic recursion on z-monomials, written on their index tuples:
//   z_a * z_b = (z_a' * z_b) z_{a_r} + (z_a * z_b') z_{b_s} + (z_a' * z_b') z_{a_r+b_s}
inline LinComb harmonic_words(const Word& a, const Word& b, PairMemo& memo) {
    if (a.empty()) return LinComb::term(b, Rat(1));
    if (b.empty()) return LinComb::term(a, Rat(1));
    auto key = std::make_pair(a.letters, b.letters);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    Index ia = index_from_word(a), ib = index_from_word(b);
    int ka = ia.entries.back(), kb = ib.entries.back();
    Index pa = prefix(ia, depth(ia) - 1), pb = prefix(ib, depth(ib) - 1);
    Word wa = word_from_index(pa), wb = word_from_index(pb);

    LinComb out;
    LinComb left = harmonic_words(wa, b, memo);
    out += left.concat_right(word_from_index(Index{ka}));
    LinComb right = harmonic_words(a, wb, memo);
    out += right.concat_right(word_from_index(Index{kb}));
    LinComb both = harmonic_words(wa, wb, memo);
    out += both.concat_right(word_from_index(Index{ka + kb}));

    memo.emplace(std::move(key), out);
    return out;
}

inline LinComb shuffle_words(const Word& a, const Word& b, PairMemo& memo) {
    if (a.empty()) return LinComb::term(b, Rat(1));
    if (b.empty()) return LinComb::term(a, Rat(1));
    auto key = std::make_pair(a.letters, b.letters);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    Word a1(a.letters.substr(0, a.size() - 1));
    Word b1(b.letters.substr(0, b.size() - 1));
    std::string ua(1, a.letters.back()), ub(1, b.letters.back());

    LinComb out;
    out += shuffle_words(a1, b, memo).concat_right(Word(ua));
    out += shuffle_words(a, b1, memo).concat_right(Word(ub));

    memo.emplace(std::move(key), out);
    return out;
}

} // namespace detail

/// Harmonic (stuffle) product; both operands must lie in H1.
inline LinComb harmonic_product(const LinComb& a, const LinComb& b) {
    if (!a.in_h1() || !b.in_h1())
        throw SubspaceError("harmonic product is defined on H1 only");
    detail::PairMemo memo;
    LinComb out;
    for (const auto& [wa, ca] : a.terms())
        for (const auto& [wb, cb] : b.terms()) {
            LinComb prod = detail::harmonic_words(wa, wb, memo);
            prod *= ca * cb;
            out += prod;
        }
    return out;
}

/// Shuffle product, defined on all of H.
inline LinComb shuffle_product(const LinComb& a, const LinComb& b) {
    detail::PairMemo memo;
    LinComb out;
    for (const auto& [wa, ca] : a.terms())
        for (const auto& [wb, cb] : b.terms()) {
            LinComb prod = detail::shuffle_words(wa, wb, memo);
            prod *= ca * cb;
            out += prod;
        }
    return out;
}

inline LinComb harmonic_product(const Index& a, const Index& b) {
    return harmonic_product(LinComb::basis(a), LinComb::basis(b));
}
inline LinComb shuffle_product(const Index& a, const Index& b) {
    return shuffle_product(LinComb::basis(a), LinComb::basis(b));
}

} // namespace tsmzv
