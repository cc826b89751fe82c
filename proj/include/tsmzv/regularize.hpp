#pragma once

/**
 * @file regularize.hpp
 * @brief Harmonic and shuffle regularization into polynomials in T whose
 *        coefficients are rational combinations of admissible MZV symbols.
 *
 * No MZV relations are applied: symbols stay formal.  Products of symbols are
 * normalized through the matching word product inside H0, which keeps every
 * combination linear in admissible symbols and makes equality a map check.
 */

#include <map>
#include <vector>

#include "tsmzv/truncated.hpp"

namespace tsmzv {

/// Finite rational combination of admissible-index MZV symbols.
class SymbolCombo {
  public:
    using Terms = std::map<Index, Rat>;

    SymbolCombo() = default;
    static SymbolCombo symbol(const Index& k, const Rat& c = Rat(1)) {
        SymbolCombo out;
        out.add(k, c);
        return out;
    }
    static SymbolCombo constant(const Rat& c) { return symbol(Index{}, c); }

    void add(const Index& k, const Rat& c) {
        if (!is_admissible(k)) throw ArgumentError("symbol index must be admissible");
        if (c == 0) return;
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            terms_.emplace(k, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    SymbolCombo& operator+=(const SymbolCombo& o) {
        for (const auto& [k, c] : o.terms_) add(k, c);
        return *this;
    }
    SymbolCombo& operator-=(const SymbolCombo& o) {
        for (const auto& [k, c] : o.terms_) add(k, -c);
        return *this;
    }
    SymbolCombo& operator*=(const Rat& s) {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [k, c] : terms_) c *= s;
        return *this;
    }
    friend SymbolCombo operator+(SymbolCombo a, const SymbolCombo& b) { return a += b; }
    friend SymbolCombo operator-(SymbolCombo a, const SymbolCombo& b) { return a -= b; }
    friend SymbolCombo operator*(SymbolCombo a, const Rat& s) { return a *= s; }

    bool operator==(const SymbolCombo& o) const { return terms_ == o.terms_; }

  private:
    Terms terms_;
};

/// zeta(h) * zeta(h') re-expressed through the bullet word product in H0.
inline SymbolCombo combo_mul(const SymbolCombo& a, const SymbolCombo& b, Bullet bullet) {
    SymbolCombo out;
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms()) {
            LinComb prod = bullet == Bullet::Star ? harmonic_product(ka, kb)
                                                  : shuffle_product(ka, kb);
            Rat s = ca * cb;
            for (const auto& [w, c] : prod.terms()) out.add(index_from_word(w), c * s);
        }
    return out;
}

/// Element of Z[T]: symbol combinations listed by T-degree.
struct RegPoly {
    std::vector<SymbolCombo> coeff; // coeff[d] multiplies T^d

    RegPoly() : coeff(1) {}
    static RegPoly constant(SymbolCombo c) {
        RegPoly p;
        p.coeff[0] = std::move(c);
        return p;
    }

    int degree() const {
        for (int d = static_cast<int>(coeff.size()) - 1; d >= 0; --d)
            if (!coeff[d].is_zero()) return d;
        return 0;
    }

    void trim() { coeff.resize(static_cast<size_t>(degree()) + 1); }

    SymbolCombo at_zero() const { return coeff[0]; }

    RegPoly& operator+=(const RegPoly& o) {
        if (o.coeff.size() > coeff.size()) coeff.resize(o.coeff.size());
        for (size_t d = 0; d < o.coeff.size(); ++d) coeff[d] += o.coeff[d];
        return *this;
    }
    RegPoly& operator-=(const RegPoly& o) {
        if (o.coeff.size() > coeff.size()) coeff.resize(o.coeff.size());
        for (size_t d = 0; d < o.coeff.size(); ++d) coeff[d] -= o.coeff[d];
        return *this;
    }
    RegPoly& operator*=(const Rat& s) {
        for (auto& c : coeff) c *= s;
        return *this;
    }
    friend RegPoly operator+(RegPoly a, const RegPoly& b) { return a += b; }
    friend RegPoly operator-(RegPoly a, const RegPoly& b) { return a -= b; }
    friend RegPoly operator*(RegPoly a, const Rat& s) { return a *= s; }

    RegPoly times_T() const {
        RegPoly out;
        out.coeff.assign(coeff.size() + 1, SymbolCombo{});
        for (size_t d = 0; d < coeff.size(); ++d) out.coeff[d + 1] = coeff[d];
        return out;
    }

    bool operator==(const RegPoly& o) const {
        size_t n = std::max(coeff.size(), o.coeff.size());
        for (size_t d = 0; d < n; ++d) {
            const SymbolCombo* x = d < coeff.size() ? &coeff[d] : nullptr;
            const SymbolCombo* y = d < o.coeff.size() ? &o.coeff[d] : nullptr;
            if (x && y) {
                if (!(*x == *y)) return false;
            } else if ((x && !x->is_zero()) || (y && !y->is_zero())) {
                return false;
            }
        }
        return true;
    }
};

inline RegPoly regpoly_mul(const RegPoly& a, const RegPoly& b, Bullet bullet) {
    RegPoly out;
    out.coeff.assign(a.coeff.size() + b.coeff.size() - 1, SymbolCombo{});
    for (size_t i = 0; i < a.coeff.size(); ++i)
        for (size_t j = 0; j < b.coeff.size(); ++j)
            out.coeff[i + j] += combo_mul(a.coeff[i], b.coeff[j], bullet);
    return out;
}

/// Power series in t over symbol combinations, mod t^N.
struct SymbolicSeries {
    int order = 1;
    std::vector<SymbolCombo> c;

    explicit SymbolicSeries(int N) : order(N), c(static_cast<size_t>(N)) {
        if (N < 1) throw ArgumentError("series order must be >= 1");
    }
    bool operator==(const SymbolicSeries& o) const { return order == o.order && c == o.c; }
};

class Regularizer {
  public:
    /// The unique bullet-algebra homomorphism H1 -> Z[T] extending the symbol
    /// map on H0 and sending y to T.  A monomial ending in z_1 is rewritten as
    /// (prefix bullet z_1) minus the lower terms of the product recursion and
    /// the recursion continues on strictly fewer trailing z_1's.
    RegPoly regularize(const LinComb& w, Bullet bullet) {
        if (!w.in_h1()) throw SubspaceError("regularize: operand must lie in H1");
        RegPoly out;
        for (const auto& [word, c] : w.terms()) out += regularize_word(word, bullet) * c;
        return out;
    }

    RegPoly zeta_reg(const Index& k, Bullet bullet) {
        return regularize_word(word_from_index(k), bullet);
    }

    /// Constant term zeta^bullet(k) = zeta^bullet(k; 0).
    SymbolCombo zeta_reg_at_zero(const Index& k, Bullet bullet) {
        return zeta_reg(k, bullet).at_zero();
    }

    /// The i-split series with the l-sum truncated at wt(l) < N, all
    /// regularized values resolved into admissible symbols.
    SymbolicSeries zeta_hatS_symbolic(const Index& k, Bullet bullet, int N) {
        SymbolicSeries out(N);
        int r = depth(k);
        for (int i = 0; i <= r; ++i) {
            Index pre = prefix(k, i), suf = suffix(k, i);
            SymbolCombo zpre = zeta_reg_at_zero(pre, bullet);
            if (zpre.is_zero()) continue;
            if (weight(suf) % 2) zpre *= Rat(-1);
            for (int n = 0; n < N; ++n)
                for_each_composition(n, r - i, [&](const Composition& l) {
                    SymbolCombo v = zeta_reg_at_zero(reversed(shifted(suf, l)), bullet);
                    out.c[n] += combo_mul(zpre, v, bullet) * b_binom(suf, l);
                });
        }
        return out;
    }

    /// The plain symmetric-value sum (the i-split with no l-shifts).
    SymbolCombo zeta_S_symbolic(const Index& k, Bullet bullet) {
        SymbolCombo out;
        int r = depth(k);
        for (int i = 0; i <= r; ++i) {
            Index pre = prefix(k, i), suf = suffix(k, i);
            SymbolCombo v = combo_mul(zeta_reg_at_zero(pre, bullet),
                                      zeta_reg_at_zero(reversed(suf), bullet), bullet);
            if (weight(suf) % 2) v *= Rat(-1);
            out += v;
        }
        return out;
    }

    RegPoly regularize_word(const Word& u, Bullet bullet) {
        auto key = std::make_pair(u, bullet);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        RegPoly out;
        if (!in_h1(u)) throw SubspaceError("regularize: word not in H1");
        Index k = index_from_word(u);
        if (is_admissible(k)) {
            out = RegPoly::constant(SymbolCombo::symbol(k));
        } else {
            // u = v z_1; read off u's coefficient in v bullet z_1 and push the
            // remainder (strictly fewer trailing z_1's) through the recursion.
            Index vk = prefix(k, depth(k) - 1);
            Word v = word_from_index(vk);
            LinComb prod = bullet == Bullet::Star ? harmonic_product(vk, Index{1})
                                                  : shuffle_product(vk, Index{1});
            Rat c = prod.coeff(u);
            LinComb rest = prod - LinComb::term(u, c);
            out = regularize_word(v, bullet).times_T();
            out -= regularize(rest, bullet);
            out *= Rat(1) / c;
        }
        out.trim();
        memo_.emplace(std::move(key), out);
        return out;
    }

  private:
    std::map<std::pair<Word, Bullet>, RegPoly> memo_;
};

} // namespace tsmzv
