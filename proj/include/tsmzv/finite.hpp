#pragma once

/**
 * @file finite.hpp
 * @brief Truncated MZVs reduced modulo prime powers and the componentwise
 *        double shuffle congruences.
 */

#include <cstdint>

#include "tsmzv/truncated.hpp"

namespace tsmzv {

inline bool is_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

/// Residue in Z/p^n; division is defined for units only.
struct ModValue {
    long p = 2;
    int n = 1;
    uint64_t modulus = 2;
    uint64_t r = 0;

    ModValue(long p_, int n_, uint64_t val = 0) : p(p_), n(n_) {
        if (!is_prime(p)) throw ArgumentError("modulus base is not prime");
        if (n < 1) throw ArgumentError("modulus exponent must be >= 1");
        modulus = 1;
        for (int j = 0; j < n; ++j) {
            modulus *= static_cast<uint64_t>(p);
            if (modulus > (1ull << 31)) throw ArgumentError("modulus too large");
        }
        r = val % modulus;
    }

    ModValue with(uint64_t val) const {
        ModValue out = *this;
        out.r = val % modulus;
        return out;
    }

    friend ModValue operator+(ModValue a, const ModValue& b) {
        a.check(b);
        a.r = (a.r + b.r) % a.modulus;
        return a;
    }
    friend ModValue operator-(ModValue a, const ModValue& b) {
        a.check(b);
        a.r = (a.r + a.modulus - b.r) % a.modulus;
        return a;
    }
    friend ModValue operator*(ModValue a, const ModValue& b) {
        a.check(b);
        a.r = (a.r * b.r) % a.modulus;
        return a;
    }
    bool operator==(const ModValue& o) const {
        return p == o.p && n == o.n && r == o.r;
    }

    ModValue inv() const {
        // extended gcd; the argument must be a unit
        int64_t t0 = 0, t1 = 1;
        int64_t r0 = static_cast<int64_t>(modulus), r1 = static_cast<int64_t>(r);
        while (r1 != 0) {
            int64_t q = r0 / r1;
            int64_t t2 = t0 - q * t1;
            t0 = t1;
            t1 = t2;
            int64_t r2 = r0 - q * r1;
            r0 = r1;
            r1 = r2;
        }
        if (r0 != 1) throw PreconditionError("non-unit denominator modulo p^n");
        if (t0 < 0) t0 += static_cast<int64_t>(modulus);
        return with(static_cast<uint64_t>(t0));
    }

    ModValue pow(long e) const {
        if (e < 0) return inv().pow(-e);
        ModValue acc = with(1), base = *this;
        while (e) {
            if (e & 1) acc = acc * base;
            base = base * base;
            e >>= 1;
        }
        return acc;
    }

  private:
    void check(const ModValue& o) const {
        if (p != o.p || n != o.n) throw ArgumentError("mixed moduli");
    }
};

/// Exact rational reduced mod p^n; denominator must be a unit.
inline ModValue rat_mod(const Rat& x, long p, int n) {
    ModValue base(p, n);
    Int num = x.get_num(), den = x.get_den();
    Int m(static_cast<long>(base.modulus));
    Int nr = num % m, dr = den % m;
    if (nr < 0) nr += m;
    ModValue numv = base.with(nr.get_ui());
    ModValue denv = base.with(dr.get_ui());
    return numv * denv.inv();
}

/// Z_p(k) mod p^n, computed with modular inverses (all chain entries are
/// below p, hence units).
inline ModValue z_trunc_mod(const Index& k, long p, int n) {
    ModValue base(p, n);
    // v[m] = Z_m(k) as the DP over the last chain entry, all mod p^n
    std::vector<ModValue> cur(static_cast<size_t>(p) + 1, base.with(1));
    for (int d = 1; d <= depth(k); ++d) {
        std::vector<ModValue> next(static_cast<size_t>(p) + 1, base.with(0));
        int kd = k.entries[static_cast<size_t>(d - 1)];
        for (long m = 2; m <= p; ++m) {
            ModValue term = cur[static_cast<size_t>(m - 1)] * base.with(static_cast<uint64_t>(m - 1)).pow(-kd);
            next[static_cast<size_t>(m)] = next[static_cast<size_t>(m - 1)] + term;
        }
        cur = std::move(next);
    }
    return cur[static_cast<size_t>(p)];
}

inline ModValue z_trunc_mod(const LinComb& w, long p, int n) {
    ModValue out(p, n);
    for (const auto& [word, c] : w.terms())
        out = out + rat_mod(c, p, n) * z_trunc_mod(index_from_word(word), p, n);
    return out;
}

/// Componentwise double shuffle congruences mod p^n:
///   (a) Z_p(k * l) = Z_p(k) Z_p(l)
///   (b) Z_p(k sh l) = (-1)^{wt l} sum_{wt l' < n} b(l;l') Z_p(k, rev(l+l')) p^{wt l'}
inline std::pair<Witness, Witness> check_hatA_dsr(const Index& k, const Index& l, long p, int n) {
    Witness harm = Witness::pass();
    {
        ModValue lhs = z_trunc_mod(harmonic_product(k, l), p, n);
        ModValue rhs = z_trunc_mod(k, p, n) * z_trunc_mod(l, p, n);
        if (!(lhs == rhs))
            harm = Witness::fail("harmonic mod p^n", 0, Rat(static_cast<long>(lhs.r)),
                                 Rat(static_cast<long>(rhs.r)));
    }
    Witness shuf = Witness::pass();
    {
        ModValue lhs = z_trunc_mod(shuffle_product(k, l), p, n);
        ModValue rhs(p, n);
        for (int w = 0; w < n; ++w)
            for_each_composition(w, depth(l), [&](const Composition& lp) {
                Rat b = b_binom(l, lp);
                if (b == 0) return;
                ModValue term = rat_mod(b, p, n) *
                                z_trunc_mod(concat(k, reversed(shifted(l, lp))), p, n) *
                                ModValue(p, n).with(static_cast<uint64_t>(p)).pow(w);
                rhs = rhs + term;
            });
        if (weight(l) % 2) rhs = ModValue(p, n) - rhs;
        if (!(lhs == rhs))
            shuf = Witness::fail("shuffle mod p^n", 0, Rat(static_cast<long>(lhs.r)),
                                 Rat(static_cast<long>(rhs.r)));
    }
    return {harm, shuf};
}

} // namespace tsmzv
