#pragma once

/**
 * @file series.hpp
 * @brief Truncated power series in t over exact rationals, mod t^N.
 */

#include <vector>

#include "tsmzv/errors.hpp"
#include "tsmzv/rational.hpp"

namespace tsmzv {

struct Series {
    int order = 1;          // N: coefficients of t^0 .. t^{N-1}
    std::vector<Rat> c;

    Series() : c(1) {}
    explicit Series(int N) : order(N), c(static_cast<size_t>(N)) {
        if (N < 1) throw ArgumentError("series order must be >= 1");
    }
    static Series constant(const Rat& v, int N) {
        Series s(N);
        s.c[0] = v;
        return s;
    }
    static Series one(int N) { return constant(Rat(1), N); }

    bool operator==(const Series& o) const { return order == o.order && c == o.c; }

    Series& operator+=(const Series& o) {
        check_order(o);
        for (int j = 0; j < order; ++j) c[j] += o.c[j];
        return *this;
    }
    Series& operator-=(const Series& o) {
        check_order(o);
        for (int j = 0; j < order; ++j) c[j] -= o.c[j];
        return *this;
    }
    Series& operator*=(const Rat& s) {
        for (auto& v : c) v *= s;
        return *this;
    }
    friend Series operator+(Series a, const Series& b) { return a += b; }
    friend Series operator-(Series a, const Series& b) { return a -= b; }
    friend Series operator*(Series a, const Rat& s) { return a *= s; }
    friend Series operator*(const Rat& s, Series a) { return a *= s; }

    friend Series operator*(const Series& a, const Series& b) {
        a.check_order(b);
        Series out(a.order);
        for (int i = 0; i < a.order; ++i) {
            if (a.c[i] == 0) continue;
            for (int j = 0; i + j < a.order; ++j) {
                if (b.c[j] == 0) continue;
                out.c[i + j] += a.c[i] * b.c[j];
            }
        }
        return out;
    }

    /// Multiply by t^m, dropping overflowed coefficients.
    Series shifted(int m) const {
        if (m < 0) throw ArgumentError("series shift must be >= 0");
        Series out(order);
        for (int j = 0; j + m < order; ++j) out.c[j + m] = c[j];
        return out;
    }

    bool is_zero() const {
        for (const auto& v : c)
            if (v != 0) return false;
        return true;
    }

  private:
    void check_order(const Series& o) const {
        if (order != o.order) throw ArgumentError("series order mismatch");
    }
};

/// Expansion of 1/(n + t)^k: coefficient of t^l is (-1)^l binom(k+l-1, l) n^{-(k+l)}.
inline Series expand_inverse_power(long n, int k, int N) {
    if (n == 0) throw SingularityError("expand_inverse_power: pole at n = 0");
    if (k < 1) throw ArgumentError("expand_inverse_power: exponent must be >= 1");
    Series out(N);
    Rat npow = rat_pow(Rat(n), -k);
    Rat ninv = Rat(1) / Rat(n);
    for (int l = 0; l < N; ++l) {
        Rat coeff(binomial(k + l - 1, l));
        if (l % 2) coeff = -coeff;
        out.c[l] = coeff * npow;
        npow *= ninv;
    }
    return out;
}

} // namespace tsmzv
