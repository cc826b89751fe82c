#pragma once

/**
 * @file word.hpp
 * @brief Words over the two-letter alphabet {x, y} and the z-basis bijection.
 *
 * A word lies in H1 iff it is empty or starts with y, and in H0 iff it is
 * empty or starts with y and ends with x.  Words in H1 decompose uniquely as
 * z_{k_1}...z_{k_r} with z_k = y x^{k-1}.
 */

#include <compare>
#include <string>

#include "tsmzv/errors.hpp"
#include "tsmzv/index.hpp"

namespace tsmzv {

struct Word {
    std::string letters; // over {'x','y'}

    Word() = default;
    explicit Word(std::string ls) : letters(std::move(ls)) { validate(); }

    void validate() const {
        for (char c : letters)
            if (c != 'x' && c != 'y') throw ArgumentError("word letter must be 'x' or 'y'");
    }

    bool empty() const { return letters.empty(); }
    size_t size() const { return letters.size(); }

    auto operator<=>(const Word&) const = default;
};

inline bool in_h1(const Word& w) { return w.empty() || w.letters.front() == 'y'; }
inline bool in_h0(const Word& w) {
    return w.empty() || (w.letters.front() == 'y' && w.letters.back() == 'x');
}

inline Word word_from_index(const Index& k) {
    std::string ls;
    for (int e : k.entries) {
        ls += 'y';
        ls.append(static_cast<size_t>(e - 1), 'x');
    }
    return Word(std::move(ls));
}

inline Index index_from_word(const Word& w) {
    if (!in_h1(w)) throw SubspaceError("word is not in H1: '" + w.letters + "'");
    std::vector<int> es;
    for (char c : w.letters) {
        if (c == 'y')
            es.push_back(1);
        else
            ++es.back();
    }
    return Index(std::move(es));
}

inline Word concat(const Word& a, const Word& b) { return Word(a.letters + b.letters); }

/// a * x^l
inline Word append_x(const Word& a, int l) {
    if (l < 0) throw ArgumentError("append_x: negative power");
    return Word(a.letters + std::string(static_cast<size_t>(l), 'x'));
}

} // namespace tsmzv
