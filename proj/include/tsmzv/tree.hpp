#pragma once

/**
 * @file tree.hpp
 * @brief 2-colored rooted trees, their truncated series values, the four
 *        value-preserving transformations, harvest, and word extraction.
 */

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tsmzv/truncated.hpp"

namespace tsmzv {

struct TreeEdge {
    std::string a, b; // normalized: a < b

    TreeEdge(std::string x, std::string y) {
        if (x == y) throw ArgumentError("tree: self-loop edge");
        if (x < y) {
            a = std::move(x);
            b = std::move(y);
        } else {
            a = std::move(y);
            b = std::move(x);
        }
    }
    std::string other(const std::string& v) const {
        if (v == a) return b;
        if (v == b) return a;
        throw ArgumentError("tree: vertex not on edge");
    }
    auto operator<=>(const TreeEdge&) const = default;
};

struct ColoredTree {
    std::set<std::string> vertices;
    std::set<TreeEdge> edges;
    std::string root;
    std::set<std::string> black;

    int degree(const std::string& v) const {
        int d = 0;
        for (const auto& e : edges)
            if (e.a == v || e.b == v) ++d;
        return d;
    }
    bool is_black(const std::string& v) const { return black.count(v) > 0; }
    bool is_terminal(const std::string& v) const { return degree(v) == 1; }

    std::vector<std::string> neighbors(const std::string& v) const {
        std::vector<std::string> out;
        for (const auto& e : edges)
            if (e.a == v)
                out.push_back(e.b);
            else if (e.b == v)
                out.push_back(e.a);
        std::sort(out.begin(), out.end());
        return out;
    }

    std::vector<std::string> black_sorted() const {
        return {black.begin(), black.end()};
    }

    /// Throws with the violated invariant named.
    void validate() const {
        if (vertices.empty()) throw ArgumentError("tree: vertex set is empty");
        if (!vertices.count(root)) throw ArgumentError("tree: root is not a vertex");
        for (const auto& e : edges)
            if (!vertices.count(e.a) || !vertices.count(e.b))
                throw ArgumentError("tree: edge endpoint is not a vertex");
        for (const auto& v : black)
            if (!vertices.count(v)) throw ArgumentError("tree: black vertex is not a vertex");
        if (edges.size() + 1 != vertices.size())
            throw ArgumentError("tree: #V != #E + 1");
        // connectivity
        std::set<std::string> seen{root};
        std::vector<std::string> stack{root};
        while (!stack.empty()) {
            std::string v = stack.back();
            stack.pop_back();
            for (const auto& w : neighbors(v))
                if (seen.insert(w).second) stack.push_back(w);
        }
        if (seen.size() != vertices.size()) throw ArgumentError("tree: not connected");
        for (const auto& v : vertices)
            if (is_terminal(v) && !is_black(v))
                throw ArgumentError("tree: terminal vertex '" + v + "' is not black");
    }

    /// parent map relative to the root (root maps to "").
    std::map<std::string, std::string> parents() const {
        std::map<std::string, std::string> par;
        par[root] = "";
        std::vector<std::string> stack{root};
        while (!stack.empty()) {
            std::string v = stack.back();
            stack.pop_back();
            for (const auto& w : neighbors(v))
                if (!par.count(w)) {
                    par[w] = v;
                    stack.push_back(w);
                }
        }
        return par;
    }
};

using EdgeIndex = std::map<TreeEdge, int>;

inline void validate_index(const ColoredTree& X, const EdgeIndex& k) {
    if (k.size() != X.edges.size()) throw ArgumentError("edge index: not a total map over E");
    for (const auto& [e, v] : k) {
        if (!X.edges.count(e)) throw ArgumentError("edge index: label on unknown edge");
        if (v < 0) throw ArgumentError("edge index: negative label");
    }
}

/// Unique simple path between two vertices, as an edge list; empty for a == b.
inline std::vector<TreeEdge> path(const ColoredTree& X, const std::string& a, const std::string& b) {
    if (!X.vertices.count(a) || !X.vertices.count(b))
        throw ArgumentError("path: unknown vertex");
    std::map<std::string, std::string> prev;
    prev[a] = a;
    std::vector<std::string> queue{a};
    for (size_t q = 0; q < queue.size() && !prev.count(b); ++q)
        for (const auto& w : X.neighbors(queue[q]))
            if (!prev.count(w)) {
                prev[w] = queue[q];
                queue.push_back(w);
            }
    std::vector<TreeEdge> out;
    for (std::string v = b; v != a; v = prev.at(v)) out.emplace_back(v, prev.at(v));
    std::reverse(out.begin(), out.end());
    return out;
}

/// Every path between two distinct black vertices carries positive total label.
inline bool essentially_positive(const ColoredTree& X, const EdgeIndex& k) {
    auto blacks = X.black_sorted();
    for (size_t i = 0; i < blacks.size(); ++i)
        for (size_t j = i + 1; j < blacks.size(); ++j) {
            int s = 0;
            for (const auto& e : path(X, blacks[i], blacks[j])) s += k.at(e);
            if (s <= 0) return false;
        }
    return true;
}

namespace detail {

/// For every edge, the black vertices strictly below it (away from the root).
inline std::map<TreeEdge, std::vector<std::string>> blacks_below(const ColoredTree& X) {
    auto par = X.parents();
    std::map<TreeEdge, std::vector<std::string>> below;
    for (const auto& e : X.edges) below[e] = {};
    for (const auto& v : X.black) {
        // walk v's root path; v lies below each edge on it
        for (std::string w = v; w != X.root; w = par.at(w))
            below[TreeEdge(w, par.at(w))].push_back(v);
    }
    return below;
}

} // namespace detail

/// Series value at one black vertex u: positive m_v for v in V._bullet minus u
/// with their sum below M, m_u the balancing negative entry, and per-edge
/// factors L_e^{-k_e} expanded in t where u sits below the edge.
inline Series tree_value_at(const ColoredTree& X, const std::string& u, const EdgeIndex& k,
                            const TruncationParams& p, Evaluator& ev) {
    X.validate();
    validate_index(X, k);
    if (!X.is_black(u)) throw ArgumentError("tree value: vertex u must be black");
    if (!essentially_positive(X, k))
        throw ArgumentError("tree value: index is not essentially positive");
    if (X.vertices.size() == 1) return Series::one(p.N);

    auto below = detail::blacks_below(X);
    std::vector<std::string> others;
    for (const auto& v : X.black_sorted())
        if (v != u) others.push_back(v);

    struct EdgeFactor {
        int label;
        bool has_t;
        std::vector<size_t> below_others; // positions into others
        bool u_below;
    };
    std::vector<EdgeFactor> factors;
    for (const auto& e : X.edges) {
        const auto& bl = below.at(e);
        if (k.at(e) == 0) continue;
        EdgeFactor f;
        f.label = k.at(e);
        f.u_below = std::find(bl.begin(), bl.end(), u) != bl.end();
        f.has_t = f.u_below;
        for (const auto& v : bl) {
            if (v == u) continue;
            f.below_others.push_back(static_cast<size_t>(
                std::find(others.begin(), others.end(), v) - others.begin()));
        }
        factors.push_back(std::move(f));
    }

    Series total(p.N);
    std::vector<int> m(others.size(), 0);
    std::function<void(size_t, int)> rec = [&](size_t pos, int used) {
        if (pos == m.size()) {
            if (used == 0) return; // m_u = 0 is excluded
            int mu = -used;
            Rat scalar(1);
            Series ser = Series::one(p.N);
            bool have_series = false;
            for (const auto& f : factors) {
                long c = f.u_below ? mu : 0;
                for (size_t j : f.below_others) c += m[j];
                if (c == 0) {
                    if (f.has_t)
                        throw SingularityError("tree value: edge factor with zero constant term");
                    throw SingularityError("tree value: vanishing edge factor");
                }
                if (f.has_t) {
                    ser = ser * expand_inverse_power(c, f.label, p.N);
                    have_series = true;
                } else {
                    scalar *= rat_pow(Rat(c), -f.label);
                }
            }
            if (have_series)
                total += ser * scalar;
            else
                total.c[0] += scalar;
            return;
        }
        for (int v = 1; used + v <= p.M - 1; ++v) {
            ev.tick();
            m[pos] = v;
            rec(pos + 1, used + v);
        }
    };
    // constraint: sum over others < M and sum > 0
    rec(0, 0);
    return total;
}

/// Sum of tree_value_at over all black vertices.
inline Series tree_value(const ColoredTree& X, const EdgeIndex& k, const TruncationParams& p,
                         Evaluator& ev) {
    X.validate();
    validate_index(X, k);
    if (!essentially_positive(X, k))
        throw ArgumentError("tree value: index is not essentially positive");
    if (X.vertices.size() == 1)
        return X.is_black(X.root) ? Series::one(p.N) : Series(p.N);
    Series out(p.N);
    for (const auto& u : X.black_sorted()) out += tree_value_at(X, u, k, p, ev);
    return out;
}

/// Contract one edge {a,b} with b white, non-root, k_e = 0; b merges into a.
/// Returns nothing when no such edge exists.
inline std::optional<std::pair<ColoredTree, EdgeIndex>> contract_zero_edge(const ColoredTree& X,
                                                                           const EdgeIndex& k) {
    for (const auto& e : X.edges) {
        if (k.at(e) != 0) continue;
        for (const auto& b : {e.a, e.b}) {
            if (X.is_black(b) || b == X.root) continue;
            std::string a = e.other(b);
            ColoredTree Y;
            Y.root = X.root;
            Y.black = X.black;
            Y.vertices = X.vertices;
            Y.vertices.erase(b);
            EdgeIndex kk;
            for (const auto& f : X.edges) {
                if (f == e) continue;
                if (f.a == b || f.b == b) {
                    TreeEdge g(a, f.other(b));
                    Y.edges.insert(g);
                    kk.emplace(g, k.at(f));
                } else {
                    Y.edges.insert(f);
                    kk.emplace(f, k.at(f));
                }
            }
            return std::make_pair(std::move(Y), std::move(kk));
        }
    }
    return std::nullopt;
}

/// Replace the two edges at a white, non-root, degree-2 vertex by one edge
/// labeled with the sum of the two labels.
inline std::optional<std::pair<ColoredTree, EdgeIndex>> joint_degree2_white(const ColoredTree& X,
                                                                            const EdgeIndex& k) {
    for (const auto& b : X.vertices) {
        if (X.is_black(b) || b == X.root || X.degree(b) != 2) continue;
        auto nb = X.neighbors(b);
        TreeEdge e1(b, nb[0]), e2(b, nb[1]);
        ColoredTree Y;
        Y.root = X.root;
        Y.black = X.black;
        Y.vertices = X.vertices;
        Y.vertices.erase(b);
        TreeEdge joined(nb[0], nb[1]);
        Y.edges.insert(joined);
        EdgeIndex kk;
        kk.emplace(joined, k.at(e1) + k.at(e2));
        for (const auto& f : X.edges) {
            if (f == e1 || f == e2) continue;
            Y.edges.insert(f);
            kk.emplace(f, k.at(f));
        }
        return std::make_pair(std::move(Y), std::move(kk));
    }
    return std::nullopt;
}

struct RootChangeTerm {
    Rat coeff;   // includes the global sign (-1)^{sum of path labels}
    int t_power; // < requested order
    ColoredTree tree;
    EdgeIndex index;
};

/// Finite expansion of the value in terms of the re-rooted tree: coefficients
/// are signed binomial products over shift vectors l on the old-new root path
/// with wt(l) < N.
inline std::vector<RootChangeTerm> change_root(const ColoredTree& X, const EdgeIndex& k,
                                               const std::string& new_root, int N) {
    if (!X.vertices.count(new_root)) throw ArgumentError("change_root: unknown vertex");
    auto pth = path(X, X.root, new_root);
    ColoredTree Y = X;
    Y.root = new_root;
    std::vector<RootChangeTerm> out;
    if (pth.empty()) {
        out.push_back({Rat(1), 0, Y, k});
        return out;
    }
    int sign_exp = 0;
    Composition labels;
    for (const auto& e : pth) {
        sign_exp += k.at(e);
        labels.entries.push_back(k.at(e));
    }
    Rat sign = sign_exp % 2 ? Rat(-1) : Rat(1);
    for (int n = 0; n < N; ++n)
        for_each_composition(n, static_cast<int>(pth.size()), [&](const Composition& l) {
            Rat b = b_binom(labels, l);
            if (b == 0) return;
            EdgeIndex kk = k;
            for (size_t j = 0; j < pth.size(); ++j) kk.at(pth[j]) += l.entries[j];
            out.push_back({sign * b, n, Y, std::move(kk)});
        });
    return out;
}

/// Index surgery at a white branch vertex: each child edge label l_i >= 1 is
/// decremented in turn while the root-side label gains one; the values sum to
/// the original.  Returns nothing when the configuration does not match.
inline std::optional<std::vector<EdgeIndex>> one_step_decompose(const ColoredTree& X,
                                                                const EdgeIndex& k,
                                                                const std::string& branch) {
    if (!X.vertices.count(branch)) throw ArgumentError("one_step_decompose: unknown vertex");
    if (X.is_black(branch) || branch == X.root) return std::nullopt;
    auto par = X.parents();
    TreeEdge parent_edge(branch, par.at(branch));
    std::vector<TreeEdge> child_edges;
    for (const auto& w : X.neighbors(branch)) {
        if (w == par.at(branch)) continue;
        TreeEdge e(branch, w);
        if (k.at(e) < 1) return std::nullopt;
        child_edges.push_back(e);
    }
    if (child_edges.empty()) return std::nullopt;
    std::vector<EdgeIndex> out;
    for (const auto& e : child_edges) {
        EdgeIndex h = k;
        h.at(e) -= 1;
        h.at(parent_edge) += 1;
        out.push_back(std::move(h));
    }
    return out;
}

struct Harvestability {
    bool ok = true;
    std::vector<std::string> violations;
};

/// H1: root terminal.  H2: white vertices branched.  H3: black vertices not
/// branched.  H4: white parent implies positive child-edge label.  H5:
/// black-black edges carry positive labels.
inline Harvestability is_harvestable(const ColoredTree& X, const EdgeIndex& k) {
    X.validate();
    validate_index(X, k);
    Harvestability out;
    auto fail = [&](const std::string& s) {
        out.ok = false;
        out.violations.push_back(s);
    };
    if (X.vertices.size() > 1 && X.degree(X.root) != 1) fail("H1: root is not a terminal");
    if (!X.is_black(X.root)) fail("H1: root is not black");
    for (const auto& v : X.vertices) {
        int d = X.degree(v);
        if (!X.is_black(v) && d < 3) fail("H2: white vertex '" + v + "' is not branched");
        if (X.is_black(v) && d >= 3) fail("H3: black vertex '" + v + "' is branched");
    }
    auto par = X.parents();
    for (const auto& [v, p] : par) {
        if (p.empty()) continue;
        if (!X.is_black(p) && k.at(TreeEdge(v, p)) <= 0)
            fail("H4: zero label under white parent of '" + v + "'");
    }
    for (const auto& e : X.edges)
        if (X.is_black(e.a) && X.is_black(e.b) && k.at(e) <= 0)
            fail("H5: zero label on black-black edge");
    return out;
}

namespace detail {

inline std::string fresh_id(const ColoredTree& X, std::string base) {
    while (X.vertices.count(base)) base += '\'';
    return base;
}

/// Insert a white vertex at v: children of v reattach to the new vertex, and
/// a zero-labeled edge joins v to it.
inline void insert_white_above(ColoredTree& X, EdgeIndex& k, const std::string& v) {
    auto par = X.parents();
    std::string nv = fresh_id(X, "w#" + v);
    std::vector<TreeEdge> child_edges;
    for (const auto& w : X.neighbors(v))
        if (w != par.at(v)) child_edges.push_back(TreeEdge(v, w));
    X.vertices.insert(nv);
    for (const auto& e : child_edges) {
        TreeEdge g(nv, e.other(v));
        X.edges.erase(e);
        X.edges.insert(g);
        k.emplace(g, k.at(e));
        k.erase(e);
    }
    TreeEdge link(v, nv);
    X.edges.insert(link);
    k.emplace(link, 0);
}

} // namespace detail

/// Transform (X, k) with black root and essentially positive index into a
/// harvestable pair of the same value: contract zero white edges, joint
/// degree-2 whites, then insert white vertices above black branch points and
/// above a non-terminal root.
inline std::pair<ColoredTree, EdgeIndex> harvest(const ColoredTree& X0, const EdgeIndex& k0) {
    X0.validate();
    validate_index(X0, k0);
    if (!X0.is_black(X0.root)) throw ArgumentError("harvest: root must be black");
    if (!essentially_positive(X0, k0))
        throw ArgumentError("harvest: index is not essentially positive");

    ColoredTree X = X0;
    EdgeIndex k = k0;
    while (auto step = contract_zero_edge(X, k)) std::tie(X, k) = std::move(*step);
    while (auto step = joint_degree2_white(X, k)) std::tie(X, k) = std::move(*step);
    for (bool changed = true; changed;) {
        changed = false;
        for (const auto& v : X.vertices) {
            if (v == X.root || !X.is_black(v) || X.degree(v) < 3) continue;
            detail::insert_white_above(X, k, v);
            changed = true;
            break;
        }
    }
    if (X.vertices.size() > 1 && X.degree(X.root) >= 2) detail::insert_white_above(X, k, X.root);

    auto hv = is_harvestable(X, k);
    if (!hv.ok)
        throw std::logic_error("harvest: result is not harvestable: " + hv.violations.front());
    return {std::move(X), std::move(k)};
}

/// The recursively defined element of H1 attached to a harvestable pair:
/// linear chains give z-monomials, a white branch gives the shuffle of its
/// subtree words times x^{k'} times the chain below.
inline LinComb word_of_harvestable(const ColoredTree& X, const EdgeIndex& k) {
    auto hv = is_harvestable(X, k);
    if (!hv.ok) throw ArgumentError("word extraction: pair is not harvestable: " + hv.violations.front());
    if (X.vertices.size() == 1) return LinComb::one();

    // climb the black chain from the root
    std::vector<int> chain; // labels, root edge first
    std::string prev = X.root;
    std::string cur = X.neighbors(X.root).front();
    chain.push_back(k.at(TreeEdge(prev, cur)));
    while (X.is_black(cur)) {
        std::string next;
        for (const auto& w : X.neighbors(cur))
            if (w != prev) next = w;
        if (next.empty()) {
            // case (i): linear all-black chain
            std::vector<int> es(chain.rbegin(), chain.rend());
            return LinComb::basis(Index(std::move(es)));
        }
        chain.push_back(k.at(TreeEdge(cur, next)));
        prev = cur;
        cur = next;
    }

    // case (ii): cur is the white branch vertex, prev its root-side neighbor
    int kprime = chain.back();
    std::vector<int> tail(chain.rbegin() + 1, chain.rend());
    LinComb sh = LinComb::one();
    for (const auto& c : X.neighbors(cur)) {
        if (c == prev) continue;
        // detach the subtree through c; cur becomes its black root
        ColoredTree S;
        S.root = cur;
        S.vertices.insert(cur);
        S.black.insert(cur);
        std::vector<std::string> stack{c};
        S.vertices.insert(c);
        std::set<std::string> seen{cur, c};
        while (!stack.empty()) {
            std::string v = stack.back();
            stack.pop_back();
            if (X.is_black(v)) S.black.insert(v);
            for (const auto& w : X.neighbors(v)) {
                if (seen.count(w)) continue;
                seen.insert(w);
                S.vertices.insert(w);
                stack.push_back(w);
            }
        }
        EdgeIndex sk;
        for (const auto& e : X.edges)
            if (S.vertices.count(e.a) && S.vertices.count(e.b) &&
                !(e == TreeEdge(cur, prev))) {
                S.edges.insert(e);
                sk.emplace(e, k.at(e));
            }
        sh = shuffle_product(sh, word_of_harvestable(S, sk));
    }
    LinComb out;
    Word xpow = append_x(Word{}, kprime);
    Word tail_word = word_from_index(Index(tail));
    for (const auto& [w, c] : sh.terms())
        out.add(concat(concat(w, xpow), tail_word), c);
    return out;
}

/// Value through the word: Z^sh applied to w(X, k); equals the direct value.
inline Series tree_value_via_word(const ColoredTree& X, const EdgeIndex& k,
                                  const TruncationParams& p, Evaluator& ev) {
    return ev.sh_linear(word_of_harvestable(X, k), p);
}

/// General pipeline: harvest black-rooted trees directly; otherwise change the
/// root to a black terminal first and push every expansion term through the
/// harvest-and-word path.
inline Series tree_value_general(const ColoredTree& X, const EdgeIndex& k,
                                 const TruncationParams& p, Evaluator& ev) {
    X.validate();
    validate_index(X, k);
    if (!essentially_positive(X, k))
        throw ArgumentError("tree value: index is not essentially positive");
    if (X.vertices.size() == 1)
        return X.is_black(X.root) ? Series::one(p.N) : Series(p.N);

    if (X.is_black(X.root)) {
        auto [Xh, kh] = harvest(X, k);
        return tree_value_via_word(Xh, kh, p, ev);
    }
    std::string target;
    for (const auto& v : X.black_sorted())
        if (X.is_terminal(v)) {
            target = v;
            break;
        }
    Series out(p.N);
    for (const auto& term : change_root(X, k, target, p.N)) {
        auto [Xh, kh] = harvest(term.tree, term.index);
        out += (tree_value_via_word(Xh, kh, p, ev) * term.coeff).shifted(term.t_power);
    }
    return out;
}

} // namespace tsmzv
