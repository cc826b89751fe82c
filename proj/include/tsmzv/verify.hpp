#pragma once

/**
 * @file verify.hpp
 * @brief Identity suites over small exhaustive grids and randomized trees.
 *
 * Every suite returns one named result per instance, ordered by instance key,
 * so reports are deterministic regardless of how callers schedule them.
 */

#include <random>
#include <sstream>

#include "tsmzv/finite.hpp"
#include "tsmzv/mt.hpp"
#include "tsmzv/numeric.hpp"
#include "tsmzv/tree.hpp"

namespace tsmzv {

struct InstanceResult {
    std::string name;
    bool pass = true;
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    std::vector<InstanceResult> results;

    int failures() const {
        int n = 0;
        for (const auto& r : results)
            if (!r.pass) ++n;
        return n;
    }
    bool all_pass() const { return failures() == 0; }

    void add(std::string name, bool pass, std::string detail = "") {
        results.push_back({std::move(name), pass, std::move(detail)});
    }
    void add(std::string name, const Witness& w) {
        if (w.ok) {
            add(std::move(name), true);
        } else {
            std::ostringstream os;
            os << w.context << " first differs at t^" << w.position << ": " << to_string(w.lhs)
               << " vs " << to_string(w.rhs);
            add(std::move(name), false, os.str());
        }
    }
};

inline std::string instance_key(const Index& k, const Index& l, int M) {
    return "k=(" + to_string(k) + ") l=(" + to_string(l) + ") M=" + std::to_string(M);
}

/// Both truncated double shuffle relations over all index pairs with
/// wt(k)+wt(l) <= wt_max.
inline SuiteReport run_dsr_suite(int wt_max, const std::vector<int>& Ms, int N,
                                 uint64_t work_cap = UINT64_MAX) {
    SuiteReport rep{"dsr", {}};
    Evaluator ev;
    ev.set_work_cap(work_cap);
    auto indices = all_indices_up_to_weight(wt_max);
    for (const auto& k : indices)
        for (const auto& l : indices) {
            if (weight(k) + weight(l) > wt_max) continue;
            for (int M : Ms) {
                auto [harm, shuf] = ev.check_dsr(k, l, TruncationParams(M, N));
                rep.add("harmonic " + instance_key(k, l, M), harm);
                rep.add("shuffle " + instance_key(k, l, M), shuf);
            }
        }
    return rep;
}

/// Degree-slice identity plus H0 membership of the slices.
inline SuiteReport run_taylor_suite(int wt_max, int N, const std::vector<int>& Ms,
                                    uint64_t work_cap = UINT64_MAX) {
    SuiteReport rep{"taylor", {}};
    Evaluator ev;
    ev.set_work_cap(work_cap);
    for (const auto& k : all_indices_up_to_weight(wt_max)) {
        for (Bullet b : {Bullet::Star, Bullet::Sh})
            for (int n = 0; n < N; ++n)
                rep.add("w in H0 k=(" + to_string(k) + ") bullet=" + to_string(b) +
                            " n=" + std::to_string(n),
                        w_hatS(k, b, n).in_h0());
        for (int M : Ms)
            rep.add("taylor k=(" + to_string(k) + ") M=" + std::to_string(M),
                    ev.check_taylor_identity(k, TruncationParams(M, N)));
    }
    return rep;
}

/// Joint double-chain sums against Z_M of shuffle products, exhaustively.
inline SuiteReport run_lemma_suite(int wt_sum_max, int M_max,
                                   uint64_t work_cap = UINT64_MAX) {
    SuiteReport rep{"lemma23", {}};
    Evaluator ev;
    ev.set_work_cap(work_cap);
    auto indices = all_indices_up_to_weight(wt_sum_max - 1);
    for (const auto& k : indices) {
        if (k.entries.empty()) continue;
        for (const auto& l : indices) {
            if (l.entries.empty() || weight(k) + weight(l) > wt_sum_max) continue;
            for (int M = 1; M <= M_max; ++M)
                rep.add(instance_key(k, l, M), ev.check_partial_fraction_lemma(k, l, M));
        }
    }
    return rep;
}

/// MT identity block: star tree, t-expansion, root relation, and the
/// constant-coefficient corollary.
inline SuiteReport run_mt_suite(int wt_max, int r_max, const std::vector<int>& Ms, int N,
                                uint64_t work_cap = UINT64_MAX) {
    SuiteReport rep{"mt", {}};
    Evaluator ev;
    ev.set_work_cap(work_cap);
    std::vector<MtIndex> all;
    for (int r = 1; r <= r_max; ++r) {
        std::vector<int> heads(static_cast<size_t>(r));
        std::function<void(int, int)> rec = [&](int pos, int used) {
            if (pos == r) {
                for (int tail = 0; used + tail <= wt_max; ++tail) {
                    try {
                        all.emplace_back(heads, tail);
                    } catch (const ArgumentError&) {
                        // more than one zero entry
                    }
                }
                return;
            }
            for (int v = 0; used + v <= wt_max; ++v) {
                heads[static_cast<size_t>(pos)] = v;
                rec(pos + 1, used + v);
            }
        };
        rec(0, 0);
    }
    for (const auto& idx : all)
        for (int M : Ms) {
            TruncationParams p(M, N);
            std::string key = "idx=(" + to_string(idx) + ") M=" + std::to_string(M);
            rep.add("star-tree " + key, check_mt_tree(idx, p, ev));
            rep.add("t-expansion " + key, check_mt_t_expansion(idx, p, ev));
            rep.add("root-relation " + key, check_mt_root_relation(idx, p, ev));
            bool heads_positive = true;
            for (int h : idx.heads) heads_positive &= h > 0;
            if (heads_positive) {
                rep.add("corollary " + key,
                        check_mt_corollary_t0(idx.heads, std::nullopt, M, ev));
                if (idx.tail >= 1)
                    rep.add("corollary-x " + key,
                            check_mt_corollary_t0(idx.heads, idx.tail, M, ev));
            }
        }
    return rep;
}

/// Componentwise mod-p^n double shuffle congruences.
inline SuiteReport run_finite_suite(const std::vector<long>& primes, int n_max, int wt_max) {
    SuiteReport rep{"finite", {}};
    auto indices = all_indices_up_to_weight(wt_max);
    for (long p : primes) {
        if (!is_prime(p)) throw ArgumentError("finite suite: " + std::to_string(p) + " is not prime");
        for (int n = 1; n <= n_max; ++n)
            for (const auto& k : indices)
                for (const auto& l : indices) {
                    if (weight(k) + weight(l) > wt_max) continue;
                    auto [harm, shuf] = check_hatA_dsr(k, l, p, n);
                    std::string key = "k=(" + to_string(k) + ") l=(" + to_string(l) + ") p=" +
                                      std::to_string(p) + " n=" + std::to_string(n);
                    rep.add("harmonic " + key, harm);
                    rep.add("shuffle " + key, shuf);
                }
    }
    return rep;
}

/// Numeric convergence of a tree value to its series limit: the harvested
/// word gives the limit coefficients symbolically, the truncated values are
/// evaluated exactly and compared in doubles over an increasing M list.
inline LimitReport check_tree_limit(const ColoredTree& X, const EdgeIndex& k, int N,
                                    const std::vector<int>& M_list, double tol) {
    if (M_list.empty()) throw ArgumentError("check_tree_limit: empty M list");
    auto [Xh, kh] = harvest(X, k);
    LinComb w = word_of_harvestable(Xh, kh);

    Regularizer reg;
    NumericEval num;
    std::vector<double> limits(static_cast<size_t>(N), 0.0);
    for (const auto& [word, c] : w.terms()) {
        SymbolicSeries s = reg.zeta_hatS_symbolic(index_from_word(word), Bullet::Sh, N);
        for (int n = 0; n < N; ++n)
            limits[static_cast<size_t>(n)] +=
                c.get_d() * num.combo(s.c[static_cast<size_t>(n)], tol / 16).value;
    }

    LimitReport rep{Index{}, Bullet::Sh, tol, {}, true};
    Evaluator ev;
    for (int M : M_list) {
        Series v = tree_value(X, k, TruncationParams(M, N), ev);
        for (int n = 0; n < N; ++n) {
            double diff =
                std::abs(v.c[static_cast<size_t>(n)].get_d() - limits[static_cast<size_t>(n)]);
            rep.rows.push_back({n, M, v.c[static_cast<size_t>(n)].get_d(),
                                limits[static_cast<size_t>(n)], diff});
            if (M == M_list.back() && diff >= tol) rep.pass = false;
        }
    }
    return rep;
}

/// Random valid tree: vertices attach to earlier ones, terminals forced black,
/// labels resampled until essentially positive.
inline std::pair<ColoredTree, EdgeIndex> random_tree(std::mt19937_64& rng, int max_vertices,
                                                     int max_label) {
    int nv = 2 + static_cast<int>(rng() % static_cast<uint64_t>(std::max(1, max_vertices - 1)));
    auto id = [](int i) {
        std::string s = std::to_string(i);
        return "v" + std::string(2 - std::min<size_t>(2, s.size()), '0') + s;
    };
    ColoredTree X;
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < nv; ++i) X.vertices.insert(id(i));
    for (int i = 1; i < nv; ++i) {
        int parent = static_cast<int>(rng() % static_cast<uint64_t>(i));
        edges.emplace_back(parent, i);
        X.edges.insert(TreeEdge(id(parent), id(i)));
    }
    X.root = id(static_cast<int>(rng() % static_cast<uint64_t>(nv)));
    for (int i = 0; i < nv; ++i)
        if (X.is_terminal(id(i)) || rng() % 2 == 0) X.black.insert(id(i));
    X.validate();

    EdgeIndex k;
    for (int attempt = 0; attempt < 100; ++attempt) {
        k.clear();
        for (const auto& e : X.edges)
            k.emplace(e, static_cast<int>(rng() % static_cast<uint64_t>(max_label + 1)));
        if (essentially_positive(X, k)) return {std::move(X), std::move(k)};
    }
    for (auto& [e, v] : k)
        if (v == 0) v = 1;
    return {std::move(X), std::move(k)};
}

/// Tree-calculus suite at one (tree, index, M): value preservation of the
/// rewrites, root-change reconstruction, and the word evaluation.
inline void check_tree_instance(SuiteReport& rep, const std::string& key, const ColoredTree& X,
                                const EdgeIndex& k, const TruncationParams& p, Evaluator& ev) {
    Series direct = tree_value(X, k, p, ev);

    if (auto step = contract_zero_edge(X, k)) {
        Series after = tree_value(step->first, step->second, p, ev);
        rep.add("contract " + key, after == direct,
                after == direct ? "" : "value changed by contraction");
    }
    if (auto step = joint_degree2_white(X, k)) {
        Series after = tree_value(step->first, step->second, p, ev);
        rep.add("joint " + key, after == direct, after == direct ? "" : "value changed by joint");
    }
    for (const auto& v : X.vertices) {
        auto parts = one_step_decompose(X, k, v);
        if (!parts) continue;
        Series sum(p.N);
        for (const auto& h : *parts) sum += tree_value(X, h, p, ev);
        rep.add("one-step " + key + " at " + v, sum == direct,
                sum == direct ? "" : "decomposition sum differs");
        break;
    }
    {
        // reconstruction through every choice of new root is exact; one is enough here
        std::string target = *X.vertices.begin() == X.root && X.vertices.size() > 1
                                 ? *std::next(X.vertices.begin())
                                 : *X.vertices.begin();
        Series sum(p.N);
        for (const auto& term : change_root(X, k, target, p.N))
            sum += (tree_value(term.tree, term.index, p, ev) * term.coeff).shifted(term.t_power);
        rep.add("change-root " + key, sum == direct,
                sum == direct ? "" : "root-change reconstruction differs");
    }
    if (X.is_black(X.root)) {
        auto [Xh, kh] = harvest(X, k);
        auto hv = is_harvestable(Xh, kh);
        bool pos = essentially_positive(Xh, kh);
        Series after = tree_value(Xh, kh, p, ev);
        rep.add("harvest " + key, hv.ok && pos && after == direct,
                !hv.ok ? hv.violations.front()
                       : (!pos ? "essential positivity lost" : (after == direct ? "" : "value changed")));
        Series via_word = tree_value_via_word(Xh, kh, p, ev);
        rep.add("word " + key, via_word == direct,
                via_word == direct ? "" : "word evaluation differs");
    }
    {
        Series general = tree_value_general(X, k, p, ev);
        rep.add("general " + key, general == direct,
                general == direct ? "" : "general pipeline differs");
    }
}

/// Randomized trees plus fixed corner configurations.
inline SuiteReport run_tree_suite(int count, int max_vertices, int max_label,
                                  const std::vector<int>& Ms, int N, uint64_t seed,
                                  uint64_t work_cap = UINT64_MAX) {
    SuiteReport rep{"trees", {}};
    Evaluator ev;
    ev.set_work_cap(work_cap);
    std::mt19937_64 rng(seed);

    // fixed configurations: linear chains match the sh-truncated values
    for (const Index& k : {Index{2}, Index{1, 2}, Index{2, 1, 1}}) {
        for (int M : Ms) {
            TruncationParams p(M, N);
            ColoredTree X;
            EdgeIndex ki;
            int r = depth(k);
            auto id = [](int i) { return "u" + std::to_string(i); };
            for (int i = 1; i <= r + 1; ++i) {
                X.vertices.insert(id(i));
                X.black.insert(id(i));
            }
            X.root = id(r + 1);
            for (int a = 1; a <= r; ++a) {
                TreeEdge e(id(a), id(a + 1));
                X.edges.insert(e);
                ki.emplace(e, k.entries[static_cast<size_t>(a - 1)]);
            }
            Series lhs = tree_value(X, ki, p, ev);
            Series rhs = ev.sh_trunc(k, p);
            rep.add("linear k=(" + to_string(k) + ") M=" + std::to_string(M), lhs == rhs,
                    lhs == rhs ? "" : "linear tree differs from sh-truncated value");
        }
    }

    // single-vertex convention
    {
        ColoredTree X;
        X.vertices.insert("r");
        X.black.insert("r");
        X.root = "r";
        EdgeIndex k;
        Series v = tree_value(X, k, TruncationParams(4, N), ev);
        rep.add("single-vertex", v == Series::one(N));
    }

    // two-branch shuffle tree: value equals both sides of the shuffle relation
    for (int M : Ms) {
        TruncationParams p(M, N);
        Index k{1, 2}, l{1};
        ColoredTree X;
        EdgeIndex ki;
        X.root = "c";
        X.vertices = {"c", "k1", "k2", "l1"};
        X.black = {"c", "k1", "k2", "l1"};
        TreeEdge e1("k1", "k2"), e2("k2", "c"), e3("l1", "c");
        X.edges = {e1, e2, e3};
        ki = {{e1, 1}, {e2, 2}, {e3, 1}};
        Series value = tree_value(X, ki, p, ev);
        Series lhs = ev.sh_linear(shuffle_product(k, l), p);
        bool ok = value == lhs;
        auto [harm, shuf] = ev.check_dsr(k, l, p);
        rep.add("two-branch M=" + std::to_string(M), ok && shuf.ok,
                ok ? (shuf.ok ? "" : "shuffle relation failed") : "tree value differs from sh product");
    }

    // fixed rewrite configurations: a zero edge into a white branch, a
    // degree-2 white joint, a decomposable star, and the four-step example
    {
        std::vector<std::pair<ColoredTree, EdgeIndex>> fixtures;

        ColoredTree C1;
        C1.vertices = {"a", "b", "c", "w"};
        C1.black = {"a", "b", "c"};
        C1.root = "a";
        TreeEdge c1e0("a", "w"), c1e1("b", "w"), c1e2("c", "w");
        C1.edges = {c1e0, c1e1, c1e2};
        fixtures.emplace_back(C1, EdgeIndex{{c1e0, 0}, {c1e1, 1}, {c1e2, 2}});

        ColoredTree C2;
        C2.vertices = {"b", "w", "r"};
        C2.black = {"b", "r"};
        C2.root = "r";
        TreeEdge c2e1("b", "w"), c2e2("r", "w");
        C2.edges = {c2e1, c2e2};
        fixtures.emplace_back(C2, EdgeIndex{{c2e1, 1}, {c2e2, 2}});

        ColoredTree C3;
        C3.vertices = {"a", "b", "rt", "w"};
        C3.black = {"a", "b", "rt"};
        C3.root = "rt";
        TreeEdge c3a("a", "w"), c3b("b", "w"), c3r("rt", "w");
        C3.edges = {c3a, c3b, c3r};
        fixtures.emplace_back(C3, EdgeIndex{{c3a, 1}, {c3b, 1}, {c3r, 0}});

        ColoredTree C4;
        C4.vertices = {"A", "B", "C", "D", "E", "F", "G"};
        C4.black = {"A", "B", "C", "D", "G"};
        C4.root = "G";
        TreeEdge f1("A", "E"), f2("B", "E"), f3("C", "E"), f4("E", "G"), f5("D", "F"),
            f6("F", "G");
        C4.edges = {f1, f2, f3, f4, f5, f6};
        fixtures.emplace_back(C4, EdgeIndex{{f1, 1}, {f2, 2}, {f3, 0}, {f4, 1}, {f5, 1}, {f6, 2}});

        for (size_t fi = 0; fi < fixtures.size(); ++fi)
            for (int M : Ms)
                check_tree_instance(rep, "fixture#" + std::to_string(fi) + " M=" + std::to_string(M),
                                    fixtures[fi].first, fixtures[fi].second,
                                    TruncationParams(M, N), ev);
    }

    for (int i = 0; i < count; ++i) {
        auto [X, k] = random_tree(rng, max_vertices, max_label);
        for (int M : Ms) {
            TruncationParams p(M, N);
            std::string key = "#" + std::to_string(i) + " M=" + std::to_string(M);
            check_tree_instance(rep, key, X, k, p, ev);
        }
    }
    return rep;
}

} // namespace tsmzv
