// Command-line entry point: evaluate exact values, run verification suites,
// emit JSON/text reports.
//
// Exit codes: 0 all good, 1 verification failure, 2 parse error,
// 3 invariant violation.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "tsmzv/io.hpp"
#include "tsmzv/verify.hpp"

using namespace tsmzv;

namespace {

constexpr int kExitVerifyFail = 1;
constexpr int kExitParse = 2;
constexpr int kExitInvariant = 3;

uint64_t work_cap_from_env() {
    const char* s = std::getenv("SZV_MAX_WORK");
    if (!s) return 200'000'000ull;
    char* end = nullptr;
    unsigned long long v = std::strtoull(s, &end, 10);
    if (end == s || *end != '\0' || v == 0) throw ArgumentError("SZV_MAX_WORK must be a positive integer");
    return v;
}

std::vector<int> parse_int_list(const std::string& s, const char* what) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        size_t pos = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &pos);
        } catch (const std::exception&) {
            throw ArgumentError(std::string(what) + ": bad entry '" + tok + "'");
        }
        if (pos != tok.size() || v < 1)
            throw ArgumentError(std::string(what) + ": bad entry '" + tok + "'");
        out.push_back(v);
    }
    if (out.empty()) throw ArgumentError(std::string(what) + ": empty list");
    return out;
}

Bullet parse_bullet(const std::string& s) {
    if (s == "star" || s == "*") return Bullet::Star;
    if (s == "sh") return Bullet::Sh;
    throw ArgumentError("bullet must be 'star' or 'sh'");
}

void print_series(const Series& s, bool as_json) {
    if (as_json) {
        std::cout << to_json(s).dump() << "\n";
        return;
    }
    for (int n = 0; n < s.order; ++n)
        std::cout << "t^" << n << "  " << to_string(s.c[n]) << "\n";
}

int print_report(SuiteReport rep, bool as_json) {
    // deterministic contract: instances ordered by key
    std::stable_sort(rep.results.begin(), rep.results.end(),
                     [](const InstanceResult& a, const InstanceResult& b) { return a.name < b.name; });
    if (as_json) {
        json results = json::array();
        for (const auto& r : rep.results) {
            json row{{"name", r.name}, {"pass", r.pass}};
            if (!r.detail.empty()) row["detail"] = r.detail;
            results.push_back(std::move(row));
        }
        std::cout << json{{"suite", rep.suite},
                          {"instances", rep.results.size()},
                          {"failures", rep.failures()},
                          {"results", results}}
                         .dump()
                  << "\n";
    } else {
        for (const auto& r : rep.results) {
            std::cout << (r.pass ? "PASS " : "FAIL ") << r.name;
            if (!r.detail.empty()) std::cout << "  [" << r.detail << "]";
            std::cout << "\n";
        }
        std::cout << rep.suite << ": " << rep.results.size() - rep.failures() << "/"
                  << rep.results.size() << " passed\n";
    }
    return rep.all_pass() ? 0 : kExitVerifyFail;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact calculus of truncated t-adic symmetric multiple zeta values"};
    app.require_subcommand(1);
    std::string format = "json";
    app.add_option("--format", format, "output format: json or text")
        ->check(CLI::IsMember({"json", "text"}));
    app.fallthrough();

    // eval
    auto* eval = app.add_subcommand("eval", "evaluate a value exactly");
    std::string eval_kind, eval_index, eval_bullet = "star";
    int eval_M = 13, eval_N = 4;
    eval->add_option("--kind", eval_kind, "star | sh | zM | reg")->required()
        ->check(CLI::IsMember({"star", "sh", "zM", "reg"}));
    eval->add_option("--index", eval_index, "comma-separated index, \"\" for empty")->required();
    eval->add_option("--M", eval_M, "summation bound");
    eval->add_option("--t-order", eval_N, "series order N");
    eval->add_option("--bullet", eval_bullet, "regularization flavor for --kind reg");

    // word
    auto* word = app.add_subcommand("word", "word-algebra operations");
    std::string word_op, word_a, word_b, word_index, word_bullet = "star";
    int word_n = 0;
    word->add_option("--op", word_op, "harmonic | shuffle | whatS")->required()
        ->check(CLI::IsMember({"harmonic", "shuffle", "whatS"}));
    word->add_option("--a", word_a, "left index");
    word->add_option("--b", word_b, "right index");
    word->add_option("--index", word_index, "index for whatS");
    word->add_option("--bullet", word_bullet, "bullet for whatS");
    word->add_option("--n", word_n, "t-degree for whatS");

    // tree
    auto* tree = app.add_subcommand("tree", "2-colored rooted tree values");
    std::string tree_file, tree_method = "direct", tree_at;
    int tree_M = 4, tree_N = 4;
    bool tree_harvest = false, tree_word = false;
    tree->add_option("--tree-file", tree_file, "tree JSON file")->required();
    tree->add_option("--M", tree_M, "summation bound");
    tree->add_option("--t-order", tree_N, "series order N");
    tree->add_option("--method", tree_method, "direct | word | general")
        ->check(CLI::IsMember({"direct", "word", "general"}));
    tree->add_option("--at", tree_at, "evaluate at one black vertex only");
    tree->add_flag("--harvest", tree_harvest, "print the harvested pair");
    tree->add_flag("--word", tree_word, "print w(X,k) in the z-basis");

    // mt
    auto* mt = app.add_subcommand("mt", "Mordell-Tornheim values");
    std::string mt_index, mt_kind = "sh";
    int mt_M = 4, mt_N = 4;
    mt->add_option("--index", mt_index, "MT index \"k1,...,kr;k_{r+1}\"")->required();
    mt->add_option("--kind", mt_kind, "trunc | sh")->check(CLI::IsMember({"trunc", "sh"}));
    mt->add_option("--M", mt_M, "summation bound");
    mt->add_option("--t-order", mt_N, "series order N");

    // verify
    auto* verify = app.add_subcommand("verify", "run an identity suite");
    std::string verify_suite, verify_Ms = "2,5,13", verify_primes = "5,7,11,13";
    int verify_wt = 5, verify_N = 4, verify_nmax = 2, verify_count = 50, verify_maxv = 6;
    int verify_maxlabel = 3, verify_Mmax = 15;
    uint64_t verify_seed = 20240601;
    verify->add_option("suite", verify_suite, "dsr | taylor | lemma23 | trees | mt | finite")
        ->required()
        ->check(CLI::IsMember({"dsr", "taylor", "lemma23", "trees", "mt", "finite"}));
    verify->add_option("--wt-max", verify_wt, "max total weight");
    verify->add_option("--M", verify_Ms, "comma-separated M values");
    verify->add_option("--M-max", verify_Mmax, "max M for lemma23");
    verify->add_option("--t-order", verify_N, "series order N");
    verify->add_option("--primes", verify_primes, "comma-separated primes");
    verify->add_option("--n", verify_nmax, "max prime-power exponent");
    verify->add_option("--count", verify_count, "random tree count");
    verify->add_option("--max-vertices", verify_maxv, "max vertices per random tree");
    verify->add_option("--labels-max", verify_maxlabel, "max edge label");
    verify->add_option("--seed", verify_seed, "random seed");

    // limits
    auto* limits = app.add_subcommand("limits", "numeric convergence to the symbolic limit");
    std::string limits_index, limits_bullet = "star", limits_Ms = "100,1000,10000";
    int limits_N = 1;
    double limits_tol = 5e-4;
    limits->add_option("--index", limits_index, "index")->required();
    limits->add_option("--bullet", limits_bullet, "star | sh");
    limits->add_option("--t-order", limits_N, "coefficients to check");
    limits->add_option("--M", limits_Ms, "increasing M list");
    limits->add_option("--tol", limits_tol, "absolute tolerance at the largest M");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitParse;
    }

    bool as_json = format == "json";

    try {
        Evaluator ev;
        ev.set_work_cap(work_cap_from_env());

        if (*eval) {
            Index k;
            try {
                k = parse_index(eval_index);
            } catch (const ArgumentError& e) {
                std::cerr << "parse error: " << e.what() << "\n";
                return kExitParse;
            }
            try {
                if (eval_kind == "zM") {
                    std::cout << (as_json ? "\"" + to_string(ev.z_trunc(k, eval_M)) + "\""
                                          : to_string(ev.z_trunc(k, eval_M)))
                              << "\n";
                } else if (eval_kind == "reg") {
                    Regularizer reg;
                    RegPoly p = reg.zeta_reg(k, parse_bullet(eval_bullet));
                    std::cout << to_json(p).dump() << "\n";
                } else {
                    TruncationParams p(eval_M, eval_N);
                    Series s = eval_kind == "star" ? ev.star_trunc(k, p) : ev.sh_trunc(k, p);
                    print_series(s, as_json);
                }
            } catch (const std::invalid_argument& e) {
                std::cerr << "invariant violation: " << e.what() << "\n";
                return kExitInvariant;
            } catch (const std::domain_error& e) {
                std::cerr << "invariant violation: " << e.what() << "\n";
                return kExitInvariant;
            }
            return 0;
        }

        if (*word) {
            if (word_op == "whatS") {
                Index k;
                Bullet b;
                try {
                    k = parse_index(word_index);
                    b = parse_bullet(word_bullet);
                } catch (const ArgumentError& e) {
                    std::cerr << "parse error: " << e.what() << "\n";
                    return kExitParse;
                }
                LinComb w = w_hatS(k, b, word_n);
                std::cout << to_zbasis_json(w).dump() << "\n";
                return 0;
            }
            Index a, b;
            try {
                a = parse_index(word_a);
                b = parse_index(word_b);
            } catch (const ArgumentError& e) {
                std::cerr << "parse error: " << e.what() << "\n";
                return kExitParse;
            }
            LinComb out = word_op == "harmonic" ? harmonic_product(a, b) : shuffle_product(a, b);
            std::cout << to_zbasis_json(out).dump() << "\n";
            return 0;
        }

        if (*tree) {
            json j;
            try {
                std::ifstream in(tree_file);
                if (!in) throw ArgumentError("cannot open tree file '" + tree_file + "'");
                in >> j;
            } catch (const json::exception& e) {
                std::cerr << "parse error: " << e.what() << "\n";
                return kExitParse;
            } catch (const ArgumentError& e) {
                std::cerr << "parse error: " << e.what() << "\n";
                return kExitParse;
            }
            try {
                auto [X, k] = tree_from_json(j);
                TruncationParams p(tree_M, tree_N);
                if (tree_harvest) {
                    auto [Xh, kh] = harvest(X, k);
                    std::cout << to_json(Xh, kh).dump() << "\n";
                    return 0;
                }
                if (tree_word) {
                    auto [Xh, kh] = harvest(X, k);
                    std::cout << to_zbasis_json(word_of_harvestable(Xh, kh)).dump() << "\n";
                    return 0;
                }
                Series s = !tree_at.empty() ? tree_value_at(X, tree_at, k, p, ev)
                           : tree_method == "direct" ? tree_value(X, k, p, ev)
                           : tree_method == "word"
                               ? tree_value_via_word(std::get<0>(harvest(X, k)),
                                                     std::get<1>(harvest(X, k)), p, ev)
                               : tree_value_general(X, k, p, ev);
                print_series(s, as_json);
            } catch (const std::invalid_argument& e) {
                std::cerr << "invariant violation: " << e.what() << "\n";
                return kExitInvariant;
            } catch (const std::domain_error& e) {
                std::cerr << "invariant violation: " << e.what() << "\n";
                return kExitInvariant;
            }
            return 0;
        }

        if (*mt) {
            MtIndex idx({1}, 1);
            try {
                idx = parse_mt_index(mt_index);
            } catch (const ArgumentError& e) {
                std::cerr << "parse error: " << e.what() << "\n";
                return kExitParse;
            }
            try {
                if (mt_kind == "trunc") {
                    std::cout << (as_json ? "\"" + to_string(mt_trunc(idx, mt_M, ev)) + "\""
                                          : to_string(mt_trunc(idx, mt_M, ev)))
                              << "\n";
                } else {
                    print_series(mt_hatS_sh_trunc(idx, TruncationParams(mt_M, mt_N), ev), as_json);
                }
            } catch (const std::invalid_argument& e) {
                std::cerr << "invariant violation: " << e.what() << "\n";
                return kExitInvariant;
            }
            return 0;
        }

        if (*verify) {
            std::vector<int> Ms;
            std::vector<long> primes;
            try {
                Ms = parse_int_list(verify_Ms, "--M");
                for (int p : parse_int_list(verify_primes, "--primes")) primes.push_back(p);
                if (verify_wt < 0 || verify_wt > 8) throw ArgumentError("--wt-max must be in 0..8");
                if (verify_N < 1 || verify_N > 8) throw ArgumentError("--t-order must be in 1..8");
                if (verify_nmax < 1 || verify_nmax > 4) throw ArgumentError("--n must be in 1..4");
                if (verify_count < 1 || verify_count > 2000)
                    throw ArgumentError("--count must be in 1..2000");
                if (verify_maxv < 2 || verify_maxv > 9)
                    throw ArgumentError("--max-vertices must be in 2..9");
                if (verify_maxlabel < 1 || verify_maxlabel > 6)
                    throw ArgumentError("--labels-max must be in 1..6");
                if (verify_Mmax < 1 || verify_Mmax > 30)
                    throw ArgumentError("--M-max must be in 1..30");
                for (int M : Ms)
                    if (M > 100) throw ArgumentError("--M entries must be <= 100");
            } catch (const ArgumentError& e) {
                std::cerr << "parse error: " << e.what() << "\n";
                return kExitParse;
            }
            uint64_t cap = work_cap_from_env();
            SuiteReport rep;
            if (verify_suite == "dsr")
                rep = run_dsr_suite(verify_wt, Ms, verify_N, cap);
            else if (verify_suite == "taylor")
                rep = run_taylor_suite(verify_wt, verify_N, Ms, cap);
            else if (verify_suite == "lemma23")
                rep = run_lemma_suite(verify_wt, verify_Mmax, cap);
            else if (verify_suite == "trees")
                rep = run_tree_suite(verify_count, verify_maxv, verify_maxlabel, Ms, verify_N,
                                     verify_seed, cap);
            else if (verify_suite == "mt")
                rep = run_mt_suite(verify_wt, 3, Ms, verify_N, cap);
            else
                rep = run_finite_suite(primes, verify_nmax, verify_wt);
            return print_report(rep, as_json);
        }

        if (*limits) {
            Index k;
            Bullet b;
            std::vector<long> Ms;
            try {
                k = parse_index(limits_index);
                b = parse_bullet(limits_bullet);
                for (int v : parse_int_list(limits_Ms, "--M")) Ms.push_back(v);
            } catch (const ArgumentError& e) {
                std::cerr << "parse error: " << e.what() << "\n";
                return kExitParse;
            }
            try {
                NumericEval num;
                LimitReport rep = num.check_limit_theorem(k, b, limits_N, Ms, limits_tol);
                if (as_json) {
                    std::cout << to_json(rep).dump() << "\n";
                } else {
                    for (const auto& row : rep.rows)
                        std::cout << "t^" << row.coefficient_index << " M=" << row.M
                                  << " truncated=" << row.truncated << " limit=" << row.limit
                                  << " |diff|=" << row.abs_diff << "\n";
                    std::cout << (rep.pass ? "PASS" : "FAIL") << " tol=" << rep.tol << "\n";
                }
                return rep.pass ? 0 : kExitVerifyFail;
            } catch (const std::domain_error& e) {
                std::cerr << "invariant violation: " << e.what() << "\n";
                return kExitInvariant;
            }
        }
    } catch (const WorkLimitError& e) {
        std::cerr << "aborted: " << e.what() << " (raise SZV_MAX_WORK to allow more)\n";
        return kExitInvariant;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return kExitInvariant;
    } catch (const std::domain_error& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return kExitInvariant;
    }
    return 0;
}
