#pragma once

#include <chrono>
#include <functional>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <json.hpp>

#include "astenum/ast.hpp"
#include "astenum/csspp.hpp"
#include "astenum/formulas.hpp"
#include "astenum/paths.hpp"
#include "astenum/trees.hpp"

namespace astenum::verify {

struct Outcome {
    bool pass = false;
    std::string expected;
    std::string actual;
};

struct CheckResult {
    std::string name;
    std::string params;
    bool pass = false;
    std::string expected;
    std::string actual;
    double elapsed_ms = 0.0;
};

/// Collects independent named checks and runs them, optionally on a worker
/// pool; the report is always sorted by (name, params), so it does not
/// depend on the schedule.
class Suite {
public:
    void add(std::string name, std::string params, std::function<Outcome()> run) {
        checks_.push_back(Check{std::move(name), std::move(params), std::move(run)});
    }

    std::size_t size() const { return checks_.size(); }

    std::vector<CheckResult> run(int jobs = 1) const {
        std::vector<CheckResult> results(checks_.size());
        auto run_one = [&](std::size_t idx) {
            const Check& check = checks_[idx];
            CheckResult& r = results[idx];
            r.name = check.name;
            r.params = check.params;
            const auto start = std::chrono::steady_clock::now();
            try {
                Outcome outcome = check.run();
                r.pass = outcome.pass;
                r.expected = outcome.expected;
                r.actual = outcome.actual;
            } catch (const std::exception& e) {
                r.pass = false;
                r.expected = "no exception";
                r.actual = std::string("exception: ") + e.what();
            }
            r.elapsed_ms =
                std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                    .count();
        };
        if (jobs <= 1) {
            for (std::size_t i = 0; i < checks_.size(); ++i) run_one(i);
        } else {
            std::size_t next = 0;
            std::mutex mtx;
            auto worker = [&]() {
                while (true) {
                    std::size_t mine;
                    {
                        std::lock_guard<std::mutex> lock(mtx);
                        if (next >= checks_.size()) return;
                        mine = next++;
                    }
                    run_one(mine);
                }
            };
            std::vector<std::thread> pool;
            const int count = std::min<int>(jobs, static_cast<int>(checks_.size()));
            for (int w = 0; w < count; ++w) pool.emplace_back(worker);
            for (auto& th : pool) th.join();
        }
        std::sort(results.begin(), results.end(), [](const CheckResult& a, const CheckResult& b) {
            return std::tie(a.name, a.params) < std::tie(b.name, b.params);
        });
        return results;
    }

private:
    struct Check {
        std::string name;
        std::string params;
        std::function<Outcome()> run;
    };
    std::vector<Check> checks_;
};

inline bool all_passed(const std::vector<CheckResult>& results) {
    for (const auto& r : results)
        if (!r.pass) return false;
    return true;
}

// --------------------------------------------------------------------------
// Outcome helpers

inline Outcome equal_polys(const LaurentPolynomial& expected, const LaurentPolynomial& actual) {
    return Outcome{expected == actual, expected.to_text(), actual.to_text()};
}

inline Outcome equal_ints(const BigInt& expected, const BigInt& actual) {
    return Outcome{expected == actual, expected.str(), actual.str()};
}

inline Outcome equal_rationals(const BigRational& expected, const BigRational& actual) {
    return Outcome{expected == actual, expected.str(), actual.str()};
}

inline Outcome boolean(bool ok, std::string description, std::string failure) {
    return Outcome{ok, std::move(description), ok ? "ok" : std::move(failure)};
}

// --------------------------------------------------------------------------
// Check builders. Each registers one row per parameter tuple.

inline std::string params2(const char* a, int va, const char* b, int vb) {
    std::ostringstream out;
    out << a << "=" << va << "," << b << "=" << vb;
    return out.str();
}

inline std::string params3(const char* a, int va, const char* b, int vb, const char* c, int vc) {
    std::ostringstream out;
    out << a << "=" << va << "," << b << "=" << vb << "," << c << "=" << vc;
    return out.str();
}

/// Main identity: the trapezoid generating function equals the partition
/// generating function with k = l-1 for every legal d.
inline void add_joint_distribution(Suite& suite, int max_n, int max_l) {
    for (int n = 1; n <= max_n; ++n)
        for (int l = 1; l <= max_l; ++l)
            for (int d = 0; d <= l - 1; ++d)
                suite.add("joint-distribution", params3("n", n, "l", l, "d", d), [n, l, d] {
                    return equal_polys(ast_genfunc(n, l), csspp_genfunc(n, l - 1, d));
                });
}

/// Known small generating functions, frozen as text.
inline void add_known_genfuncs(Suite& suite) {
    static const char* kZ24 = "1 + 2*Q^1*R^1 + 2*R^1 + 1*R^1*S^1 + 1*R^1*T^1 + 1*R^2";
    static const char* kZ31 =
        "1 + -1*Q^1*R^1 + -1*Q^1*R^2 + -1*Q^1*R^2*S^1 + -1*Q^1*R^1*T^1 + 3*R^1 + 3*R^2 + 1*R^3 + "
        "3*R^1*S^1 + 1*R^1*S^1*T^1 + 3*R^2*S^1 + 1*R^2*S^1*T^1 + 1*R^2*S^2 + 3*R^1*T^1 + "
        "1*R^1*T^2 + 3*R^2*T^1";
    suite.add("known-genfunc", "Z_AST(2,4)", [] {
        return equal_polys(LaurentPolynomial::parse_text(Ring::qrst(), kZ24), ast_genfunc(2, 4));
    });
    suite.add("known-genfunc", "Z_AST(3,1)", [] {
        return equal_polys(LaurentPolynomial::parse_text(Ring::qrst(), kZ31), ast_genfunc(3, 1));
    });
    for (int d = 0; d <= 3; ++d)
        suite.add("known-genfunc", "Z_CSSPP(2,3," + std::to_string(d) + ")", [d] {
            return equal_polys(LaurentPolynomial::parse_text(Ring::qrst(), kZ24),
                               csspp_genfunc(2, 3, d));
        });
    suite.add("known-genfunc", "class0-weights-sum", [] {
        // the twenty class-0 objects with first row at most 3, weighted at
        // d = 0, sum to the modified (3,1) generating function
        LaurentPolynomial sum = LaurentPolynomial::zero(Ring::qrst());
        int objects = 0;
        csspp_enumerate(3, 0, [&](const Csspp& p) {
            sum += csspp_weight(p, 0);
            ++objects;
        });
        if (objects != 20)
            return boolean(false, "20 objects", "saw " + std::to_string(objects));
        return equal_polys(LaurentPolynomial::parse_text(Ring::qrst(), kZ31), sum);
    });
}

inline void add_determinant_route(Suite& suite, int max_n, int max_l) {
    for (int n = 1; n <= max_n; ++n)
        for (int l = 1; l <= max_l; ++l) {
            suite.add("det-route", params2("n", n, "l", l), [n, l] {
                return equal_polys(ast_genfunc(n, l), det_formula_genfunc(n, l));
            });
            for (int d = 0; d <= l - 1; ++d)
                suite.add("lgv-route", params3("n", n, "l", l, "d", d), [n, l, d] {
                    return equal_polys(det_formula_genfunc(n, l), lgv_genfunc(n, l, d));
                });
        }
}

inline void add_counting_route(Suite& suite, int max_n, int max_l) {
    for (int n = 1; n <= max_n; ++n)
        for (int l = 1; l <= max_l; ++l)
            suite.add("count-route", params2("n", n, "l", l), [n, l] {
                const BigRational ones = det_formula_genfunc(n, l).evaluate({1, 1, 1, 1});
                return equal_rationals(BigRational(andrews_count(n, l)), ones);
            });
}

inline void add_two_enumeration(Suite& suite, int max_rows_formula, int max_rows_brute, int max_l) {
    for (int rows = 1; rows <= max_rows_formula; ++rows)
        for (int l = 2; l <= max_l; ++l)
            suite.add("two-enum-det", params2("rows", rows, "l", l), [rows, l] {
                const BigRational q2 = det_formula_genfunc(rows, l).evaluate({2, 1, 1, 1});
                return equal_rationals(BigRational(two_enum_product(rows, l).value), q2);
            });
    for (int rows = 1; rows <= max_rows_brute; ++rows)
        for (int l = 2; l <= max_l; ++l)
            suite.add("two-enum-brute", params2("rows", rows, "l", l), [rows, l] {
                return equal_rationals(BigRational(two_enum_product(rows, l).value),
                                       ast_x_enumeration(rows, l, 2));
            });
}

/// x-enumerations of quasi trapezoids; the first values are fixed reference
/// data.
inline void add_quasi_sequences(Suite& suite, int max_n) {
    static const long long k2enum[] = {2, 5, 22, 188, 3152, 104704, 6905856};
    static const long long k3enum[] = {2, 5, 24, 252, 5832, 301077, 34720812};
    for (int n = 1; n <= std::min(max_n, 7); ++n) {
        suite.add("quasi-2enum", "n=" + std::to_string(n), [n] {
            return equal_rationals(BigRational(k2enum[n - 1]), ast_x_enumeration(n, 1, 2));
        });
        suite.add("quasi-3enum", "n=" + std::to_string(n), [n] {
            return equal_rationals(BigRational(k3enum[n - 1]), ast_x_enumeration(n, 1, 3));
        });
    }
}

inline void add_tree_bijection(Suite& suite, int max_n, int min_l, int max_l) {
    for (int n = 1; n <= max_n; ++n)
        for (int l = min_l; l <= max_l; ++l)
            suite.add("tree-bijection", params2("n", n, "l", l), [n, l] {
                int objects = 0;
                std::string failure;
                ast_enumerate(n, l, [&](const Ast& a) {
                    if (!failure.empty()) return;
                    ++objects;
                    TruncatedTree tree = ast_to_tree(a);
                    if (!(tree_to_ast(tree, l) == a)) {
                        failure = "round trip broke on object " + std::to_string(objects);
                        return;
                    }
                    if (tree_special_count(tree) != ast_statistics(a).q)
                        failure = "special-entry count disagrees on object " + std::to_string(objects);
                });
                return boolean(failure.empty(),
                               "round trip and q-transport over " + std::to_string(objects) +
                                   " objects",
                               failure);
            });
}

inline void add_path_bijection(Suite& suite, int max_n, int max_k) {
    for (int n = 1; n <= max_n; ++n)
        for (int k = 0; k <= max_k; ++k)
            suite.add("path-bijection", params2("n", n, "k", k), [n, k] {
                const int l = k + 1;
                int objects = 0;
                std::string failure;
                csspp_enumerate(n, k, [&](const Csspp& p) {
                    if (!failure.empty()) return;
                    ++objects;
                    PathFamily family = csspp_to_paths(p, l);
                    if (!(paths_to_csspp(family) == p)) {
                        failure = "round trip broke on object " + std::to_string(objects);
                        return;
                    }
                    for (int d = 0; d <= k; ++d) {
                        CssppStats want = csspp_statistics(p, d);
                        CssppStats got;
                        for (const auto& path : family.paths) {
                            CssppStats one = path_statistics(path, l, d);
                            got.q += one.q;
                            got.r += one.r;
                            got.s += one.s;
                            got.t += one.t;
                            got.second_position_one += one.second_position_one;
                        }
                        if (!(want == got)) {
                            failure = "statistics transport broke on object " +
                                      std::to_string(objects) + " at d=" + std::to_string(d);
                            return;
                        }
                    }
                });
                return boolean(failure.empty(),
                               "round trip and statistic transport over " +
                                   std::to_string(objects) + " objects",
                               failure);
            });
}

inline void add_path_oracle(Suite& suite, int max_i, int max_j, int max_l) {
    for (int l = 1; l <= max_l; ++l)
        for (int d = 0; d <= l - 1; ++d)
            suite.add("path-oracle", params2("l", l, "d", d), [max_i, max_j, l, d] {
                for (int i = 0; i <= max_i; ++i)
                    for (int j = 0; j <= max_j; ++j)
                        if (!(single_path_genfunc_closed(i, j, l) ==
                              single_path_genfunc_enum(i, j, l, d)))
                            return boolean(false, "closed form equals enumeration",
                                           "mismatch at i=" + std::to_string(i) +
                                               ",j=" + std::to_string(j));
                return boolean(true,
                               "closed form equals enumeration for i,j <= " +
                                   std::to_string(max_i),
                               "");
            });
}

inline void add_fg_identity(Suite& suite, int max_ij, int max_l) {
    for (int l = 2; l <= max_l; ++l)
        suite.add("fg-identity", "l=" + std::to_string(l), [max_ij, l] {
            for (int i = 0; i <= max_ij; ++i)
                for (int j = 0; j <= max_ij; ++j)
                    if (f_entry(l, i, j) != g_entry(l - 2, i, j))
                        return boolean(false, "f(l;i,j) = g(l-2;i,j)",
                                       "mismatch at i=" + std::to_string(i) +
                                           ",j=" + std::to_string(j));
            return boolean(true, "f(l;i,j) = g(l-2;i,j) for i,j <= " + std::to_string(max_ij), "");
        });
}

inline void add_andrews_ratios(Suite& suite, int max_n, int max_a) {
    suite.add("andrews-base", "D_1", [max_a] {
        for (int a = 0; a <= max_a; ++a)
            if (andrews_determinant(1, a) != 2)
                return boolean(false, "D_1(a) = 2", "fails at a=" + std::to_string(a));
        return boolean(true, "D_1(a) = 2 for a <= " + std::to_string(max_a), "");
    });
    for (int n = 1; n <= max_n; ++n)
        for (int a = 0; a <= max_a; ++a)
            suite.add("andrews-ratio", params2("n", n, "a", a), [n, a] {
                auto [even, odd] = andrews_ratio_check(n, a);
                return boolean(even && odd, "both ratio evaluations hold",
                               even ? "odd ratio fails" : "even ratio fails");
            });
}

inline void add_operator_oracle(Suite& suite, int max_entry, int max_n) {
    for (int n = 1; n <= std::min(max_n, 3); ++n)
        suite.add("operator-oracle", "n=" + std::to_string(n), [max_entry, n] {
            std::vector<int> row(static_cast<std::size_t>(n));
            std::string failure;
            const std::function<void(int, int)> sweep = [&](int index, int lo) {
                if (!failure.empty()) return;
                if (index == n) {
                    if (!(mt_genfunc_operator(row) == mt_genfunc_enum(row))) {
                        std::ostringstream out;
                        out << "mismatch at bottom row (";
                        for (std::size_t i = 0; i < row.size(); ++i)
                            out << (i ? "," : "") << row[i];
                        out << ")";
                        failure = out.str();
                    }
                    return;
                }
                for (int v = lo; v <= max_entry; ++v) {
                    row[static_cast<std::size_t>(index)] = v;
                    sweep(index + 1, v + 1);
                }
            };
            sweep(0, 0);
            return boolean(failure.empty(),
                           "constant-term formula equals recursion for entries <= " +
                               std::to_string(max_entry),
                           failure);
        });
}

inline void add_mirror_symmetry(Suite& suite, int max_n, int max_l) {
    for (int n = 1; n <= max_n; ++n)
        for (int l = 1; l <= max_l; ++l)
            suite.add("mirror-symmetry", params2("n", n, "l", l), [n, l] {
                auto z = ast_genfunc(n, l);
                return equal_polys(z, z.apply(ast_mirror_map(n)));
            });
}

/// The default suite behind the `verify` command. Enumeration-heavy checks
/// honor max_n/max_l; the closed-form cross-checks run at fixed desk-scale
/// ranges, which cost little.
inline Suite standard_suite(int max_n, int max_l, int quasi_n) {
    Suite suite;
    add_joint_distribution(suite, max_n, max_l);
    add_known_genfuncs(suite);
    add_determinant_route(suite, max_n, max_l);
    add_counting_route(suite, max_n, max_l);
    add_two_enumeration(suite, max_n, std::min(max_n, 4), max_l);
    add_quasi_sequences(suite, quasi_n);
    add_tree_bijection(suite, std::min(max_n, 3), 2, max_l);
    add_path_bijection(suite, std::min(max_n, 4), std::min(max_l - 1, 4));
    add_path_oracle(suite, 5, 5, std::min(max_l, 5));
    add_fg_identity(suite, 8, 8);
    add_andrews_ratios(suite, 3, 4);
    add_operator_oracle(suite, 4, std::min(max_n, 3));
    add_mirror_symmetry(suite, max_n, max_l);
    return suite;
}

// --------------------------------------------------------------------------
// Report rendering

inline std::string csv_quote(const std::string& field) {
    bool needs = field.find_first_of(",\"\n") != std::string::npos;
    if (!needs) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += "\"";
    return out;
}

inline std::string report_csv(const std::vector<CheckResult>& results) {
    std::ostringstream out;
    out << "check,params,status,expected,actual,elapsed_ms\n";
    for (const auto& r : results) {
        out << csv_quote(r.name) << "," << csv_quote(r.params) << ","
            << (r.pass ? "pass" : "fail") << "," << csv_quote(r.expected) << ","
            << csv_quote(r.actual) << "," << r.elapsed_ms << "\n";
    }
    return out.str();
}

inline std::string report_text(const std::vector<CheckResult>& results) {
    std::ostringstream out;
    int failed = 0;
    for (const auto& r : results) {
        out << (r.pass ? "PASS" : "FAIL") << "  " << r.name << "(" << r.params << ")";
        if (!r.pass) {
            out << "\n      expected: " << r.expected << "\n      actual:   " << r.actual;
            ++failed;
        }
        out << "\n";
    }
    out << results.size() - static_cast<std::size_t>(failed) << "/" << results.size()
        << " checks passed\n";
    return out.str();
}

inline nlohmann::json report_json(const std::vector<CheckResult>& results) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : results)
        arr.push_back({{"check", r.name},
                       {"params", r.params},
                       {"status", r.pass ? "pass" : "fail"},
                       {"expected", r.expected},
                       {"actual", r.actual},
                       {"elapsed_ms", r.elapsed_ms}});
    return arr;
}

}  // namespace astenum::verify
