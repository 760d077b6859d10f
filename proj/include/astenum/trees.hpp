#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "astenum/ast.hpp"
#include "astenum/laurent.hpp"

namespace astenum {

// ---------------------------------------------------------------------------
// Monotone triangles (rows of lengths 1..n, strictly increasing along rows,
// consecutive rows interlacing; the length-n row is the prescribed bottom).

/// Generating function sum Q^(#special entries) over all monotone triangles
/// with the given bottom row, by interlacing-row recursion. An entry is
/// special when it lies strictly between its two neighbours in the row below.
inline LaurentPolynomial mt_genfunc_enum(const std::vector<int>& bottom) {
    if (bottom.empty()) throw std::invalid_argument("bottom row must be nonempty");
    for (std::size_t i = 0; i + 1 < bottom.size(); ++i)
        if (bottom[i] >= bottom[i + 1])
            throw std::invalid_argument("bottom row must strictly increase");
    const Ring& ring = Ring::q_only();
    std::map<std::vector<int>, LaurentPolynomial> memo;
    const std::function<LaurentPolynomial(const std::vector<int>&)> gf =
        [&](const std::vector<int>& row) -> LaurentPolynomial {
        if (row.size() == 1) return LaurentPolynomial::constant(ring, 1);
        auto it = memo.find(row);
        if (it != memo.end()) return it->second;
        LaurentPolynomial total = LaurentPolynomial::zero(ring);
        std::vector<int> up(row.size() - 1);
        const std::function<void(std::size_t, int)> gen = [&](std::size_t j, int specials) {
            if (j == up.size()) {
                total += gf(up) * LaurentPolynomial::monomial(ring, {specials}, 1);
                return;
            }
            int lo = row[j];
            if (j > 0) lo = std::max(lo, up[j - 1] + 1);
            for (int v = lo; v <= row[j + 1]; ++v) {
                up[j] = v;
                gen(j + 1, specials + (row[j] < v && v < row[j + 1] ? 1 : 0));
            }
        };
        gen(0, 0);
        memo.emplace(row, total);
        return total;
    };
    return gf(bottom);
}

namespace detail {

/// Exact division by (Y_b - Y_a) via synthetic division in Y_b; the
/// remainder must vanish.
inline LaurentPolynomial divide_linear(const LaurentPolynomial& p, std::size_t a, std::size_t b) {
    const Ring& ring = p.ring();
    if (p.is_zero()) return p;
    std::map<int, LaurentPolynomial> by_deg;
    for (const auto& [exps, coef] : p.terms()) {
        Exponents e = exps;
        int k = e[b];
        e[b] = 0;
        auto [it, inserted] = by_deg.try_emplace(k, LaurentPolynomial::zero(ring));
        it->second.add_term(e, coef);
    }
    const int deg = by_deg.rbegin()->first;
    auto coeff_of = [&](int k) {
        auto it = by_deg.find(k);
        return it == by_deg.end() ? LaurentPolynomial::zero(ring) : it->second;
    };
    Exponents ya_exp(ring.arity(), 0);
    ya_exp[a] = 1;
    const LaurentPolynomial ya = LaurentPolynomial::monomial(ring, ya_exp, 1);
    LaurentPolynomial quotient = LaurentPolynomial::zero(ring);
    LaurentPolynomial d = coeff_of(deg);
    for (int k = deg - 1; k >= 0; --k) {
        Exponents yb_exp(ring.arity(), 0);
        yb_exp[b] = k;
        quotient += d * LaurentPolynomial::monomial(ring, yb_exp, 1);
        d = coeff_of(k) + ya * d;
    }
    if (!d.is_zero()) throw std::logic_error("division by (Y_b - Y_a) left a remainder");
    return quotient;
}

inline int permutation_sign(const std::vector<std::size_t>& perm) {
    int inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j]) ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}

}  // namespace detail

/// Constant-term evaluation of the same generating function for n <= 3 and
/// nonnegative bottom entries: expands the antisymmetrized product
///   prod (1+Y_i)^(x_i) * prod_{i<j} (Q - (1-Q)Y_i + Y_j + Y_i Y_j)
/// over all n! permutations, divides exactly by the Vandermonde product, and
/// extracts the constant term in the Y variables.
inline LaurentPolynomial mt_genfunc_operator(const std::vector<int>& bottom) {
    const std::size_t n = bottom.size();
    if (n == 0 || n > 3)
        throw std::invalid_argument("constant-term evaluation is guarded to 1 <= n <= 3");
    for (std::size_t i = 0; i < n; ++i) {
        if (bottom[i] < 0) throw std::invalid_argument("bottom entries must be nonnegative");
        if (i + 1 < n && bottom[i] >= bottom[i + 1])
            throw std::invalid_argument("bottom row must strictly increase");
    }
    const Ring ring = Ring::with_aux_vars(static_cast<int>(n));
    const std::size_t q_index = n;
    auto y_var = [&](std::size_t i) {
        Exponents e(ring.arity(), 0);
        e[i] = 1;
        return LaurentPolynomial::monomial(ring, e, 1);
    };
    const LaurentPolynomial one = LaurentPolynomial::constant(ring, 1);
    Exponents qe(ring.arity(), 0);
    qe[q_index] = 1;
    const LaurentPolynomial q = LaurentPolynomial::monomial(ring, qe, 1);

    LaurentPolynomial base = one;
    for (std::size_t i = 0; i < n; ++i) {
        LaurentPolynomial factor = one + y_var(i);
        for (int e = 0; e < bottom[i]; ++e) base *= factor;
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            base *= q - (one - q) * y_var(i) + y_var(j) + y_var(i) * y_var(j);

    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    LaurentPolynomial asym = LaurentPolynomial::zero(ring);
    do {
        MonomialMap map = MonomialMap::identity(ring.arity());
        for (std::size_t i = 0; i < n; ++i) map.perm[i] = perm[i];
        LaurentPolynomial image = base.apply(map);
        if (detail::permutation_sign(perm) > 0) asym += image;
        else asym -= image;
    } while (std::next_permutation(perm.begin(), perm.end()));

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) asym = detail::divide_linear(asym, i, j);

    LaurentPolynomial result = LaurentPolynomial::zero(Ring::q_only());
    for (const auto& [exps, coef] : asym.terms()) {
        bool constant_in_y = true;
        for (std::size_t i = 0; i < n; ++i)
            if (exps[i] != 0) constant_in_y = false;
        if (constant_in_y) result.add_term({exps[q_index]}, coef);
    }
    return result;
}

// ---------------------------------------------------------------------------
// Truncated monotone triangles ((s,t)-trees) and the trapezoid bijection.

/// Monotone triangle with the s_i bottom cells of the i-th up-diagonal and
/// the t_i bottom cells of the i-th down-diagonal removed. s has one entry
/// per negative 1-column, t one entry per positive 1-column; zeros are kept
/// so the split position m = |s| is recoverable. rows holds the surviving
/// entries; bottom holds the bottom surviving entry of each diagonal.
struct TruncatedTree {
    int n = 0;
    std::vector<int> s;
    std::vector<int> t;
    std::vector<std::vector<int>> rows;
    std::vector<int> bottom;

    int m() const { return static_cast<int>(s.size()); }

    /// Caption-style truncation vectors: s without trailing zeros, t without
    /// leading zeros.
    std::vector<int> trimmed_s() const {
        std::vector<int> out = s;
        while (!out.empty() && out.back() == 0) out.pop_back();
        return out;
    }
    std::vector<int> trimmed_t() const {
        std::vector<int> out;
        bool started = false;
        for (int v : t) {
            if (v != 0) started = true;
            if (started) out.push_back(v);
        }
        return out;
    }

    bool operator==(const TruncatedTree& other) const {
        return n == other.n && s == other.s && t == other.t && rows == other.rows &&
               bottom == other.bottom;
    }

    nlohmann::json to_json() const {
        return nlohmann::json{{"n", n}, {"s", s}, {"t", t}, {"rows", rows}, {"bottom", bottom}};
    }

    static TruncatedTree from_json(const nlohmann::json& j) {
        TruncatedTree t;
        t.n = j.at("n").get<int>();
        t.s = j.at("s").get<std::vector<int>>();
        t.t = j.at("t").get<std::vector<int>>();
        t.rows = j.at("rows").get<std::vector<std::vector<int>>>();
        t.bottom = j.at("bottom").get<std::vector<int>>();
        return t;
    }
};

namespace detail {

/// Full triangle rows with a per-cell survival mask, reconstructed from the
/// truncation data. Row r cell at position p (1-based) is removed when the
/// p-th up-diagonal loses at least n-r+1 cells, or the (p+n-r)-th
/// down-diagonal does.
struct TreeLayout {
    std::vector<std::vector<int>> full;
    std::vector<std::vector<bool>> alive;
};

/// 0 when the cell survives, otherwise the 1-based index of the diagonal
/// whose truncation removes it (p on the left, p+n-r on the right).
inline int tree_deleted_diag(const TruncatedTree& tree, int r, int p) {
    const int n = tree.n;
    const int m = tree.m();
    const bool left = p <= m && tree.s[static_cast<std::size_t>(p - 1)] >= n - r + 1;
    const int down_diag = p + n - r;
    const bool right = down_diag >= m + 1 && down_diag <= n &&
                       tree.t[static_cast<std::size_t>(down_diag - m - 1)] >= n - r + 1;
    if (left && right)
        throw std::invalid_argument("inconsistent truncation data: cell removed from both sides");
    if (left) return p;
    if (right) return down_diag;
    return 0;
}

inline TreeLayout tree_layout(const TruncatedTree& tree) {
    const int n = tree.n;
    if (static_cast<int>(tree.s.size() + tree.t.size()) != n ||
        static_cast<int>(tree.bottom.size()) != n || static_cast<int>(tree.rows.size()) != n)
        throw std::invalid_argument("inconsistent truncation data: vector lengths");
    TreeLayout layout;
    layout.full.resize(static_cast<std::size_t>(n));
    layout.alive.resize(static_cast<std::size_t>(n));
    for (int r = 1; r <= n; ++r) {
        auto& full = layout.full[static_cast<std::size_t>(r - 1)];
        auto& alive = layout.alive[static_cast<std::size_t>(r - 1)];
        full.resize(static_cast<std::size_t>(r));
        alive.resize(static_cast<std::size_t>(r));
        std::size_t next = 0;
        const auto& surviving = tree.rows[static_cast<std::size_t>(r - 1)];
        for (int p = 1; p <= r; ++p) {
            if (const int diag = tree_deleted_diag(tree, r, p); diag != 0) {
                full[static_cast<std::size_t>(p - 1)] = tree.bottom[static_cast<std::size_t>(diag - 1)];
                alive[static_cast<std::size_t>(p - 1)] = false;
            } else {
                if (next >= surviving.size())
                    throw std::invalid_argument("inconsistent truncation data: row " +
                                                std::to_string(r) + " too short");
                full[static_cast<std::size_t>(p - 1)] = surviving[next++];
                alive[static_cast<std::size_t>(p - 1)] = true;
            }
        }
        if (next != surviving.size())
            throw std::invalid_argument("inconsistent truncation data: row " + std::to_string(r) +
                                        " too long");
    }
    return layout;
}

}  // namespace detail

/// Number of surviving entries strictly between their two surviving lower
/// neighbours; transports the -1 count of the trapezoid.
inline int tree_special_count(const TruncatedTree& tree) {
    detail::TreeLayout layout = detail::tree_layout(tree);
    int specials = 0;
    for (int r = 1; r < tree.n; ++r) {
        const auto& row = layout.full[static_cast<std::size_t>(r - 1)];
        const auto& below = layout.full[static_cast<std::size_t>(r)];
        for (int p = 0; p < r; ++p) {
            if (!layout.alive[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(p)]) continue;
            if (!layout.alive[static_cast<std::size_t>(r)][static_cast<std::size_t>(p)]) continue;
            if (!layout.alive[static_cast<std::size_t>(r)][static_cast<std::size_t>(p + 1)]) continue;
            if (below[static_cast<std::size_t>(p)] < row[static_cast<std::size_t>(p)] &&
                row[static_cast<std::size_t>(p)] < below[static_cast<std::size_t>(p + 1)])
                ++specials;
        }
    }
    return specials;
}

/// Per-diagonal flag: the bottom surviving cell repeats the value of the
/// next surviving cell up the same diagonal. For l >= 2 this characterizes
/// the 10-columns of the corresponding trapezoid.
inline std::vector<bool> tree_repeated_bottom_flags(const TruncatedTree& tree) {
    detail::TreeLayout layout = detail::tree_layout(tree);
    const int n = tree.n;
    const int m = tree.m();
    std::vector<bool> flags(static_cast<std::size_t>(n), false);
    for (int i = 1; i <= n; ++i) {
        const bool left = i <= m;
        const int cut = left ? tree.s[static_cast<std::size_t>(i - 1)]
                             : tree.t[static_cast<std::size_t>(i - m - 1)];
        const int bottom_row = n - cut;
        const int above_row = bottom_row - 1;
        // cell of diagonal i in row r: position i on the left, r-n+i on the right
        const int above_pos = left ? i : above_row - n + i;
        if (above_row < 1 || above_pos < 1 || above_pos > above_row) continue;
        const int bottom_value = tree.bottom[static_cast<std::size_t>(i - 1)];
        flags[static_cast<std::size_t>(i - 1)] =
            layout.full[static_cast<std::size_t>(above_row - 1)][static_cast<std::size_t>(above_pos - 1)] ==
            bottom_value;
    }
    return flags;
}

/// Column-sum construction: partial column sums of the trapezoid give a 0/1
/// array; the sorted positions of its 1s (columns labelled -n..n+l-3) form
/// the triangle rows, and the entries contributed by the padding are the
/// truncated cells. For l = 1 the central column is labelled -1 when read as
/// a left column and +1 (position -1 again after the shift by l-3) when read
/// as a right column; the three quasi cases decide which readings occur:
/// bottom entry 1 reads it on the left, central sum 0 inserts the phantom
/// right entry, and a central 10-column reads it on both sides.
inline TruncatedTree ast_to_tree(const Ast& a) {
    const int n = a.n();
    const int l = a.l();
    const int cols = a.num_columns();
    auto to_label = [n](int g) { return g - n; };  // column label, central-symmetric numbering

    std::vector<int> left, right;  // signed 1-column positions
    if (l >= 2) {
        for (int g = 0; g < cols; ++g) {
            if (a.column_sum(g) != 1) continue;
            if (g < n) left.push_back(to_label(g));
            else right.push_back(to_label(g) - l + 3);
        }
    } else {
        for (int g = 0; g < n - 1; ++g)
            if (a.column_sum(g) == 1) left.push_back(to_label(g));
        for (int g = n; g < cols; ++g)
            if (a.column_sum(g) == 1) right.push_back(to_label(g) + 2);
        const int bottom_entry = a.entry(n - 1, n - 1);
        const int central_sum = a.column_sum(n - 1);
        if (bottom_entry == 1) {
            left.push_back(-1);
        } else if (central_sum == 0) {
            right.insert(right.begin(), 1);
        } else {
            left.push_back(-1);
            right.insert(right.begin(), 1);
        }
    }

    TruncatedTree tree;
    tree.n = n;
    const int m = static_cast<int>(left.size());
    std::vector<int> c = left;
    c.insert(c.end(), right.begin(), right.end());
    if (static_cast<int>(c.size()) != n)
        throw std::logic_error("1-column vector does not have n entries");
    for (int i = 0; i < m; ++i) tree.s.push_back(-c[static_cast<std::size_t>(i)] - 1);
    for (int i = m; i < n; ++i) tree.t.push_back(c[static_cast<std::size_t>(i)] - 1);
    for (int i = 0; i < n; ++i)
        tree.bottom.push_back(i < m ? c[static_cast<std::size_t>(i)]
                                    : c[static_cast<std::size_t>(i)] + l - 3);

    // partial column sums, rows of 1-positions
    std::vector<int> prefix(static_cast<std::size_t>(cols), 0);
    std::vector<std::vector<int>> full;
    for (int r = 0; r < n; ++r) {
        for (int g = 0; g < cols; ++g) prefix[static_cast<std::size_t>(g)] += a.entry(r, g);
        std::vector<int> row;
        for (int g = 0; g < cols; ++g)
            if (prefix[static_cast<std::size_t>(g)] == 1) row.push_back(to_label(g));
        if (l == 1 && r == n - 1 && a.entry(n - 1, n - 1) == 0) {
            // phantom (case 2) or doubled (case 3) central label
            row.insert(std::lower_bound(row.begin(), row.end(), -1), -1);
        }
        if (static_cast<int>(row.size()) != r + 1)
            throw std::logic_error("partial sums row has unexpected length");
        full.push_back(std::move(row));
    }

    for (int r = 1; r <= n; ++r) {
        std::vector<int> surviving;
        for (int p = 1; p <= r; ++p) {
            const int value = full[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(p - 1)];
            if (const int diag = detail::tree_deleted_diag(tree, r, p); diag != 0) {
                if (value != tree.bottom[static_cast<std::size_t>(diag - 1)])
                    throw std::logic_error("padded entry disagrees with its diagonal label");
            } else {
                surviving.push_back(value);
            }
        }
        tree.rows.push_back(std::move(surviving));
    }
    return tree;
}

/// Inverse construction: rebuilds the 0/1 partial-sum array from the tree
/// and differences consecutive rows. The resulting trapezoid is validated,
/// so inconsistent trees are rejected.
inline Ast tree_to_ast(const TruncatedTree& tree, int l) {
    const int n = tree.n;
    if (n < 1 || l < 1) throw std::invalid_argument("require n >= 1 and l >= 1");
    const int m = tree.m();
    std::vector<int> c;
    for (int i = 0; i < m; ++i) c.push_back(-tree.s[static_cast<std::size_t>(i)] - 1);
    for (int i = m; i < n; ++i) c.push_back(tree.t[static_cast<std::size_t>(i - m)] + 1);
    for (int i = 0; i < n; ++i) {
        const int expected = i < static_cast<int>(m) ? c[static_cast<std::size_t>(i)]
                                                     : c[static_cast<std::size_t>(i)] + l - 3;
        if (tree.bottom[static_cast<std::size_t>(i)] != expected)
            throw std::invalid_argument("inconsistent truncation data: bottom row");
    }

    // which readings of the central column occur (l = 1 only)
    bool drop_phantom = false;   // case 2: the +1 entry is not a 1-column
    bool doubled_central = false;  // case 3: -1 and +1 label the same column
    if (l == 1) {
        const bool left_central = m >= 1 && c[static_cast<std::size_t>(m - 1)] == -1;
        const bool right_central = m < n && c[static_cast<std::size_t>(m)] == 1;
        if (left_central && right_central) doubled_central = true;
        else if (right_central) drop_phantom = true;
        else if (!left_central)
            throw std::invalid_argument(
                "inconsistent truncation data: no quasi case matches the 1-column vector");
    }

    detail::TreeLayout layout = detail::tree_layout(tree);
    const int cols = 2 * n + l - 2;
    std::vector<int> previous(static_cast<std::size_t>(cols), 0);
    std::vector<std::vector<int>> rows;
    for (int r = 1; r <= n; ++r) {
        std::vector<int> positions = layout.full[static_cast<std::size_t>(r - 1)];
        if (r == n && drop_phantom)
            positions.erase(positions.begin() + m);
        if (r == n && doubled_central)
            positions.erase(positions.begin() + m);  // keep one of the two -1 readings
        std::vector<int> current(static_cast<std::size_t>(cols), 0);
        for (int label : positions) {
            const int g = label + n;
            if (g < 0 || g >= cols)
                throw std::invalid_argument("inconsistent truncation data: label out of range");
            if (current[static_cast<std::size_t>(g)] == 1)
                throw std::invalid_argument("inconsistent truncation data: repeated label");
            current[static_cast<std::size_t>(g)] = 1;
        }
        std::vector<int> row;
        for (int g = 0; g < cols; ++g) {
            const int diff = current[static_cast<std::size_t>(g)] - previous[static_cast<std::size_t>(g)];
            const bool in_span = g >= r - 1 && g <= cols - r;
            if (in_span) row.push_back(diff);
            else if (diff != 0)
                throw std::invalid_argument("inconsistent truncation data: entry outside the trapezoid");
        }
        rows.push_back(std::move(row));
        previous = std::move(current);
    }
    return Ast::validate(n, l, std::move(rows));
}

}  // namespace astenum
