#pragma once

#include <algorithm>
#include <functional>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <json.hpp>

#include "astenum/laurent.hpp"

namespace astenum {

/// Trapezoidal {-1,0,+1} array with n rows; row i (0-based) spans global
/// columns i .. 2n+l-3-i of the range 0 .. 2n+l-3. Rows sum to 1 (for l = 1
/// the single bottom entry is 0 or 1 instead), nonzero entries alternate in
/// sign along rows and columns, every column's topmost nonzero entry is +1,
/// and for l >= 2 the central l-2 columns sum to 0.
class AlternatingSignTrapezoid {
public:
    /// Checks every definition clause; throws std::invalid_argument naming
    /// the first violated clause.
    static AlternatingSignTrapezoid validate(int n, int l, std::vector<std::vector<int>> rows);

    int n() const { return n_; }
    int l() const { return l_; }
    int num_columns() const { return 2 * n_ + l_ - 2; }
    int row_start(int i) const { return i; }
    int row_end(int i) const { return 2 * n_ + l_ - 3 - i; }

    const std::vector<std::vector<int>>& rows() const { return rows_; }

    /// Entry at row i, global column g; zero outside the trapezoid.
    int entry(int i, int g) const {
        if (g < row_start(i) || g > row_end(i)) return 0;
        return rows_[static_cast<std::size_t>(i)][static_cast<std::size_t>(g - i)];
    }

    int column_sum(int g) const {
        int sum = 0;
        for (int i = 0; i < n_; ++i) sum += entry(i, g);
        return sum;
    }

    /// Index of the last row intersecting column g.
    int column_last_row(int g) const { return std::min({n_ - 1, g, 2 * n_ + l_ - 3 - g}); }

    int column_bottom_entry(int g) const { return entry(column_last_row(g), g); }

    bool operator==(const AlternatingSignTrapezoid& other) const {
        return n_ == other.n_ && l_ == other.l_ && rows_ == other.rows_;
    }
    bool operator<(const AlternatingSignTrapezoid& other) const { return rows_ < other.rows_; }

    nlohmann::json to_json() const {
        return nlohmann::json{{"n", n_}, {"l", l_}, {"rows", rows_}};
    }

    static AlternatingSignTrapezoid from_json(const nlohmann::json& j) {
        return validate(j.at("n").get<int>(), j.at("l").get<int>(),
                        j.at("rows").get<std::vector<std::vector<int>>>());
    }

private:
    AlternatingSignTrapezoid(int n, int l, std::vector<std::vector<int>> rows)
        : n_(n), l_(l), rows_(std::move(rows)) {}

    int n_ = 0;
    int l_ = 0;
    std::vector<std::vector<int>> rows_;
};

using Ast = AlternatingSignTrapezoid;

struct ColumnInfo {
    int sum = 0;
    int bottom = 0;
    bool is_one = false;
    bool is_ten = false;
    // signed position for l >= 2: -n..-1 on the n leftmost columns, 1..n on
    // the n rightmost, nothing on the central l-2 columns
    std::optional<int> signed_label;
};

struct ColumnProfile {
    int n = 0;
    int l = 0;
    std::vector<ColumnInfo> cols;

    int one_column_count() const {
        int c = 0;
        for (const auto& info : cols) c += info.is_one ? 1 : 0;
        return c;
    }

    /// 0-based index of the central column; meaningful for l = 1, where the
    /// plain positions 1..2n-1 have their middle at position n.
    int central_index() const { return n - 1; }
};

inline ColumnProfile column_profile(const Ast& a) {
    ColumnProfile profile;
    profile.n = a.n();
    profile.l = a.l();
    for (int g = 0; g < a.num_columns(); ++g) {
        ColumnInfo info;
        info.sum = a.column_sum(g);
        info.bottom = a.column_bottom_entry(g);
        info.is_one = info.sum == 1;
        info.is_ten = info.is_one && info.bottom == 0;
        if (a.l() >= 2) {
            if (g < a.n()) info.signed_label = g - a.n();
            else if (g >= a.n() + a.l() - 2) info.signed_label = g - a.n() - a.l() + 3;
        }
        profile.cols.push_back(info);
    }
    return profile;
}

struct AstStats {
    int q = 0;
    int r = 0;
    int s = 0;  // for l = 1 this is the statistic restricted to the n-1 leftmost columns
    int t = 0;  // likewise for the n-1 rightmost columns
    int central_ten = 0;  // only meaningful for l = 1

    bool operator==(const AstStats&) const = default;
};

/// q = number of -1 entries; r = 1-columns among the n leftmost columns
/// (for l = 1 that range includes the central column; only that reading
/// makes the order-3 weights sum to the known generating function);
/// s/t = 10-columns on the left/right side, where for l = 1 the central
/// column is excluded from both sides and reported via central_ten instead.
inline AstStats ast_statistics(const Ast& a) {
    AstStats st;
    for (const auto& row : a.rows())
        for (int e : row)
            if (e == -1) ++st.q;
    ColumnProfile profile = column_profile(a);
    const int n = a.n();
    const int cols = a.num_columns();
    if (a.l() >= 2) {
        for (int g = 0; g < n; ++g) {
            if (profile.cols[g].is_one) ++st.r;
            if (profile.cols[g].is_ten) ++st.s;
        }
        for (int g = cols - n; g < cols; ++g)
            if (profile.cols[g].is_ten) ++st.t;
    } else {
        for (int g = 0; g < n; ++g)
            if (profile.cols[g].is_one) ++st.r;
        for (int g = 0; g < n - 1; ++g)
            if (profile.cols[g].is_ten) ++st.s;
        for (int g = n; g < cols; ++g)
            if (profile.cols[g].is_ten) ++st.t;
        st.central_ten = profile.cols[static_cast<std::size_t>(n - 1)].is_ten ? 1 : 0;
    }
    return st;
}

/// Q^q R^r S^s T^t, with the extra factor (S+T-Q) when the l = 1 central
/// column is a 10-column.
inline LaurentPolynomial ast_weight(const Ast& a) {
    AstStats st = ast_statistics(a);
    LaurentPolynomial w = qrst::term(st.q, st.r, st.s, st.t);
    if (st.central_ten) w *= qrst::central_factor();
    return w;
}

namespace detail {

class AstEnumerator {
public:
    AstEnumerator(int n, int l) : n_(n), l_(l), cols_(2 * n + l - 2) {
        if (n < 1 || l < 1) throw std::invalid_argument("require n >= 1 and l >= 1");
        rows_.resize(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            rows_[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(cols_ - 2 * i), 0);
        colsum_.assign(static_cast<std::size_t>(cols_), 0);
    }

    /// Visits every (n,l)-AST in deterministic order: cells scanned row-major,
    /// entries tried -1 < 0 < +1.
    void run(const std::function<void(const Ast&)>& visit) { run_rows(0, visit); }

    /// Restricts row 0 to carry its +1 at `pos`, or to be all zero when
    /// `pos` is absent (possible only for n = 1, l = 1). Used to partition
    /// the search space across workers.
    void run_with_first_row(std::optional<int> pos, const std::function<void(const Ast&)>& visit) {
        auto& row0 = rows_[0];
        std::fill(row0.begin(), row0.end(), 0);
        if (pos) {
            row0[static_cast<std::size_t>(*pos)] = 1;
            colsum_[static_cast<std::size_t>(*pos)] = 1;
        } else if (!(n_ == 1 && l_ == 1)) {
            return;  // row 0 must sum to 1
        }
        bool ok = true;
        for (int g = 0; g < cols_ && ok; ++g)
            if (column_last_row(g) == 0) ok = finish_column_ok(g);
        if (ok) run_rows(1, visit);
        if (pos) colsum_[static_cast<std::size_t>(*pos)] = 0;
        completed_ones_ = 0;
    }

    /// All legal partitions of the search by row 0 content, in stream order.
    std::vector<std::optional<int>> first_row_choices() const {
        std::vector<std::optional<int>> choices;
        if (n_ == 1 && l_ == 1) choices.push_back(std::nullopt);  // all-zero row sorts first
        for (int g = 0; g < cols_; ++g) choices.emplace_back(g);
        return choices;
    }

private:
    int column_last_row(int g) const { return std::min({n_ - 1, g, 2 * n_ + l_ - 3 - g}); }

    bool is_central(int g) const { return l_ >= 2 && g >= n_ && g <= n_ + l_ - 3; }

    bool finish_column_ok(int g) {
        int sum = colsum_[static_cast<std::size_t>(g)];
        if (is_central(g) && sum != 0) return false;
        if (sum == 1) {
            ++completed_ones_;
            if (completed_ones_ > n_) {
                --completed_ones_;
                return false;
            }
        }
        return true;
    }

    void undo_finish_column(int g) {
        if (colsum_[static_cast<std::size_t>(g)] == 1) --completed_ones_;
    }

    void run_rows(int i, const std::function<void(const Ast&)>& visit) {
        if (i == n_) {
            visit(Ast::validate(n_, l_, rows_));
            return;
        }
        run_cells(i, i, 0, 0, visit);
    }

    // row_last: sign of the last nonzero entry so far in row i (0 if none)
    void run_cells(int i, int g, int row_sum, int row_last,
                   const std::function<void(const Ast&)>& visit) {
        const int end = 2 * n_ + l_ - 3 - i;
        if (g > end) {
            run_rows(i + 1, visit);
            return;
        }
        const int remaining = end - g;  // cells after this one in the row
        const bool last_of_column = column_last_row(g) == i;
        for (int e = -1; e <= 1; ++e) {
            if (e == 1 && (colsum_[static_cast<std::size_t>(g)] != 0 || row_last == 1)) continue;
            if (e == -1 && (colsum_[static_cast<std::size_t>(g)] != 1 || row_last == -1)) continue;
            const int after_sum = row_sum + e;
            const int after_last = e != 0 ? e : row_last;
            if (!row_feasible(i, after_sum, after_last, remaining)) continue;
            colsum_[static_cast<std::size_t>(g)] += e;
            bool column_ok = !last_of_column || finish_column_ok(g);
            if (column_ok) {
                rows_[static_cast<std::size_t>(i)][static_cast<std::size_t>(g - i)] = e;
                run_cells(i, g + 1, after_sum, after_last, visit);
                rows_[static_cast<std::size_t>(i)][static_cast<std::size_t>(g - i)] = 0;
                if (last_of_column) undo_finish_column(g);
            }
            colsum_[static_cast<std::size_t>(g)] -= e;
        }
    }

    bool row_feasible(int i, int sum, int last, int remaining) const {
        // alternation bounds the achievable remaining contribution to one of
        // {-1,0}, {0,1}, {-1,0,1} depending on the last nonzero sign
        const int lo = (last == 1 || last == 0) ? -std::min(1, remaining) : 0;
        const int hi = (last == -1 || last == 0) ? std::min(1, remaining) : 0;
        int target_lo = 1, target_hi = 1;
        if (l_ == 1 && i == n_ - 1) {
            target_lo = 0;  // quasi case: the single bottom entry is 0 or 1
        }
        return sum + hi >= target_lo && sum + lo <= target_hi;
    }

    int n_;
    int l_;
    int cols_;
    std::vector<std::vector<int>> rows_;
    std::vector<int> colsum_;
    int completed_ones_ = 0;
};

}  // namespace detail

/// Streams every (n,l)-AST exactly once, row-major lexicographic on entries
/// with -1 < 0 < +1.
inline void ast_enumerate(int n, int l, const std::function<void(const Ast&)>& visit) {
    detail::AstEnumerator(n, l).run(visit);
}

inline std::vector<Ast> ast_enumerate_all(int n, int l) {
    std::vector<Ast> out;
    ast_enumerate(n, l, [&](const Ast& a) { out.push_back(a); });
    return out;
}

inline BigInt ast_count(int n, int l) {
    BigInt count = 0;
    ast_enumerate(n, l, [&](const Ast&) { ++count; });
    return count;
}

/// Sum of ast_weight over all (n,l)-ASTs. With jobs > 1 the search space is
/// partitioned by the content of row 0; the aggregate is independent of the
/// schedule because polynomial addition is order-independent.
inline LaurentPolynomial ast_genfunc(int n, int l, int jobs = 1) {
    detail::AstEnumerator seed(n, l);
    auto choices = seed.first_row_choices();
    std::vector<LaurentPolynomial> partial(choices.size(), LaurentPolynomial::zero(Ring::qrst()));
    if (jobs <= 1 || choices.size() <= 1) {
        ast_enumerate(n, l, [&](const Ast& a) { partial[0] += ast_weight(a); });
    } else {
        std::size_t next = 0;
        std::mutex mtx;
        auto worker = [&]() {
            while (true) {
                std::size_t mine;
                {
                    std::lock_guard<std::mutex> lock(mtx);
                    if (next >= choices.size()) return;
                    mine = next++;
                }
                detail::AstEnumerator part(n, l);
                part.run_with_first_row(choices[mine],
                                        [&](const Ast& a) { partial[mine] += ast_weight(a); });
            }
        };
        std::vector<std::thread> pool;
        for (int w = 0; w < std::min<int>(jobs, static_cast<int>(choices.size())); ++w)
            pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    LaurentPolynomial total = LaurentPolynomial::zero(Ring::qrst());
    for (const auto& p : partial) total += p;
    return total;
}

/// Strictly increasing signed positions of the n 1-columns; defined for l >= 2.
inline std::vector<int> ast_one_column_vector(const Ast& a) {
    if (a.l() < 2) throw std::invalid_argument("1-column vector requires l >= 2");
    std::vector<int> c;
    ColumnProfile profile = column_profile(a);
    for (int g = 0; g < a.num_columns(); ++g)
        if (profile.cols[static_cast<std::size_t>(g)].is_one)
            c.push_back(*profile.cols[static_cast<std::size_t>(g)].signed_label);
    return c;
}

/// Sum of x^q over all (n,l)-ASTs by direct enumeration. For l = 1 this is
/// not the (x,1,1,1) specialization of ast_genfunc, which carries the
/// modified central-column weight.
inline BigRational ast_x_enumeration(int n, int l, const BigRational& x) {
    BigRational total = 0;
    ast_enumerate(n, l, [&](const Ast& a) {
        int q = 0;
        for (const auto& row : a.rows())
            for (int e : row)
                if (e == -1) ++q;
        total += rational_pow(x, q);
    });
    return total;
}

/// Vertical-axis reflection on weights: fixes Q, sends the R-exponent b to
/// n-b, and swaps S with T. ast_genfunc(n,l) is a fixed point.
inline MonomialMap ast_mirror_map(int n) {
    MonomialMap map = MonomialMap::identity(4);
    map.scale[1] = -1;
    map.offset[1] = n;
    map.perm[2] = 3;
    map.perm[3] = 2;
    return map;
}

inline AlternatingSignTrapezoid AlternatingSignTrapezoid::validate(
    int n, int l, std::vector<std::vector<int>> rows) {
    if (n < 1 || l < 1) throw std::invalid_argument("shape mismatch: require n >= 1 and l >= 1");
    const int cols = 2 * n + l - 2;
    if (static_cast<int>(rows.size()) != n)
        throw std::invalid_argument("shape mismatch: expected " + std::to_string(n) + " rows");
    for (int i = 0; i < n; ++i)
        if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != cols - 2 * i)
            throw std::invalid_argument("shape mismatch: row " + std::to_string(i + 1) +
                                        " must have " + std::to_string(cols - 2 * i) + " entries");
    for (const auto& row : rows)
        for (int e : row)
            if (e < -1 || e > 1)
                throw std::invalid_argument("entry out of range: entries must be -1, 0, or +1");
    AlternatingSignTrapezoid a(n, l, std::move(rows));
    for (int i = 0; i < n; ++i) {
        int last = 0;
        for (int g = a.row_start(i); g <= a.row_end(i); ++g) {
            int e = a.entry(i, g);
            if (e == 0) continue;
            if (e == last)
                throw std::invalid_argument("alternation violation in row " + std::to_string(i + 1));
            last = e;
        }
    }
    for (int g = 0; g < cols; ++g) {
        int prefix = 0;
        bool seen = false;
        for (int i = 0; i < n; ++i) {
            int e = a.entry(i, g);
            if (e == 0) continue;
            if (!seen && e == -1)
                throw std::invalid_argument("column-top -1 in column " + std::to_string(g + 1));
            prefix += e;
            if (prefix < 0 || prefix > 1)
                throw std::invalid_argument("alternation violation in column " + std::to_string(g + 1));
            seen = true;
        }
    }
    for (int i = 0; i < n; ++i) {
        int sum = 0;
        for (int g = a.row_start(i); g <= a.row_end(i); ++g) sum += a.entry(i, g);
        if (l == 1 && i == n - 1) {
            if (sum != 0 && sum != 1)
                throw std::invalid_argument("row-sum violation: bottom entry must be 0 or 1");
        } else if (sum != 1) {
            throw std::invalid_argument("row-sum violation in row " + std::to_string(i + 1));
        }
    }
    if (l >= 2)
        for (int g = n; g <= n + l - 3; ++g)
            if (a.column_sum(g) != 0)
                throw std::invalid_argument("central-column-sum violation in column " +
                                            std::to_string(g + 1));
    return a;
}

}  // namespace astenum
