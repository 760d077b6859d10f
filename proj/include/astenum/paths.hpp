#pragma once

#include <algorithm>
#include <functional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "astenum/csspp.hpp"
#include "astenum/laurent.hpp"
#include "astenum/matrix.hpp"

namespace astenum {

/// Monotone lattice path from (start_x, 0) to (0, #V) with steps H = (-1,0)
/// and V = (0,1), traced from the start.
class LatticePath {
public:
    LatticePath(int start_x, std::string steps) : start_x_(start_x), steps_(std::move(steps)) {
        if (start_x < 0) throw std::invalid_argument("path must start at x >= 0");
        int h = 0;
        for (char c : steps_) {
            if (c == 'H') ++h;
            else if (c == 'V') ++end_y_;
            else throw std::invalid_argument("path steps must be 'H' or 'V'");
        }
        if (h != start_x) throw std::invalid_argument("path must end on the y-axis");
    }

    int start_x() const { return start_x_; }
    int end_y() const { return end_y_; }
    const std::string& steps() const { return steps_; }

    /// Every lattice point on the path, start first.
    std::vector<std::pair<int, int>> points() const {
        std::vector<std::pair<int, int>> pts{{start_x_, 0}};
        int x = start_x_, y = 0;
        for (char c : steps_) {
            if (c == 'H') --x;
            else ++y;
            pts.emplace_back(x, y);
        }
        return pts;
    }

    /// Left endpoints (x, y) of the horizontal steps, in path order.
    std::vector<std::pair<int, int>> horizontal_left_endpoints() const {
        std::vector<std::pair<int, int>> pts;
        int x = start_x_, y = 0;
        for (char c : steps_) {
            if (c == 'H') {
                --x;
                pts.emplace_back(x, y);
            } else {
                ++y;
            }
        }
        return pts;
    }

    bool operator==(const LatticePath& other) const {
        return start_x_ == other.start_x_ && steps_ == other.steps_;
    }

private:
    int start_x_ = 0;
    int end_y_ = 0;
    std::string steps_;
};

/// Nonintersecting family realizing one partition: paths from (u,0) to
/// (0,u+l-1), listed by decreasing start, one per row.
struct PathFamily {
    int l = 1;
    std::vector<LatticePath> paths;

    nlohmann::json to_json() const {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& p : paths)
            arr.push_back({{"start", {p.start_x(), 0}}, {"steps", p.steps()}});
        return nlohmann::json{{"l", l}, {"paths", std::move(arr)}};
    }

    static PathFamily from_json(const nlohmann::json& j) {
        PathFamily family;
        family.l = j.at("l").get<int>();
        for (const auto& pj : j.at("paths")) {
            auto start = pj.at("start").get<std::vector<int>>();
            if (start.size() != 2 || start[1] != 0)
                throw std::invalid_argument("path start must be of the form [i, 0]");
            family.paths.emplace_back(start[0], pj.at("steps").get<std::string>());
        }
        return family;
    }
};

/// Number of monotone paths (x1,y1) -> (x2,y2); zero when unreachable.
inline BigInt path_count(int x1, int y1, int x2, int y2) {
    const int dx = x1 - x2;
    const int dy = y2 - y1;
    if (dx < 0 || dy < 0) return 0;
    return binomial(dx + dy, dx);
}

/// Geometric statistics of one path. Writing v = y - x for the left endpoint
/// of a horizontal step: the step lies below the line y = x+l-1 iff
/// v <= l-1, it touches y = x+d from the right iff v = d, and it lies on the
/// x-axis iff y = 0. For d = 0 the axis step onto the origin is reported via
/// the flag rather than t.
inline CssppStats path_statistics(const LatticePath& p, int l, int d) {
    if (l < 1) throw std::invalid_argument("require l >= 1");
    if (d < 0 || d > l - 1) throw std::invalid_argument("require 0 <= d <= l-1");
    CssppStats st;
    st.r = 1;
    for (auto [x, y] : p.horizontal_left_endpoints()) {
        const int v = y - x;
        if (d >= 1) {
            if (v == d) ++st.s;
            else if (y == 0) ++st.t;
            else if (v <= l - 1) ++st.q;
        } else {
            if (y == 0 && x == 0) st.second_position_one = 1;
            else if (y == 0) ++st.t;
            else if (v == 0) ++st.s;
            else if (v <= l - 1) ++st.q;
        }
    }
    return st;
}

/// Row -> path: the first part fixes the endpoint (0, p-1); each later part
/// p at offset o contributes the horizontal step at height p-1 with left
/// endpoint x = o-1.
inline PathFamily csspp_to_paths(const Csspp& p, int l) {
    if (l < 1 || p.cls() != l - 1)
        throw std::invalid_argument("class mismatch: partition class must be l-1");
    PathFamily family;
    family.l = l;
    for (int i = 0; i < p.num_rows(); ++i) {
        const int len = p.shape()[static_cast<std::size_t>(i)];
        const int u = len - 1;
        std::string steps;
        int y = 0;
        for (int o = len - 1; o >= 1; --o) {
            const int h = p.part(i, o) - 1;
            steps.append(static_cast<std::size_t>(h - y), 'V');
            steps.push_back('H');
            y = h;
        }
        const int top = p.part(i, 0) - 1;
        steps.append(static_cast<std::size_t>(top - y), 'V');
        family.paths.emplace_back(u, std::move(steps));
    }
    return family;
}

inline void require_nonintersecting(const PathFamily& family) {
    std::set<std::pair<int, int>> seen;
    for (const auto& p : family.paths)
        for (auto pt : p.points())
            if (!seen.insert(pt).second)
                throw std::invalid_argument("intersecting family: shared lattice point (" +
                                            std::to_string(pt.first) + "," +
                                            std::to_string(pt.second) + ")");
}

inline Csspp paths_to_csspp(const PathFamily& family) {
    const int l = family.l;
    if (l < 1) throw std::invalid_argument("require l >= 1");
    require_nonintersecting(family);
    std::vector<const LatticePath*> sorted;
    for (const auto& p : family.paths) sorted.push_back(&p);
    std::sort(sorted.begin(), sorted.end(),
              [](const LatticePath* a, const LatticePath* b) { return a->start_x() > b->start_x(); });
    std::vector<int> shape;
    std::vector<std::vector<int>> rows;
    for (const LatticePath* p : sorted) {
        if (p->end_y() != p->start_x() + l - 1)
            throw std::invalid_argument("endpoint mismatch: path from x=" +
                                        std::to_string(p->start_x()) + " must end at height " +
                                        std::to_string(p->start_x() + l - 1));
        const int len = p->start_x() + 1;
        std::vector<int> row(static_cast<std::size_t>(len), 0);
        row[0] = p->end_y() + 1;
        for (auto [x, y] : p->horizontal_left_endpoints())
            row[static_cast<std::size_t>(x + 1)] = y + 1;
        shape.push_back(len);
        rows.push_back(std::move(row));
    }
    return Csspp::validate(std::move(shape), l - 1, std::move(rows));
}

/// Visits all monotone paths (i,0) -> (0, j+l-1) in lexicographic step order
/// with 'H' before 'V'.
inline void enumerate_paths(int i, int j, int l, const std::function<void(const LatticePath&)>& visit) {
    if (i < 0 || j < 0 || l < 1) throw std::invalid_argument("require i,j >= 0 and l >= 1");
    const int total_v = j + l - 1;
    std::string steps;
    steps.reserve(static_cast<std::size_t>(i + total_v));
    const std::function<void(int, int)> rec = [&](int h_left, int v_left) {
        if (h_left == 0 && v_left == 0) {
            visit(LatticePath(i, steps));
            return;
        }
        if (h_left > 0) {
            steps.push_back('H');
            rec(h_left - 1, v_left);
            steps.pop_back();
        }
        if (v_left > 0) {
            steps.push_back('V');
            rec(h_left, v_left - 1);
            steps.pop_back();
        }
    };
    rec(i, total_v);
}

/// Brute-force generating function of a single path, the independent oracle
/// for the closed form below: sums the statistic weights over every path,
/// with the d = 0 origin step contributing a factor (S+T-Q).
inline LaurentPolynomial single_path_genfunc_enum(int i, int j, int l, int d) {
    LaurentPolynomial total = LaurentPolynomial::zero(Ring::qrst());
    enumerate_paths(i, j, l, [&](const LatticePath& p) {
        CssppStats st = path_statistics(p, l, d);
        LaurentPolynomial w = qrst::term(st.q, 1, st.s, st.t);
        if (st.second_position_one) w *= qrst::central_factor();
        total += w;
    });
    return total;
}

/// Closed form of the single-path generating function from (i,0) to
/// (0,j+l-1):
///   R * sum_{k=0..i} T^(i-k) sum_{m=0..j} C(j,m) Q^(k-m)
///       ( C(k+l-3, k-m) + C(k+l-3, k-m-1) S Q^-1 )
/// with generalized binomials; independent of d.
inline LaurentPolynomial single_path_genfunc_closed(int i, int j, int l) {
    if (i < 0 || j < 0 || l < 1) throw std::invalid_argument("require i,j >= 0 and l >= 1");
    const Ring& ring = Ring::qrst();
    const LaurentPolynomial s_over_q = LaurentPolynomial::monomial(ring, {-1, 0, 1, 0}, 1);
    LaurentPolynomial total = LaurentPolynomial::zero(ring);
    for (int k = 0; k <= i; ++k) {
        for (int m = 0; m <= j; ++m) {
            // inner factor carries S/Q; the Q^(k-m) in front restores
            // nonnegative exponents term by term
            LaurentPolynomial inner =
                LaurentPolynomial::constant(ring, binomial(k + l - 3, k - m)) +
                s_over_q * binomial(k + l - 3, k - m - 1);
            if (inner.is_zero()) continue;
            total += LaurentPolynomial::monomial(ring, {k - m, 1, 0, i - k}, binomial(j, m)) * inner;
        }
    }
    return total;
}

/// Assembles the full generating function from per-path closed forms: the
/// sum over subsets {u_1 < ... < u_r} of {0..n-1} of
/// det(single_path_genfunc_closed(u_i, u_j, l)), r running from 0 to n.
/// The parameter d only selects a statistic family; the value is the same
/// for every legal d.
inline LaurentPolynomial lgv_genfunc(int n, int l, int d) {
    if (n < 1 || l < 1) throw std::invalid_argument("require n >= 1 and l >= 1");
    if (d < 0 || d > l - 1) throw std::invalid_argument("require 0 <= d <= l-1");
    const Ring& ring = Ring::qrst();
    // cache entries: only n*n distinct (u_i, u_j) pairs occur
    std::vector<LaurentPolynomial> entry;
    entry.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) entry.push_back(single_path_genfunc_closed(a, b, l));
    LaurentPolynomial total = LaurentPolynomial::zero(ring);
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> subset;
        for (int u = 0; u < n; ++u)
            if (mask & (1u << u)) subset.push_back(u);
        const std::size_t r = subset.size();
        PolyMatrix m(ring, r);
        for (std::size_t a = 0; a < r; ++a)
            for (std::size_t b = 0; b < r; ++b)
                m.set(a, b,
                      entry[static_cast<std::size_t>(subset[a]) * static_cast<std::size_t>(n) +
                            static_cast<std::size_t>(subset[b])]);
        total += m.determinant();
    }
    return total;
}

}  // namespace astenum
