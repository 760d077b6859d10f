#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "astenum/laurent.hpp"

namespace astenum {

/// Shifted filling of class k: shape is a strict partition, row i (0-based)
/// occupies columns j = i .. i+shape[i]-1, rows weakly decrease, columns
/// strictly decrease, and the first part of each row equals k + its length.
class ColumnStrictShiftedPlanePartition {
public:
    static ColumnStrictShiftedPlanePartition validate(std::vector<int> shape, int k,
                                                      std::vector<std::vector<int>> rows);

    int cls() const { return k_; }
    const std::vector<int>& shape() const { return shape_; }
    const std::vector<std::vector<int>>& rows() const { return rows_; }
    int num_rows() const { return static_cast<int>(rows_.size()); }
    bool empty() const { return rows_.empty(); }

    /// Part at row i and column offset o = j - i.
    int part(int i, int o) const { return rows_[static_cast<std::size_t>(i)][static_cast<std::size_t>(o)]; }

    bool operator==(const ColumnStrictShiftedPlanePartition& other) const {
        return k_ == other.k_ && rows_ == other.rows_;
    }

    nlohmann::json to_json() const {
        return nlohmann::json{{"class", k_}, {"shape", shape_}, {"rows", rows_}};
    }

    static ColumnStrictShiftedPlanePartition from_json(const nlohmann::json& j) {
        return validate(j.at("shape").get<std::vector<int>>(), j.at("class").get<int>(),
                        j.at("rows").get<std::vector<std::vector<int>>>());
    }

private:
    ColumnStrictShiftedPlanePartition(std::vector<int> shape, int k,
                                      std::vector<std::vector<int>> rows)
        : shape_(std::move(shape)), k_(k), rows_(std::move(rows)) {}

    std::vector<int> shape_;
    int k_ = 0;
    std::vector<std::vector<int>> rows_;
};

using Csspp = ColumnStrictShiftedPlanePartition;

inline Csspp ColumnStrictShiftedPlanePartition::validate(std::vector<int> shape, int k,
                                                         std::vector<std::vector<int>> rows) {
    if (k < 0) throw std::invalid_argument("class must be nonnegative");
    for (std::size_t i = 0; i < shape.size(); ++i) {
        if (shape[i] < 1) throw std::invalid_argument("shape parts must be positive");
        if (i + 1 < shape.size() && shape[i] <= shape[i + 1])
            throw std::invalid_argument("shape must strictly decrease");
    }
    if (rows.size() != shape.size())
        throw std::invalid_argument("shape mismatch: row count differs from shape length");
    for (std::size_t i = 0; i < rows.size(); ++i)
        if (static_cast<int>(rows[i].size()) != shape[i])
            throw std::invalid_argument("shape mismatch in row " + std::to_string(i + 1));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t o = 0; o < rows[i].size(); ++o) {
            int p = rows[i][o];
            if (p < 1) throw std::invalid_argument("parts must be positive");
            if (o > 0 && p > rows[i][o - 1])
                throw std::invalid_argument("monotonicity violation: row " + std::to_string(i + 1) +
                                            " must weakly decrease");
            // the cell above (i, o) sits at offset o+1 of row i-1
            if (i > 0 && rows[i - 1][o + 1] <= p)
                throw std::invalid_argument("monotonicity violation: column through row " +
                                            std::to_string(i + 1) + " must strictly decrease");
        }
        if (rows[i][0] != k + shape[i])
            throw std::invalid_argument("class violation: first part of row " +
                                        std::to_string(i + 1) + " must be " +
                                        std::to_string(k + shape[i]));
    }
    return Csspp(std::move(shape), k, std::move(rows));
}

namespace detail {

inline void csspp_shapes(int max_part, std::vector<int>& prefix,
                         const std::function<void(const std::vector<int>&)>& visit) {
    visit(prefix);
    // ascending next parts yield lexicographically ascending shapes
    int start = prefix.empty() ? max_part : prefix.back() - 1;
    for (int part = 1; part <= start; ++part) {
        prefix.push_back(part);
        csspp_shapes(max_part, prefix, visit);
        prefix.pop_back();
    }
}

class CssppFiller {
public:
    CssppFiller(std::vector<int> shape, int k) : shape_(std::move(shape)), k_(k) {
        rows_.resize(shape_.size());
        for (std::size_t i = 0; i < shape_.size(); ++i)
            rows_[i].assign(static_cast<std::size_t>(shape_[i]), 0);
    }

    void run(const std::function<void(const Csspp&)>& visit) { fill(0, 0, visit); }

private:
    void fill(std::size_t i, std::size_t o, const std::function<void(const Csspp&)>& visit) {
        if (i == rows_.size()) {
            visit(Csspp::validate(shape_, k_, rows_));
            return;
        }
        if (o == rows_[i].size()) {
            fill(i + 1, 0, visit);
            return;
        }
        if (o == 0) {
            int v = k_ + shape_[i];
            if (i > 0 && rows_[i - 1][1] <= v) return;  // pinned first part blocked from above
            rows_[i][0] = v;
            fill(i, 1, visit);
            rows_[i][0] = 0;
            return;
        }
        int upper = rows_[i][o - 1];
        if (i > 0) upper = std::min(upper, rows_[i - 1][o + 1] - 1);
        for (int v = upper; v >= 1; --v) {  // descending keeps the stream order canonical
            rows_[i][o] = v;
            fill(i, o + 1, visit);
            rows_[i][o] = 0;
        }
    }

    std::vector<int> shape_;
    int k_;
    std::vector<std::vector<int>> rows_;
};

}  // namespace detail

/// Streams every class-k partition with at most n parts in the first row,
/// shapes in ascending lexicographic order, fillings row-major descending.
inline void csspp_enumerate(int n, int k, const std::function<void(const Csspp&)>& visit) {
    if (n < 1 || k < 0) throw std::invalid_argument("require n >= 1 and k >= 0");
    std::vector<int> prefix;
    detail::csspp_shapes(n, prefix, [&](const std::vector<int>& shape) {
        detail::CssppFiller(shape, k).run(visit);
    });
}

inline std::vector<Csspp> csspp_enumerate_all(int n, int k) {
    std::vector<Csspp> out;
    csspp_enumerate(n, k, [&](const Csspp& p) { out.push_back(p); });
    return out;
}

struct CssppStats {
    int q = 0;
    int r = 0;
    int s = 0;
    int t = 0;
    int second_position_one = 0;  // d = 0 only: some part 1 at offset j-i = 1

    bool operator==(const CssppStats&) const = default;
};

/// The d-parameterized statistics. For d in 1..k: q counts parts in
/// {2..o+k}\{o+d} (o = j-i), s counts parts equal to o+d, t counts parts
/// equal to 1. For d = 0: q counts parts in {2..o+k}\{o}, s counts parts
/// equal to o > 1, t counts 1s at offsets o > 1, and a 1 at offset 1 sets
/// the flag instead.
inline CssppStats csspp_statistics(const Csspp& p, int d) {
    if (d < 0 || d > p.cls()) throw std::invalid_argument("require 0 <= d <= class");
    CssppStats st;
    st.r = p.num_rows();
    const int k = p.cls();
    for (int i = 0; i < p.num_rows(); ++i) {
        for (int o = 0; o < p.shape()[static_cast<std::size_t>(i)]; ++o) {
            const int v = p.part(i, o);
            if (d >= 1) {
                if (v >= 2 && v <= o + k && v != o + d) ++st.q;
                if (v == o + d) ++st.s;
                if (v == 1) ++st.t;
            } else {
                if (v >= 2 && v <= o + k && v != o) ++st.q;
                if (v == o && v > 1) ++st.s;
                if (v == 1 && o > 1) ++st.t;
                if (v == 1 && o == 1) st.second_position_one = 1;
            }
        }
    }
    return st;
}

inline LaurentPolynomial csspp_weight(const Csspp& p, int d) {
    CssppStats st = csspp_statistics(p, d);
    LaurentPolynomial w = qrst::term(st.q, st.r, st.s, st.t);
    if (st.second_position_one) w *= qrst::central_factor();
    return w;
}

inline LaurentPolynomial csspp_genfunc(int n, int k, int d) {
    if (d < 0 || d > k) throw std::invalid_argument("require 0 <= d <= k");
    LaurentPolynomial total = LaurentPolynomial::zero(Ring::qrst());
    csspp_enumerate(n, k, [&](const Csspp& p) { total += csspp_weight(p, d); });
    return total;
}

inline BigInt csspp_count(int n, int k) {
    BigInt count = 0;
    csspp_enumerate(n, k, [&](const Csspp&) { ++count; });
    return count;
}

}  // namespace astenum
