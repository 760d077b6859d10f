#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "astenum/laurent.hpp"

namespace astenum {

/// Division-free determinant by dynamic programming over column subsets
/// (minor expansion with memoization, O(2^n * n) ring multiplications).
/// `entry(i, j)` supplies the matrix, `zero`/`one` the ring constants.
/// Works over any commutative ring value type with +=, *.
template <typename Value, typename EntryFn>
Value subset_determinant(std::size_t n, EntryFn&& entry, Value zero, Value one) {
    if (n == 0) return one;
    if (n > 24) throw std::invalid_argument("determinant dimension too large for subset DP");
    const std::uint32_t full = (1u << n) - 1u;
    std::vector<Value> minor(static_cast<std::size_t>(full) + 1, zero);
    minor[0] = one;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        const std::size_t row = static_cast<std::size_t>(std::popcount(mask)) - 1;
        Value acc = zero;
        bool negate = (row % 2) == 1;  // expansion along the last row: sign (-1)^(row+pos)
        for (std::size_t col = 0; col < n; ++col) {
            const std::uint32_t bit = 1u << col;
            if (!(mask & bit)) continue;
            Value contrib = entry(row, col) * minor[mask ^ bit];
            if (negate) acc -= contrib;
            else acc += contrib;
            negate = !negate;
        }
        minor[mask] = std::move(acc);
    }
    return minor[full];
}

/// Square matrix of Laurent polynomials over one shared ring.
class PolyMatrix {
public:
    PolyMatrix(Ring ring, std::size_t n)
        : ring_(std::move(ring)), n_(n), cells_(n * n, LaurentPolynomial::zero(ring_)) {}

    std::size_t size() const { return n_; }
    const Ring& ring() const { return ring_; }

    LaurentPolynomial& at(std::size_t i, std::size_t j) { return cells_.at(i * n_ + j); }
    const LaurentPolynomial& at(std::size_t i, std::size_t j) const { return cells_.at(i * n_ + j); }

    void set(std::size_t i, std::size_t j, LaurentPolynomial value) {
        if (value.ring() != ring_) throw std::invalid_argument("entry ring mismatch");
        cells_.at(i * n_ + j) = std::move(value);
    }

    LaurentPolynomial determinant() const {
        return subset_determinant<LaurentPolynomial>(
            n_, [this](std::size_t i, std::size_t j) -> const LaurentPolynomial& { return at(i, j); },
            LaurentPolynomial::zero(ring_), LaurentPolynomial::constant(ring_, 1));
    }

private:
    Ring ring_;
    std::size_t n_;
    std::vector<LaurentPolynomial> cells_;
};

inline BigInt integer_determinant(std::size_t n, const std::function<BigInt(std::size_t, std::size_t)>& entry) {
    return subset_determinant<BigInt>(n, entry, BigInt(0), BigInt(1));
}

}  // namespace astenum
