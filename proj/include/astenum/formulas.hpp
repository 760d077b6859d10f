#pragma once

#include <string>
#include <utility>
#include <vector>

#include "astenum/laurent.hpp"
#include "astenum/matrix.hpp"
#include "astenum/paths.hpp"

namespace astenum {

/// Entry of the binomial determinant: the single-path closed form plus the
/// Kronecker delta. Generalized binomials make this valid for l = 1 and
/// l = 2, where k+l-3 goes negative.
inline LaurentPolynomial det_entry(int i, int j, int l) {
    LaurentPolynomial e = single_path_genfunc_closed(i, j, l);
    if (i == j) e += LaurentPolynomial::constant(Ring::qrst(), 1);
    return e;
}

/// det over 0 <= i,j <= n-1 of det_entry(i,j,l): the closed-form route to
/// the fourfold generating function.
inline LaurentPolynomial det_formula_genfunc(int n, int l) {
    if (n < 1 || l < 1) throw std::invalid_argument("require n >= 1 and l >= 1");
    const Ring& ring = Ring::qrst();
    PolyMatrix m(ring, static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m.set(static_cast<std::size_t>(i), static_cast<std::size_t>(j), det_entry(i, j, l));
    return m.determinant();
}

/// det(binomial(i+j+l-1, i) + delta): counts class l-1 partitions with at
/// most n parts in the first row.
inline BigInt andrews_count(int n, int l) {
    if (n < 1 || l < 1) throw std::invalid_argument("require n >= 1 and l >= 1");
    return integer_determinant(static_cast<std::size_t>(n), [l](std::size_t i, std::size_t j) {
        BigInt v = binomial(static_cast<long long>(i + j) + l - 1, static_cast<long long>(i));
        if (i == j) v += 1;
        return v;
    });
}

/// f(l;i,j) = sum_{k<=i, m<=j} 2^(k-m) C(j,m) (C(k+l-3,k-m) + C(k+l-3,k-m-1)/2),
/// computed over exact rationals; the result is asserted integral.
inline BigInt f_entry(int l, int i, int j) {
    if (i < 0 || j < 0) throw std::invalid_argument("require i,j >= 0");
    BigRational total = 0;
    for (int k = 0; k <= i; ++k) {
        for (int m = 0; m <= j; ++m) {
            BigRational inner(binomial(k + l - 3, k - m));
            inner += BigRational(binomial(k + l - 3, k - m - 1), 2);
            total += rational_pow(BigRational(2), k - m) * BigRational(binomial(j, m)) * inner;
        }
    }
    return to_integer(total);
}

/// g(a;i,j) = sum_{m<=i} C(m+j+a, m) C(i+a, m+a).
inline BigInt g_entry(int a, int i, int j) {
    if (a < 0 || i < 0 || j < 0) throw std::invalid_argument("require a,i,j >= 0");
    BigInt total = 0;
    for (int m = 0; m <= i; ++m) total += binomial(m + j + a, m) * binomial(i + a, m + a);
    return total;
}

/// D_n(a) = det(g(a;i,j) + delta).
inline BigInt andrews_determinant(int n, int a) {
    if (n < 1 || a < 0) throw std::invalid_argument("require n >= 1 and a >= 0");
    return integer_determinant(static_cast<std::size_t>(n), [a](std::size_t i, std::size_t j) {
        BigInt v = g_entry(a, static_cast<int>(i), static_cast<int>(j));
        if (i == j) v += 1;
        return v;
    });
}

/// Verifies the two ratio evaluations
///   D_2n(a)   = D_2n-1(a) * 2^n     * prod_{k=1..n} (2(n+k)+a-1)/(n+k)
///   D_2n+1(a) = D_2n(a)   * 2^(n+1) * prod_{k=1..n} (2(n+k)+a-1)/(n+k)
/// exactly; returns one flag per identity.
inline std::pair<bool, bool> andrews_ratio_check(int n, int a) {
    if (n < 1 || a < 0) throw std::invalid_argument("require n >= 1 and a >= 0");
    BigRational prod = 1;
    for (int k = 1; k <= n; ++k)
        prod *= BigRational(2 * (n + k) + a - 1, n + k);
    const BigRational d_odd_low(andrews_determinant(2 * n - 1, a));
    const BigRational d_even(andrews_determinant(2 * n, a));
    const BigRational d_odd_high(andrews_determinant(2 * n + 1, a));
    const bool first = d_even == d_odd_low * rational_pow(BigRational(2), n) * prod;
    const bool second = d_odd_high == d_even * rational_pow(BigRational(2), n + 1) * prod;
    return {first, second};
}

struct ProductFormulaResult {
    int n_rows = 0;
    int l = 0;
    BigInt value;
    std::string branch;  // "odd" (2n+1 rows) or "even" (2n+2 rows)
};

/// Product formula for the 2-enumeration of trapezoids with n_rows rows,
/// valid for l >= 2; evaluated exactly and asserted integral.
inline ProductFormulaResult two_enum_product(int n_rows, int l) {
    if (n_rows < 1) throw std::invalid_argument("require n_rows >= 1");
    if (l < 2) throw std::invalid_argument("product formula requires l >= 2");
    auto half_product = [l](int bound) {
        BigRational prod = 1;
        for (int i = 1; i <= bound; ++i)
            for (int j = i; j <= bound; ++j)
                prod *= BigRational(2 * (i + j) + l - 3, 2 * i - 1);
        return prod;
    };
    ProductFormulaResult result;
    result.n_rows = n_rows;
    result.l = l;
    if (n_rows % 2 == 1) {
        const int n = (n_rows - 1) / 2;
        BigRational p = half_product(n);
        result.value = to_integer(rational_pow(BigRational(2), n + 1) * p * p);
        result.branch = "odd";
    } else {
        const int n = (n_rows - 2) / 2;
        result.value =
            to_integer(rational_pow(BigRational(2), n + 1) * half_product(n) * half_product(n + 1));
        result.branch = "even";
    }
    return result;
}

}  // namespace astenum
