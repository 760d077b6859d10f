#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace astenum {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Binomial coefficient with the generalized definition: zero for k < 0,
/// otherwise the falling-factorial product n(n-1)...(n-k+1)/k!, which is an
/// integer for every signed n (e.g. binomial(-2, 1) = -2).
inline BigInt binomial(long long n, long long k) {
    if (k < 0) return 0;
    BigInt result = 1;
    for (long long t = 0; t < k; ++t) {
        result *= BigInt(n - t);
        result /= BigInt(t + 1);  // exact: prefix is binomial(n, t+1)
    }
    return result;
}

inline BigInt factorial(unsigned n) {
    BigInt result = 1;
    for (unsigned i = 2; i <= n; ++i) result *= i;
    return result;
}

inline BigInt int_pow(const BigInt& base, unsigned long long e) {
    BigInt result = 1;
    BigInt b = base;
    while (e > 0) {
        if (e & 1) result *= b;
        b *= b;
        e >>= 1;
    }
    return result;
}

/// x^e for signed e; raising zero to a negative power is a domain error.
inline BigRational rational_pow(const BigRational& x, long long e) {
    if (e == 0) return 1;
    if (x == 0 && e < 0) throw std::domain_error("zero raised to a negative power");
    BigInt num = int_pow(boost::multiprecision::numerator(x),
                         static_cast<unsigned long long>(e < 0 ? -e : e));
    BigInt den = int_pow(boost::multiprecision::denominator(x),
                         static_cast<unsigned long long>(e < 0 ? -e : e));
    if (e < 0) std::swap(num, den);
    return BigRational(num, den);
}

inline bool is_integer(const BigRational& x) {
    return boost::multiprecision::denominator(x) == 1;
}

/// Requires x to be integral; used after exact rational computations whose
/// result is known to be an integer.
inline BigInt to_integer(const BigRational& x) {
    if (!is_integer(x)) throw std::domain_error("expected an integer, got " + x.str());
    return boost::multiprecision::numerator(x);
}

/// Parses "p" or "p/q" with optional sign; q must be nonzero.
inline BigRational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return BigRational(BigInt(text));
        BigInt num(text.substr(0, slash));
        BigInt den(text.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return BigRational(num, den);
    } catch (const std::exception&) {
        throw std::invalid_argument("invalid rational: '" + text + "'");
    }
}

}  // namespace astenum
