#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "astenum/laurent.hpp"
#include "astenum/matrix.hpp"

using namespace astenum;

namespace {

// Independent determinant oracle: plain recursive cofactor expansion along
// the first row. Kept free of the subset-DP code path on purpose.
LaurentPolynomial cofactor_determinant(const std::vector<std::vector<LaurentPolynomial>>& m,
                                       const Ring& ring) {
    const std::size_t n = m.size();
    if (n == 0) return LaurentPolynomial::constant(ring, 1);
    if (n == 1) return m[0][0];
    LaurentPolynomial det = LaurentPolynomial::zero(ring);
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<std::vector<LaurentPolynomial>> sub;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<LaurentPolynomial> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(m[i][k]);
            sub.push_back(std::move(row));
        }
        LaurentPolynomial contrib = m[0][j] * cofactor_determinant(sub, ring);
        if (j % 2 == 0) det += contrib;
        else det -= contrib;
    }
    return det;
}

LaurentPolynomial random_poly(std::mt19937& rng, const Ring& ring, int max_terms = 5) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> exp(-3, 3);
    std::uniform_int_distribution<int> coef(-20, 20);
    LaurentPolynomial p = LaurentPolynomial::zero(ring);
    int k = nterms(rng);
    for (int t = 0; t < k; ++t) {
        Exponents e(ring.arity());
        for (auto& x : e) x = exp(rng);
        p += LaurentPolynomial::monomial(ring, e, coef(rng));
    }
    return p;
}

}  // namespace

TEST_CASE("generalized binomial coefficients") {
    CHECK(binomial(5, -1) == 0);
    CHECK(binomial(-2, 1) == -2);
    CHECK(binomial(4, 2) == 6);
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(-1, 0) == 1);
    CHECK(binomial(-1, 3) == -1);
    CHECK(binomial(-2, 3) == -4);
    CHECK(binomial(10, 5) == 252);
    // (-1)^k * binomial(k-n-1, k) is the same generalized value
    for (int n = -6; n <= 6; ++n)
        for (int k = 0; k <= 6; ++k) {
            BigInt sign = (k % 2 == 0) ? 1 : -1;
            CHECK(binomial(n, k) == sign * binomial(k - n - 1, k));
        }
}

TEST_CASE("ring arithmetic basics") {
    const Ring& ring = Ring::qrst();
    auto Q = qrst::Q();
    auto R = qrst::R();
    auto one = qrst::one();

    CHECK((Q + R) + (-Q) == R);
    CHECK((one + Q) * (one - Q) == one - Q * Q);

    auto qinv = LaurentPolynomial::monomial(ring, {-1, 0, 0, 0}, 1);
    CHECK(qinv * Q == one);

    CHECK((Q - Q).is_zero());
    CHECK((Q * BigInt(0)).is_zero());
    CHECK(Q * BigInt(3) == Q + Q + Q);

    Ring other(std::vector<std::string>{"X"});
    CHECK_THROWS_AS(Q + LaurentPolynomial::variable(other, "X"), std::invalid_argument);
}

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937 rng(20240901);
    const Ring& ring = Ring::qrst();
    for (int iter = 0; iter < 200; ++iter) {
        auto a = random_poly(rng, ring);
        auto b = random_poly(rng, ring);
        auto c = random_poly(rng, ring);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a + (-a)).is_zero());
        CHECK(a + LaurentPolynomial::zero(ring) == a);
        CHECK(a * LaurentPolynomial::constant(ring, 1) == a);
    }
}

TEST_CASE("monomial map") {
    const Ring& ring = Ring::qrst();

    SECTION("reflection example: R S with b -> 1-b and S<->T") {
        auto p = qrst::R() * qrst::S();
        MonomialMap map = MonomialMap::identity(4);
        map.scale[1] = -1;
        map.offset[1] = 1;   // R-exponent b -> 1 - b
        map.perm[2] = 3;     // S -> T
        map.perm[3] = 2;     // T -> S
        CHECK(p.apply(map) == qrst::T());
    }

    SECTION("constant fixed by any zero-shift map") {
        MonomialMap map = MonomialMap::identity(4);
        map.scale[0] = -1;
        auto p = LaurentPolynomial::constant(ring, 7);
        CHECK(p.apply(map) == p);
    }

    SECTION("map composed with inverse is identity") {
        std::mt19937 rng(77);
        MonomialMap map = MonomialMap::identity(4);
        map.perm = {2, 0, 3, 1};
        map.scale = {-1, 1, -1, 1};
        map.offset = {3, -2, 0, 5};
        MonomialMap inv = map.inverse();
        for (int iter = 0; iter < 100; ++iter) {
            auto p = random_poly(rng, ring);
            CHECK(p.apply(map).apply(inv) == p);
            CHECK(p.apply(inv).apply(map) == p);
        }
    }
}

TEST_CASE("rational evaluation") {
    const Ring& ring = Ring::qrst();
    // 1 + 2QR + 2R + R^2 + RS + RT
    auto z24 = LaurentPolynomial::parse_text(
        ring, "1 + 2*Q^1*R^1 + 2*R^1 + 1*R^1*S^1 + 1*R^1*T^1 + 1*R^2");

    std::vector<BigRational> ones{1, 1, 1, 1};
    CHECK(z24.evaluate(ones) == 8);

    std::vector<BigRational> q2{2, 1, 1, 1};
    CHECK(z24.evaluate(q2) == 10);

    CHECK(LaurentPolynomial::constant(ring, 7).evaluate({0, 0, 0, 0}) == 7);

    auto qinv = LaurentPolynomial::monomial(ring, {-1, 0, 0, 0}, 1);
    CHECK(qinv.evaluate({BigRational(1, 2), 0, 0, 0}) == 2);
    CHECK_THROWS_AS(qinv.evaluate({0, 0, 0, 0}), std::domain_error);

    auto half = LaurentPolynomial::monomial(ring, {1, 1, 0, 0}, 3);
    CHECK(half.evaluate({BigRational(1, 2), BigRational(1, 3), 0, 0}) == BigRational(1, 2));
}

TEST_CASE("determinant") {
    const Ring& ring = Ring::qrst();

    SECTION("constants") {
        PolyMatrix m(ring, 2);
        m.set(0, 0, LaurentPolynomial::constant(ring, 2));
        m.set(0, 1, LaurentPolynomial::constant(ring, 1));
        m.set(1, 0, LaurentPolynomial::constant(ring, 4));
        m.set(1, 1, LaurentPolynomial::constant(ring, 6));
        CHECK(m.determinant() == LaurentPolynomial::constant(ring, 8));
    }

    SECTION("identity and empty") {
        PolyMatrix id3(ring, 3);
        for (int i = 0; i < 3; ++i) id3.set(i, i, LaurentPolynomial::constant(ring, 1));
        CHECK(id3.determinant() == LaurentPolynomial::constant(ring, 1));
        PolyMatrix empty(ring, 0);
        CHECK(empty.determinant() == LaurentPolynomial::constant(ring, 1));
    }

    SECTION("agrees with cofactor expansion on random matrices") {
        std::mt19937 rng(424242);
        for (std::size_t n = 1; n <= 4; ++n) {
            for (int iter = 0; iter < 12; ++iter) {
                PolyMatrix m(ring, n);
                std::vector<std::vector<LaurentPolynomial>> raw(
                    n, std::vector<LaurentPolynomial>(n, LaurentPolynomial::zero(ring)));
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = 0; j < n; ++j) {
                        raw[i][j] = random_poly(rng, ring, 3);
                        m.set(i, j, raw[i][j]);
                    }
                CHECK(m.determinant() == cofactor_determinant(raw, ring));
            }
        }
    }

    SECTION("integer determinant helper") {
        std::vector<std::vector<int>> a{{2, 1}, {3, 5}};
        CHECK(integer_determinant(2, [&](std::size_t i, std::size_t j) { return BigInt(a[i][j]); }) == 7);
    }
}

TEST_CASE("serialization round trips") {
    const Ring& ring = Ring::qrst();
    std::mt19937 rng(987654);

    SECTION("json") {
        for (int iter = 0; iter < 100; ++iter) {
            auto p = random_poly(rng, ring);
            auto j = p.to_json();
            CHECK(LaurentPolynomial::from_json(j) == p);
        }
        // canonical order + shape of the wire format
        auto p = qrst::one() + qrst::R();
        CHECK(p.to_json().dump() ==
              R"({"terms":[{"coef":"1","exp":[0,0,0,0]},{"coef":"1","exp":[0,1,0,0]}],"vars":["Q","R","S","T"]})");
    }

    SECTION("text") {
        for (int iter = 0; iter < 100; ++iter) {
            auto p = random_poly(rng, ring);
            CHECK(LaurentPolynomial::parse_text(ring, p.to_text()) == p);
        }
        CHECK(LaurentPolynomial::zero(ring).to_text() == "0");
        CHECK(LaurentPolynomial::parse_text(ring, "0").is_zero());
        auto m = LaurentPolynomial::monomial(ring, {1, 2, 1, 0}, -1);
        CHECK(m.to_text() == "-1*Q^1*R^2*S^1");
        CHECK(LaurentPolynomial::parse_text(ring, "-1*Q^1*R^2*S^1") == m);
    }
}
