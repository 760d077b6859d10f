#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <set>

#include "astenum/csspp.hpp"

using namespace astenum;

namespace {

using Rows = std::vector<std::vector<int>>;

LaurentPolynomial poly(const std::string& text) {
    return LaurentPolynomial::parse_text(Ring::qrst(), text);
}

Csspp make(std::vector<int> shape, int k, Rows rows) {
    return Csspp::validate(std::move(shape), k, std::move(rows));
}

// Class-3 partitions with at most two parts in the first row, with weights
// for every d in 0..3.
struct Class3Case {
    Rows rows;
    std::array<std::string, 4> weight_by_d;
};

const std::vector<Class3Case> kTable23{
    {{}, {"1", "1", "1", "1"}},
    {{{4}}, {"1*R^1", "1*R^1", "1*R^1", "1*R^1"}},
    {{{5, 5}}, {"1*R^1", "1*R^1", "1*R^1", "1*R^1"}},
    {{{5, 4}}, {"1*Q^1*R^1", "1*Q^1*R^1", "1*Q^1*R^1", "1*R^1*S^1"}},
    {{{5, 3}}, {"1*Q^1*R^1", "1*Q^1*R^1", "1*R^1*S^1", "1*Q^1*R^1"}},
    {{{5, 2}}, {"1*Q^1*R^1", "1*R^1*S^1", "1*Q^1*R^1", "1*Q^1*R^1"}},
    {{{5, 1}},
     {"1*R^1*S^1 + 1*R^1*T^1 + -1*Q^1*R^1", "1*R^1*T^1", "1*R^1*T^1", "1*R^1*T^1"}},
    {{{5, 5}, {4}}, {"1*R^2", "1*R^2", "1*R^2", "1*R^2"}},
};

// Class-0 partitions with at most three parts in the first row and their
// d = 0 weights.
const std::vector<std::pair<Rows, std::string>> kTable30{
    {{}, "1"},
    {{{1}}, "1*R^1"},
    {{{2, 2}}, "1*R^1"},
    {{{2, 1}}, "1*R^1*S^1 + 1*R^1*T^1 + -1*Q^1*R^1"},
    {{{3, 3, 3}}, "1*R^1"},
    {{{3, 3, 2}}, "1*R^1*S^1"},
    {{{3, 3, 1}}, "1*R^1*T^1"},
    {{{3, 2, 2}}, "1*R^1*S^1"},
    {{{3, 2, 1}}, "1*R^1*T^1"},
    {{{3, 1, 1}}, "1*R^1*S^1*T^1 + 1*R^1*T^2 + -1*Q^1*R^1*T^1"},
    {{{2, 2}, {1}}, "1*R^2"},
    {{{3, 3, 3}, {1}}, "1*R^2"},
    {{{3, 3, 3}, {2, 2}}, "1*R^2"},
    {{{3, 3, 3}, {2, 1}}, "1*R^2*S^1 + 1*R^2*T^1 + -1*Q^1*R^2"},
    {{{3, 3, 2}, {1}}, "1*R^2*S^1"},
    {{{3, 3, 2}, {2, 1}}, "1*R^2*S^2 + 1*R^2*S^1*T^1 + -1*Q^1*R^2*S^1"},
    {{{3, 3, 1}, {1}}, "1*R^2*T^1"},
    {{{3, 2, 2}, {1}}, "1*R^2*S^1"},
    {{{3, 2, 1}, {1}}, "1*R^2*T^1"},
    {{{3, 3, 3}, {2, 2}, {1}}, "1*R^3"},
};

std::vector<int> shape_of(const Rows& rows) {
    std::vector<int> shape;
    for (const auto& r : rows) shape.push_back(static_cast<int>(r.size()));
    return shape;
}

const char* kZ = "1 + 2*Q^1*R^1 + 2*R^1 + 1*R^1*S^1 + 1*R^1*T^1 + 1*R^2";

}  // namespace

TEST_CASE("csspp validation") {
    // shape (5,3,2), class 4
    CHECK_NOTHROW(make({5, 3, 2}, 4, {{9, 8, 8, 7, 3}, {7, 7, 5}, {6, 1}}));
    CHECK_NOTHROW(make({}, 7, {}));
    CHECK_THROWS_WITH(make({1}, 3, {{5}}), Catch::Matchers::ContainsSubstring("class violation"));
    CHECK_THROWS_WITH(make({2}, 3, {{5, 6}}),
                      Catch::Matchers::ContainsSubstring("weakly decrease"));
    CHECK_THROWS_WITH(make({2, 1}, 3, {{5, 4}, {4}}),
                      Catch::Matchers::ContainsSubstring("strictly decrease"));
    CHECK_THROWS_WITH(make({2}, 3, {{5}}), Catch::Matchers::ContainsSubstring("shape mismatch"));
    CHECK_THROWS_WITH(make({1, 1}, 0, {{1}, {1}}),
                      Catch::Matchers::ContainsSubstring("shape must strictly decrease"));
}

TEST_CASE("reference object statistics for class 4 at d = 3") {
    Csspp p = make({5, 3, 2}, 4, {{9, 8, 8, 7, 3}, {7, 7, 5}, {6, 1}});
    CssppStats st = csspp_statistics(p, 3);
    CHECK(st.q == 2);
    CHECK(st.r == 3);
    CHECK(st.s == 1);
    CHECK(st.t == 1);
    CHECK(csspp_weight(p, 3) == poly("1*Q^2*R^3*S^1*T^1"));
    CHECK_THROWS_AS(csspp_statistics(p, 5), std::invalid_argument);
    CHECK_THROWS_AS(csspp_statistics(p, -1), std::invalid_argument);
}

TEST_CASE("class 3, first row at most 2: all eight objects and weights") {
    auto all = csspp_enumerate_all(2, 3);
    REQUIRE(all.size() == 8);
    std::set<Rows> expected, got;
    for (const auto& c : kTable23) expected.insert(c.rows);
    for (const auto& p : all) got.insert(p.rows());
    CHECK(expected == got);
    for (const auto& c : kTable23) {
        Csspp p = make(shape_of(c.rows), 3, c.rows);
        for (int d = 0; d <= 3; ++d)
            CHECK(csspp_weight(p, d) == poly(c.weight_by_d[static_cast<std::size_t>(d)]));
    }
    for (int d = 0; d <= 3; ++d) CHECK(csspp_genfunc(2, 3, d) == poly(kZ));
}

TEST_CASE("class 0, first row at most 3: all twenty objects and d=0 weights") {
    auto all = csspp_enumerate_all(3, 0);
    REQUIRE(all.size() == 20);
    std::set<Rows> expected, got;
    for (const auto& [rows, weight] : kTable30) expected.insert(rows);
    for (const auto& p : all) got.insert(p.rows());
    CHECK(expected == got);
    LaurentPolynomial sum = LaurentPolynomial::zero(Ring::qrst());
    for (const auto& [rows, weight] : kTable30) {
        Csspp p = make(shape_of(rows), 0, rows);
        auto w = csspp_weight(p, 0);
        CHECK(w == poly(weight));
        sum += w;
    }
    CHECK(sum == csspp_genfunc(3, 0, 0));
}

TEST_CASE("counts") {
    CHECK(csspp_count(2, 2) == 7);
    CHECK(csspp_count(2, 3) == 8);
    for (int k = 0; k <= 4; ++k) CHECK(csspp_count(1, k) == 2);
    CHECK(csspp_count(3, 0) == 20);
}

TEST_CASE("small generating functions") {
    for (int k = 0; k <= 3; ++k)
        for (int d = 0; d <= k; ++d)
            CHECK(csspp_genfunc(1, k, d) == poly("1 + 1*R^1"));
    CHECK_THROWS_AS(csspp_genfunc(2, 1, 2), std::invalid_argument);
}

TEST_CASE("first parts are never counted by q or s") {
    for (int n = 1; n <= 3; ++n)
        for (int k = 0; k <= 3; ++k)
            csspp_enumerate(n, k, [&](const Csspp& p) {
                for (int i = 0; i < p.num_rows(); ++i) {
                    int v = p.part(i, 0);
                    CHECK(v > k);  // first part k + shape[i] exceeds the o = 0 counting range
                }
            });
}

TEST_CASE("count equals the all-ones specialization") {
    for (int n = 1; n <= 3; ++n)
        for (int k = 0; k <= 3; ++k)
            CHECK(csspp_genfunc(n, k, 0).evaluate({1, 1, 1, 1}) == BigRational(csspp_count(n, k)));
}

TEST_CASE("d-independence of the generating function at small scale") {
    for (int n = 1; n <= 3; ++n)
        for (int k = 1; k <= 3; ++k) {
            auto base = csspp_genfunc(n, k, 0);
            for (int d = 1; d <= k; ++d) CHECK(csspp_genfunc(n, k, d) == base);
        }
}

TEST_CASE("csspp enumeration is deterministic") {
    auto first = csspp_enumerate_all(3, 2);
    auto second = csspp_enumerate_all(3, 2);
    REQUIRE(first.size() == second.size());
    for (std::size_t i = 0; i < first.size(); ++i) CHECK(first[i] == second[i]);
}

TEST_CASE("csspp json round trip") {
    Csspp p = make({5, 3, 2}, 4, {{9, 8, 8, 7, 3}, {7, 7, 5}, {6, 1}});
    auto j = p.to_json();
    CHECK(j["class"] == 4);
    CHECK(j["shape"] == nlohmann::json(std::vector<int>{5, 3, 2}));
    CHECK(Csspp::from_json(j) == p);
    CHECK(Csspp::from_json(make({}, 2, {}).to_json()).empty());
}
