#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "sumset/macaulay.hpp"
#include "sumset/monomial.hpp"

using namespace sumset;

namespace {

Monomial mono(std::string_view text, int n) { return parse_monomial(text, n); }

// brute-force shadow: multiply every segment element by every variable
std::vector<Monomial> shadow_by_products(const std::vector<Monomial>& segment, int n) {
    std::vector<Monomial> out;
    for (const auto& u : segment)
        for (int j = 1; j <= n; ++j) out.push_back(mul(u, Monomial::variable(n, j)));
    std::sort(out.begin(), out.end(), grlex_greater);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace

TEST_CASE("graded lexicographic comparison") {
    CHECK(grlex_compare(mono("x1^2", 3), mono("x1*x2", 3)) == std::strong_ordering::greater);
    CHECK(grlex_compare(mono("x2*x3", 3), mono("x3^2", 3)) == std::strong_ordering::greater);
    CHECK(grlex_compare(mono("x2^2", 3), mono("x1*x3", 3)) == std::strong_ordering::less);
    CHECK(grlex_compare(mono("x3^2", 3), mono("x1", 3)) == std::strong_ordering::greater);
    const Monomial u = mono("x1*x2^4", 4);
    CHECK(grlex_compare(u, u) == std::strong_ordering::equal);
    CHECK_THROWS_AS(grlex_compare(mono("x1", 2), mono("x1", 3)), std::invalid_argument);
}

TEST_CASE("comparison is a total order on random triples") {
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<int> exp(0, 3);
    auto random_monomial = [&] {
        std::vector<int> exps(4);
        for (auto& e : exps) e = exp(rng);
        return Monomial(std::move(exps));
    };
    for (int trial = 0; trial < 500; ++trial) {
        const Monomial a = random_monomial(), b = random_monomial(), c = random_monomial();
        // totality and antisymmetry
        CHECK(((grlex_less(a, b) ? 1 : 0) + (grlex_greater(a, b) ? 1 : 0) +
               (a == b ? 1 : 0)) == 1);
        // transitivity
        if (!grlex_greater(a, b) && !grlex_greater(b, c)) CHECK(!grlex_greater(a, c));
    }
}

TEST_CASE("degree slice enumeration") {
    const auto m2 = enumerate_degree(3, 2);
    const std::vector<Monomial> expected{mono("x1^2", 3), mono("x1*x2", 3), mono("x1*x3", 3),
                                         mono("x2^2", 3), mono("x2*x3", 3), mono("x3^2", 3)};
    CHECK(m2 == expected);
    CHECK(enumerate_degree(4, 0) == std::vector<Monomial>{Monomial::one(4)});
    CHECK(enumerate_degree(5, 2).size() == 15);

    for (int n = 1; n <= 5; ++n) {
        for (int d = 0; d <= 5; ++d) {
            const auto slice = enumerate_degree(n, d);
            CHECK(BigInt(slice.size()) == degree_count(n, d));
            for (std::size_t k = 1; k < slice.size(); ++k)
                REQUIRE(grlex_greater(slice[k - 1], slice[k]));
        }
    }
}

TEST_CASE("min and max variable index") {
    const Monomial u = mono("x2^4*x3*x5^3", 5);
    CHECK(min_index(u) == 2);
    CHECK(max_index(u) == 5);
    CHECK(min_index(mono("x1", 1)) == 1);
    CHECK(max_index(mono("x1", 1)) == 1);
    CHECK(min_index(mono("x3*x4^3*x5", 5)) == 3);
    CHECK(max_index(mono("x3*x4^3*x5", 5)) == 5);
    CHECK_THROWS_AS(min_index(Monomial::one(3)), std::invalid_argument);
    CHECK_THROWS_AS(max_index(Monomial::one(3)), std::invalid_argument);
}

TEST_CASE("componentwise operations") {
    CHECK(gcd_mono(mono("x1^2*x3", 3), mono("x1*x2", 3)) == mono("x1", 3));
    CHECK(lcm_mono(mono("x1*x2", 3), mono("x2*x3", 3)) == mono("x1*x2*x3", 3));
    const Monomial u = mono("x2*x4^2", 4);
    CHECK(mul(u, Monomial::one(4)) == u);
    CHECK(divides(mono("x1*x3", 3), mono("x1^2*x2*x3", 3)));
    CHECK(!divides(mono("x1^2", 3), mono("x1*x2^4", 3)));
    CHECK(quotient(mono("x1^2*x2*x3", 3), mono("x1*x3", 3)) == mono("x1*x2", 3));
    CHECK_THROWS_AS(quotient(mono("x1", 3), mono("x2", 3)), std::invalid_argument);
}

TEST_CASE("rank and unrank agree with enumeration") {
    for (int n = 1; n <= 5; ++n) {
        for (int d = 1; d <= 5; ++d) {
            const auto slice = enumerate_degree(n, d);
            for (std::size_t k = 0; k < slice.size(); ++k) {
                REQUIRE(grlex_rank(slice[k]) == k);
                REQUIRE(grlex_unrank(n, d, BigInt(k)) == slice[k]);
            }
        }
    }
    CHECK_THROWS_AS(grlex_unrank(3, 2, 6), std::invalid_argument);
}

TEST_CASE("text format round trip") {
    CHECK(to_string(mono("x1^2*x3", 3)) == "x1^2*x3");
    CHECK(to_string(Monomial::one(4)) == "1");
    CHECK(parse_monomial("1", 4) == Monomial::one(4));
    CHECK_THROWS_AS(parse_monomial("y2", 3), std::invalid_argument);
    CHECK_THROWS_AS(parse_monomial("x7", 3), std::invalid_argument);

    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> exp(0, 4);
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<int> exps(5);
        for (auto& e : exps) e = exp(rng);
        const Monomial u(exps);
        CHECK(parse_monomial(to_string(u), 5) == u);
    }
}

TEST_CASE("lexsegment take and membership") {
    const auto seg = lexsegment_take(3, 2, 2);
    CHECK(seg.materialize() == std::vector<Monomial>{mono("x1^2", 3), mono("x1*x2", 3)});
    CHECK(seg.contains(mono("x1*x2", 3)));
    CHECK(!seg.contains(mono("x1*x3", 3)));
    CHECK_THROWS_AS(lexsegment_take(3, 2, 7), std::invalid_argument);
    CHECK_THROWS_AS(seg.contains(mono("x1", 3)), std::invalid_argument);
}

TEST_CASE("shadow of the worked segment") {
    const auto seg = lexsegment_take(3, 2, 2);  // {x1^2, x1*x2}
    const auto sh = shadow(seg);
    CHECK(sh.degree() == 3);
    CHECK(sh.size() == 5);
    const std::vector<Monomial> expected{mono("x1^3", 3), mono("x1^2*x2", 3),
                                         mono("x1^2*x3", 3), mono("x1*x2^2", 3),
                                         mono("x1*x2*x3", 3)};
    CHECK(sh.materialize() == expected);
    CHECK(sh.materialize() == shadow_by_products(seg.materialize(), 3));
    // complement sizes: |M_2 \ C| = 4 gives |M_3 \ M_1 C| = 4^<2> = 5
    CHECK(macaulay_upper(4, 2) == 5);
    CHECK(sh.complement_size() == 5);

    const auto full = lexsegment_take(4, 3, degree_count(4, 3));
    CHECK(shadow(full).size() == degree_count(4, 4));
}

TEST_CASE("shadow matches brute-force products for all small segments") {
    for (int n = 1; n <= 4; ++n) {
        for (int i = 1; i <= 4; ++i) {
            const std::size_t total = to_index(degree_count(n, i));
            for (std::size_t c = 0; c <= total; ++c) {
                const auto seg = lexsegment_take(n, i, BigInt(c));
                const auto brute = shadow_by_products(seg.materialize(), n);
                const auto sh = shadow(seg);
                REQUIRE(sh.size() == brute.size());
                REQUIRE(sh.materialize() == brute);  // the product set is a lexsegment
                REQUIRE(degree_count(n, i + 1) - BigInt(brute.size()) ==
                        macaulay_upper(degree_count(n, i) - c, i));
            }
        }
    }
}

TEST_CASE("lex compression") {
    const auto seg = lex_compress({mono("x1^2", 3), mono("x3^2", 3)});
    CHECK(seg.materialize() == std::vector<Monomial>{mono("x1^2", 3), mono("x1*x2", 3)});

    const auto already = lexsegment_take(4, 2, 3).materialize();
    CHECK(lex_compress(already).materialize() == already);

    const auto full = enumerate_degree(3, 3);
    CHECK(lex_compress(full).materialize() == full);

    CHECK_THROWS_AS(lex_compress({mono("x1", 3), mono("x1^2", 3)}), std::invalid_argument);
    CHECK_THROWS_AS(lex_compress({}), std::invalid_argument);
}
