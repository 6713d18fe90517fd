#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>
#include <vector>

#include "sumset/semigroup.hpp"
#include "testutil.hpp"

using namespace sumset;

namespace {

const LexIdeal& worked_example() {
    static const LexIdeal ideal = build_lexideal(parse_sequence("1,5,13,25,42,63"));
    return ideal;
}

const BinomialBasis& worked_basis() {
    static const BinomialBasis basis = [] {
        BinomialBasis b = deform(worked_example());
        REQUIRE(certify(b).pass);
        return b;
    }();
    return basis;
}

std::vector<BigInt> values(std::initializer_list<int> xs) {
    std::vector<BigInt> out;
    for (int x : xs) out.emplace_back(x);
    return out;
}

}  // namespace

TEST_CASE("monomial quotient sizes for the worked example") {
    const auto series = monomial_quotient_powers(worked_example());
    CHECK(series.sizes == values({1, 5, 14, 26, 43, 64}));
    // degree 1 has an empty ideal slice, so the size is exactly d_1
    CHECK(series.sizes[1] == 5);
}

TEST_CASE("monomial quotient of the zero ideal is the free monoid") {
    const auto L = build_lexideal(parse_sequence("1,3,6,10"));  // full slices survive
    const auto series = monomial_quotient_powers(L);
    CHECK(series.sizes == values({1, 3, 6, 10}));
}

TEST_CASE("binomial quotient reproduces the sequence exactly") {
    const auto series = binomial_quotient_powers(worked_basis(), worked_example());
    CHECK(series.sizes == values({1, 5, 13, 25, 42, 63}));
}

TEST_CASE("binomial quotient with an empty basis is free") {
    const auto L = build_lexideal(parse_sequence("1,3,6,10"));
    BinomialBasis empty;
    REQUIRE(certify(empty).pass);
    const auto series = binomial_quotient_powers(empty, L);
    CHECK(series.sizes == values({1, 3, 6, 10}));
}

TEST_CASE("binomial quotient requires certification") {
    BinomialBasis uncertified = deform(worked_example());
    CHECK_THROWS_AS(binomial_quotient_powers(uncertified, worked_example()),
                    std::invalid_argument);
}

TEST_CASE("binomial quotient with foreign leads skips the hilbert cross-check") {
    // certified basis whose leading ideal is not the given ideal: sizes are
    // still computed, just not compared against the Hilbert function
    const auto L = build_lexideal(parse_sequence("1,3,1,1"));
    BinomialBasis basis;
    basis.elements = {
        make_diff(parse_monomial("x1*x2", 3), parse_monomial("x2*x3", 3)),
        make_diff(parse_monomial("x2*x3", 3), parse_monomial("x3^2", 3))};
    const auto completed = buchberger_complete(basis);
    REQUIRE(!leading_ideal_matches(completed, L));
    const auto series = binomial_quotient_powers(completed, L);
    CHECK(series.sizes.size() == 4);
    CHECK(series.sizes[2] == 4);  // {x1^2, x1*x3, x2^2, x3^2}
}

TEST_CASE("sharp and almost-sharp realization on random admissible sequences") {
    std::mt19937_64 rng(20260811);
    for (int trial = 0; trial < 30; ++trial) {
        const auto seq = testutil::sample_admissible_sequence(rng, 5, 5);
        const auto L = build_lexideal(seq);
        BinomialBasis basis = deform(L);
        REQUIRE(certify(basis).pass);
        const auto sharp = binomial_quotient_powers(basis, L);
        REQUIRE(sharp.sizes == seq.values);

        const auto almost = monomial_quotient_powers(L);
        for (int h = 0; h <= L.degree_cap; ++h) {
            const auto& d = seq.values[static_cast<std::size_t>(h)];
            const auto& got = almost.sizes[static_cast<std::size_t>(h)];
            REQUIRE(got >= d);
            REQUIRE(got <= d + 1);
        }
    }
}

TEST_CASE("sharp realization of larger fixed sequences") {
    // maximal chain (zero ideal), a near-maximal drop, a collapse to one,
    // and a wide n = 8 instance
    for (const char* text :
         {"1,5,15,35,70,126", "1,5,15,34,60,98", "1,5,1,1,1,1", "1,8,30,87,200,419"}) {
        const auto seq = parse_sequence(text);
        const auto L = build_lexideal(seq);
        BinomialBasis basis = deform(L);
        REQUIRE(certify(basis).pass);
        REQUIRE(binomial_quotient_powers(basis, L).sizes == seq.values);
    }
}

TEST_CASE("naive sumsets in Z") {
    const auto series = naive_sumset_powers({{0}, {1}, {3}}, 2);
    CHECK(series.sizes == values({1, 3, 6}));

    const auto singleton = naive_sumset_powers({{7}}, 4);
    CHECK(singleton.sizes == values({1, 1, 1, 1, 1}));

    // negative coordinates are translated away without changing counts
    const auto shifted = naive_sumset_powers({{-5}, {-4}, {-2}}, 2);
    CHECK(shifted.sizes == series.sizes);

    CHECK_THROWS_AS(naive_sumset_powers({}, 3), std::invalid_argument);
}

TEST_CASE("naive sumsets of the standard basis fill the degree slices") {
    for (int n = 1; n <= 4; ++n) {
        std::vector<AdditivePoint> basis;
        for (int j = 0; j < n; ++j) {
            AdditivePoint e(static_cast<std::size_t>(n), 0);
            e[static_cast<std::size_t>(j)] = 1;
            basis.push_back(std::move(e));
        }
        const auto series = naive_sumset_powers(basis, 5);
        for (int h = 0; h <= 5; ++h)
            CHECK(series.sizes[static_cast<std::size_t>(h)] == degree_count(n, h));
    }
}

TEST_CASE("additive macaulay check, worked subset") {
    // A = {(2,0), (0,2)} inside 2B for n = 2
    std::set<AdditivePoint> sums;
    for (const AdditivePoint& a : {AdditivePoint{2, 0}, AdditivePoint{0, 2}})
        for (std::size_t j = 0; j < 2; ++j) {
            AdditivePoint s(a);
            s[j] += 1;
            sums.insert(s);
        }
    CHECK(sums.size() == 4);
    const auto compressed =
        lex_compress({parse_monomial("x1^2", 2), parse_monomial("x2^2", 2)});
    std::set<AdditivePoint> lex_sums;
    for (const auto& m : compressed.materialize())
        for (std::size_t j = 0; j < 2; ++j) {
            AdditivePoint s{m.exponents()[0], m.exponents()[1]};
            s[j] += 1;
            lex_sums.insert(s);
        }
    CHECK(lex_sums.size() == 3);
}

TEST_CASE("additive macaulay check, exhaustive small cases") {
    for (int h = 1; h <= 4; ++h) {
        const auto report = additive_macaulay_check_exhaustive(2, h);
        CHECK(report.subsets_tested == (std::uint64_t{1} << (h + 1)) - 1);
        CHECK(report.violations.empty());
    }
    const auto r32 = additive_macaulay_check_exhaustive(3, 2);
    CHECK(r32.subsets_tested == 63);
    CHECK(r32.violations.empty());
    REQUIRE(r32.tightest.has_value());
    CHECK(r32.tightest->sum_size >= r32.tightest->lex_sum_size);

    // the full slice compresses to itself: equality
    const auto full = additive_macaulay_check_exhaustive(1, 3);
    CHECK(full.tightest->sum_size == full.tightest->lex_sum_size);

    CHECK_THROWS_AS(additive_macaulay_check_exhaustive(5, 4), std::invalid_argument);
}

TEST_CASE("additive macaulay check, sampling is seeded and reproducible") {
    const auto a = additive_macaulay_check_sampled(3, 3, 200, 12345);
    const auto b = additive_macaulay_check_sampled(3, 3, 200, 12345);
    CHECK(a.subsets_tested == 200);
    CHECK(a.violations.empty());
    REQUIRE(a.tightest.has_value());
    REQUIRE(b.tightest.has_value());
    CHECK(a.tightest->subset == b.tightest->subset);
}

TEST_CASE("bound report") {
    PowerSeries almost;
    almost.sizes = values({1, 5, 14, 26, 43, 64});
    const auto report = bound_report(almost);
    CHECK(report.starts_at_one);
    CHECK(report.all_hold);
    REQUIRE(report.rows.size() == 4);
    CHECK(report.rows[0].macaulay_bound == 15);
    CHECK(report.rows[0].plunnecke_bound == 25);  // floor(5^2)

    PowerSeries ones;
    ones.sizes = values({1, 1, 1, 1});
    const auto constant = bound_report(ones);
    CHECK(constant.all_hold);
    for (const auto& row : constant.rows) CHECK(row.macaulay_bound == 1);

    PowerSeries bogus;
    bogus.sizes = values({1, 2, 4});
    CHECK(!bound_report(bogus).all_hold);
}

TEST_CASE("random integer sets satisfy the growth bound") {
    std::mt19937_64 rng(77);
    std::uniform_int_distribution<int> size(1, 6);
    std::uniform_int_distribution<long long> value(0, 20);
    for (int trial = 0; trial < 50; ++trial) {
        std::set<AdditivePoint> chosen;
        const int k = size(rng);
        while (static_cast<int>(chosen.size()) < k) chosen.insert({value(rng)});
        const std::vector<AdditivePoint> points(chosen.begin(), chosen.end());
        const auto series = naive_sumset_powers(points, 5);
        CHECK(bound_report(series).all_hold);
    }
}
