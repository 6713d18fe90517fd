#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sumset/groebner.hpp"
#include "sumset/lexideal.hpp"
#include "sumset/macaulay.hpp"

namespace sumset {

/// The sequence (|A^0|, |A^1|, ..., |A^D|) produced by a simulator.
struct PowerSeries {
    std::vector<BigInt> sizes;

    int max_degree() const { return static_cast<int>(sizes.size()) - 1; }
    bool operator==(const PowerSeries&) const = default;
};

/// Iterated product sets of A = {x_1, ..., x_n} in the monomial quotient:
/// classes of monomials outside the ideal plus an absorbing zero wherever
/// a degree slice meets the ideal. Computed both by formula and by direct
/// set products; the two must agree.
PowerSeries monomial_quotient_powers(const LexIdeal& ideal);

/// Iterated product sets of A = {x_1, ..., x_n} in the binomial quotient,
/// frontier-style: A^{h+1} is the set of normal forms of A^h * A. Requires
/// a certified basis; when the basis leads generate exactly the ideal the
/// sizes are checked against the Hilbert function.
PowerSeries binomial_quotient_powers(const BinomialBasis& basis, const LexIdeal& ideal);

/// A point of N^m (or of Z for m = 1); componentwise addition.
using AdditivePoint = std::vector<long long>;

/// Iterated sumsets of a finite nonempty point set, by pairwise addition
/// and deduplication. Coordinates may be negative; they are translated to
/// the nonnegative range internally (cardinalities are unaffected).
PowerSeries naive_sumset_powers(const std::vector<AdditivePoint>& points, int max_degree);

/// One tested subset A of hB with both sumset sizes.
struct AdditiveSample {
    std::vector<std::string> subset;  // monomial names of the chosen points
    std::uint64_t sum_size = 0;       // |A + B|
    std::uint64_t lex_sum_size = 0;   // |A^lex + B|
};

struct AdditiveCheckReport {
    int nvars = 0;
    int degree = 0;
    bool exhaustive = true;
    std::uint64_t seed = 0;  // meaningful for sampled runs only
    std::uint64_t subsets_tested = 0;
    std::vector<AdditiveSample> violations;      // expected empty
    std::optional<AdditiveSample> tightest;      // smallest observed gap
};

/// Checks |A+B| >= |A^lex + B| for every nonempty A inside hB, where
/// B = {e_1, ..., e_n}. Exhaustive mode is capped at |hB| <= 24.
AdditiveCheckReport additive_macaulay_check_exhaustive(int n, int h);
AdditiveCheckReport additive_macaulay_check_sampled(int n, int h, std::uint64_t samples,
                                                    std::uint64_t seed);

struct BoundRow {
    int h = 0;
    BigInt size;             // |hA|
    BigInt next;             // |(h+1)A|
    BigInt macaulay_bound;   // size^<h>
    BigInt plunnecke_bound;  // floor(size^((h+1)/h))
    bool holds = false;      // next <= macaulay_bound
};

struct BoundReport {
    std::vector<BoundRow> rows;
    bool starts_at_one = false;
    bool all_hold = false;
};

/// Verifies the Macaulay inequality on each consecutive pair and
/// tabulates the Plünnecke bound alongside for comparison.
BoundReport bound_report(const PowerSeries& series);

}  // namespace sumset
