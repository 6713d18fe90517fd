#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sumset/bigint.hpp"

namespace sumset {

/// One summand binom(top, index) of an h-binomial representation.
struct BinomialPart {
    BigInt top;
    int index = 0;

    bool operator==(const BinomialPart&) const = default;
};

/// The unique expansion a = sum_j binom(a_j, j), j = h down to 1, with
/// strictly decreasing tops a_h > a_{h-1} > ... > a_1 >= 0.
struct BinomialRep {
    int h = 0;
    std::vector<BinomialPart> parts;  // ordered by descending index

    bool operator==(const BinomialRep&) const = default;
};

/// binom(n, k), exact; 0 when k > n. Both arguments must be nonnegative.
BigInt binom(const BigInt& n, const BigInt& k);

/// Greedy h-binomial representation of a >= 1.
BinomialRep h_binomial_rep(const BigInt& a, int h);

/// Sum of the parts; inverse of h_binomial_rep.
BigInt rep_value(const BinomialRep& rep);

/// The Macaulay operator a^<h>: shift every part (a_j, j) to (a_j+1, j+1)
/// and sum. By convention 0^<h> = 0.
BigInt macaulay_upper(const BigInt& a, int h);

/// Least a >= 1 with macaulay_upper(a, h) >= target. Requires target >= 1.
BigInt macaulay_lower_inverse(const BigInt& target, int h);

/// floor(d^(h/i)) for 1 <= i <= h: the largest m with m^i <= d^h.
BigInt plunnecke_upper(const BigInt& d, int i, int h);

/// Dual search for 1 <= h < i: least a with a^(i/h) >= d, i.e. a^i >= d^h.
BigInt plunnecke_lower(const BigInt& d, int i, int h);

/// A finite prefix (d_0, d_1, ..., d_D) of a growth sequence.
struct BoundSequence {
    std::vector<BigInt> values;

    int max_index() const { return static_cast<int>(values.size()) - 1; }
    bool operator==(const BoundSequence&) const = default;
};

/// Parses comma-separated decimal integers ("1,5,13").
BoundSequence parse_sequence(const std::string& text);

std::string to_string(const BoundSequence& seq);

struct ValidationReport {
    bool valid = false;
    // On failure: position of the offending entry d_{i+1}, its value (lhs)
    // and the bound macaulay_upper(d_i, i) it exceeds (rhs). For a bad
    // leading entry the index is 0 and rhs is 1.
    std::optional<int> violation_index;
    BigInt lhs;
    BigInt rhs;
    bool all_positive = false;
    bool monotone = false;            // |hA| <= |(h+1)A| holds in groups
    bool zero_tail_consistent = false;  // once zero, stays zero
};

/// Checks d_0 = 1 and d_{i+1} <= d_i^<i> for all 1 <= i < D.
ValidationReport validate_sequence(const BoundSequence& seq);

}  // namespace sumset
