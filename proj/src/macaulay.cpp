#include "sumset/macaulay.hpp"

#include <cassert>
#include <sstream>
#include <stdexcept>

namespace sumset {

BigInt binom(const BigInt& n, const BigInt& k) {
    if (n < 0 || k < 0) throw std::invalid_argument("binom: negative argument");
    if (k > n) return 0;
    const BigInt m = k < n - k ? k : n - k;  // loop count, symmetric side
    const std::size_t steps = to_index(m);
    BigInt r = 1;
    for (std::size_t i = 1; i <= steps; ++i) {
        r *= n - BigInt(m) + i;
        r /= i;  // exact at every step
    }
    return r;
}

namespace {

// Largest t with binom(t, j) <= bound, for bound >= 0 and j >= 1.
BigInt largest_binomial_top(const BigInt& bound, int j) {
    if (bound == 0) return j - 1;  // binom(j-1, j) = 0
    BigInt lo = j - 1;
    BigInt hi = j;
    while (binom(hi, j) <= bound) {
        lo = hi;
        hi <<= 1;
    }
    // invariant: binom(lo, j) <= bound < binom(hi, j)
    while (hi - lo > 1) {
        BigInt mid = (lo + hi) >> 1;
        if (binom(mid, j) <= bound)
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

}  // namespace

BinomialRep h_binomial_rep(const BigInt& a, int h) {
    if (a < 1) throw std::invalid_argument("h_binomial_rep: a must be >= 1");
    if (h < 1) throw std::invalid_argument("h_binomial_rep: h must be >= 1");

    BinomialRep rep;
    rep.h = h;
    rep.parts.reserve(static_cast<std::size_t>(h));
    BigInt rem = a;
    for (int j = h; j >= 1; --j) {
        BigInt top = largest_binomial_top(rem, j);
        if (!rep.parts.empty())
            assert(top < rep.parts.back().top);
        rem -= binom(top, BigInt(j));
        rep.parts.push_back({top, j});
    }
    assert(rem == 0);
    return rep;
}

BigInt rep_value(const BinomialRep& rep) {
    BigInt sum = 0;
    for (const auto& part : rep.parts) sum += binom(part.top, BigInt(part.index));
    return sum;
}

BigInt macaulay_upper(const BigInt& a, int h) {
    if (a < 0) throw std::invalid_argument("macaulay_upper: a must be >= 0");
    if (h < 1) throw std::invalid_argument("macaulay_upper: h must be >= 1");
    if (a == 0) return 0;
    BigInt sum = 0;
    for (const auto& part : h_binomial_rep(a, h).parts)
        sum += binom(part.top + 1, BigInt(part.index + 1));
    return sum;
}

BigInt macaulay_lower_inverse(const BigInt& target, int h) {
    if (target < 1)
        throw std::invalid_argument("macaulay_lower_inverse: target must be >= 1");
    if (h < 1) throw std::invalid_argument("macaulay_lower_inverse: h must be >= 1");
    // macaulay_upper(a, h) >= a, so the answer lies in [1, target]
    BigInt lo = 1, hi = target;
    while (lo < hi) {
        BigInt mid = (lo + hi) >> 1;
        if (macaulay_upper(mid, h) >= target)
            hi = mid;
        else
            lo = mid + 1;
    }
    return lo;
}

BigInt plunnecke_upper(const BigInt& d, int i, int h) {
    if (d < 0) throw std::invalid_argument("plunnecke_upper: d must be >= 0");
    if (i < 1 || i > h) throw std::invalid_argument("plunnecke_upper: need 1 <= i <= h");
    if (d == 0) return 0;
    return iroot_floor(ipow(d, h), i);
}

BigInt plunnecke_lower(const BigInt& d, int i, int h) {
    if (d < 1) throw std::invalid_argument("plunnecke_lower: d must be >= 1");
    if (h < 1 || h >= i) throw std::invalid_argument("plunnecke_lower: need 1 <= h < i");
    // least a with a^i >= d^h; a = d works since i > h
    const BigInt power = ipow(d, h);
    BigInt lo = 1, hi = d;
    while (lo < hi) {
        BigInt mid = (lo + hi) >> 1;
        if (ipow(mid, i) >= power)
            hi = mid;
        else
            lo = mid + 1;
    }
    return lo;
}

BoundSequence parse_sequence(const std::string& text) {
    BoundSequence seq;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) {
        const auto first = item.find_first_not_of(" \t");
        if (first == std::string::npos)
            throw std::invalid_argument("empty entry in sequence '" + text + "'");
        const auto last = item.find_last_not_of(" \t");
        BigInt value = parse_bigint(item.substr(first, last - first + 1));
        if (value < 0)
            throw std::invalid_argument("sequence entries must be nonnegative");
        seq.values.push_back(std::move(value));
    }
    if (seq.values.empty())
        throw std::invalid_argument("empty sequence");
    return seq;
}

std::string to_string(const BoundSequence& seq) {
    std::string out;
    for (std::size_t i = 0; i < seq.values.size(); ++i) {
        if (i > 0) out += ',';
        out += seq.values[i].str();
    }
    return out;
}

ValidationReport validate_sequence(const BoundSequence& seq) {
    if (seq.values.empty()) throw std::invalid_argument("empty sequence");

    ValidationReport report;
    report.all_positive = true;
    report.monotone = true;
    report.zero_tail_consistent = true;

    bool seen_zero = false;
    for (std::size_t i = 0; i < seq.values.size(); ++i) {
        const BigInt& v = seq.values[i];
        if (v < 0) throw std::invalid_argument("sequence entries must be nonnegative");
        if (v < 1) report.all_positive = false;
        if (v == 0) seen_zero = true;
        if (seen_zero && v != 0) report.zero_tail_consistent = false;
        if (i > 0 && v < seq.values[i - 1]) report.monotone = false;
    }

    if (seq.values[0] != 1) {
        report.violation_index = 0;
        report.lhs = seq.values[0];
        report.rhs = 1;
        return report;
    }
    for (int i = 1; i < seq.max_index(); ++i) {
        const BigInt bound = macaulay_upper(seq.values[static_cast<std::size_t>(i)], i);
        const BigInt& next = seq.values[static_cast<std::size_t>(i) + 1];
        if (next > bound) {
            report.violation_index = i + 1;
            report.lhs = next;
            report.rhs = bound;
            return report;
        }
    }
    report.valid = true;
    return report;
}

}  // namespace sumset
