#include "sumset/semigroup.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace sumset {

PowerSeries monomial_quotient_powers(const LexIdeal& ideal) {
    const int n = ideal.nvars;
    PowerSeries series;
    series.sizes.reserve(static_cast<std::size_t>(ideal.degree_cap) + 1);
    series.sizes.push_back(1);

    std::vector<Monomial> frontier{Monomial::one(n)};
    bool has_zero = false;
    for (int h = 1; h <= ideal.degree_cap; ++h) {
        std::unordered_set<std::string> seen;
        std::vector<Monomial> next;
        bool next_zero = has_zero;  // zero absorbs every product
        for (const auto& m : frontier) {
            for (int j = 1; j <= n; ++j) {
                Monomial p = mul(m, Monomial::variable(n, j));
                if (membership(p, ideal)) {
                    next_zero = true;
                } else if (seen.insert(to_string(p)).second) {
                    next.push_back(std::move(p));
                }
            }
        }
        frontier = std::move(next);
        has_zero = next_zero;

        const bool slice_meets_ideal =
            ideal.segment_sizes[static_cast<std::size_t>(h)] > 0;
        const BigInt by_formula = hilbert_function(ideal, h) + (slice_meets_ideal ? 1 : 0);
        const BigInt by_products = BigInt(frontier.size()) + (has_zero ? 1 : 0);
        if (by_formula != by_products)
            throw std::logic_error("monomial quotient: formula and simulation disagree");
        series.sizes.push_back(by_formula);
    }
    return series;
}

PowerSeries binomial_quotient_powers(const BinomialBasis& basis, const LexIdeal& ideal) {
    if (!basis.certified)
        throw std::invalid_argument("binomial_quotient_powers requires a certified basis");
    const int n = ideal.nvars;
    const bool leads_match = leading_ideal_matches(basis, ideal);

    PowerSeries series;
    series.sizes.reserve(static_cast<std::size_t>(ideal.degree_cap) + 1);
    series.sizes.push_back(1);

    std::vector<Monomial> frontier{Monomial::one(n)};
    for (int h = 1; h <= ideal.degree_cap; ++h) {
        std::unordered_set<std::string> seen;
        std::vector<Monomial> next;
        for (const auto& m : frontier) {
            for (int j = 1; j <= n; ++j) {
                Monomial p = normal_form(mul(m, Monomial::variable(n, j)), basis);
                if (seen.insert(to_string(p)).second) next.push_back(std::move(p));
            }
        }
        frontier = std::move(next);
        series.sizes.push_back(BigInt(frontier.size()));
        if (leads_match && series.sizes.back() != hilbert_function(ideal, h))
            throw std::logic_error("binomial quotient: size disagrees with the Hilbert function");
    }
    return series;
}

PowerSeries naive_sumset_powers(const std::vector<AdditivePoint>& points, int max_degree) {
    if (points.empty()) throw std::invalid_argument("naive_sumset_powers: empty set");
    if (max_degree < 0) throw std::invalid_argument("naive_sumset_powers: negative degree");
    const std::size_t dim = points.front().size();
    if (dim == 0) throw std::invalid_argument("naive_sumset_powers: zero-dimensional points");
    for (const auto& p : points)
        if (p.size() != dim)
            throw std::invalid_argument("naive_sumset_powers: mixed dimensions");

    // translate to the nonnegative range; cardinalities are unaffected
    std::vector<AdditivePoint> translated(points.begin(), points.end());
    for (std::size_t c = 0; c < dim; ++c) {
        long long low = translated[0][c];
        for (const auto& p : translated) low = std::min(low, p[c]);
        for (auto& p : translated) p[c] -= low;
    }
    std::set<AdditivePoint> base(translated.begin(), translated.end());

    PowerSeries series;
    series.sizes.push_back(1);
    std::set<AdditivePoint> frontier{AdditivePoint(dim, 0)};
    for (int h = 1; h <= max_degree; ++h) {
        std::set<AdditivePoint> next;
        for (const auto& f : frontier) {
            for (const auto& p : base) {
                AdditivePoint sum(f);
                for (std::size_t c = 0; c < dim; ++c) sum[c] += p[c];
                next.insert(std::move(sum));
            }
        }
        frontier = std::move(next);
        series.sizes.push_back(BigInt(frontier.size()));
    }
    return series;
}

namespace {

AdditivePoint to_point(const Monomial& m) {
    AdditivePoint p;
    p.reserve(static_cast<std::size_t>(m.nvars()));
    for (int e : m.exponents()) p.push_back(e);
    return p;
}

// |A + B| for B = {e_1, ..., e_n}, by direct pointwise sums.
std::uint64_t sum_with_basis(const std::vector<Monomial>& subset, int n) {
    std::set<AdditivePoint> sums;
    for (const auto& m : subset) {
        AdditivePoint p = to_point(m);
        for (int j = 0; j < n; ++j) {
            AdditivePoint s(p);
            s[static_cast<std::size_t>(j)] += 1;
            sums.insert(std::move(s));
        }
    }
    return sums.size();
}

AdditiveSample measure_subset(const std::vector<Monomial>& subset, int n) {
    AdditiveSample sample;
    for (const auto& m : subset) sample.subset.push_back(to_string(m));
    sample.sum_size = sum_with_basis(subset, n);
    sample.lex_sum_size = sum_with_basis(lex_compress(subset).materialize(), n);
    return sample;
}

void record(AdditiveCheckReport& report, AdditiveSample sample) {
    ++report.subsets_tested;
    const auto gap = static_cast<long long>(sample.sum_size) -
                     static_cast<long long>(sample.lex_sum_size);
    if (gap < 0) report.violations.push_back(sample);
    if (!report.tightest ||
        gap < static_cast<long long>(report.tightest->sum_size) -
                  static_cast<long long>(report.tightest->lex_sum_size))
        report.tightest = std::move(sample);
}

}  // namespace

AdditiveCheckReport additive_macaulay_check_exhaustive(int n, int h) {
    const std::vector<Monomial> ambient = enumerate_degree(n, h);
    if (ambient.size() > 24)
        throw std::invalid_argument("exhaustive mode capped at |hB| <= 24");

    AdditiveCheckReport report;
    report.nvars = n;
    report.degree = h;
    report.exhaustive = true;
    const std::uint64_t total = std::uint64_t{1} << ambient.size();
    for (std::uint64_t mask = 1; mask < total; ++mask) {
        std::vector<Monomial> subset;
        for (std::size_t b = 0; b < ambient.size(); ++b)
            if (mask & (std::uint64_t{1} << b)) subset.push_back(ambient[b]);
        record(report, measure_subset(subset, n));
    }
    return report;
}

AdditiveCheckReport additive_macaulay_check_sampled(int n, int h, std::uint64_t samples,
                                                    std::uint64_t seed) {
    const std::vector<Monomial> ambient = enumerate_degree(n, h);

    AdditiveCheckReport report;
    report.nvars = n;
    report.degree = h;
    report.exhaustive = false;
    report.seed = seed;
    std::mt19937_64 rng(seed);
    for (std::uint64_t s = 0; s < samples; ++s) {
        std::vector<Monomial> subset;
        while (subset.empty())
            for (const auto& m : ambient)
                if (rng() & 1) subset.push_back(m);
        record(report, measure_subset(subset, n));
    }
    return report;
}

BoundReport bound_report(const PowerSeries& series) {
    BoundReport report;
    report.starts_at_one = !series.sizes.empty() && series.sizes[0] == 1;
    report.all_hold = report.starts_at_one;
    for (int h = 1; h < series.max_degree(); ++h) {
        const BigInt& cur = series.sizes[static_cast<std::size_t>(h)];
        const BigInt& next = series.sizes[static_cast<std::size_t>(h) + 1];
        BoundRow row;
        row.h = h;
        row.size = cur;
        row.next = next;
        row.macaulay_bound = macaulay_upper(cur, h);
        row.plunnecke_bound = cur == 0 ? BigInt(0) : plunnecke_upper(cur, h, h + 1);
        row.holds = next <= row.macaulay_bound;
        if (!row.holds) report.all_hold = false;
        report.rows.push_back(std::move(row));
    }
    return report;
}

}  // namespace sumset
