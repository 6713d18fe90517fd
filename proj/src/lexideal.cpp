#include "sumset/lexideal.hpp"

#include <cassert>
#include <stdexcept>

namespace sumset {

LexIdeal build_lexideal(const BoundSequence& seq) {
    const auto report = validate_sequence(seq);
    if (!report.valid) throw std::invalid_argument("sequence fails the Macaulay conditions");
    if (seq.max_index() < 1 || seq.values[1] < 1)
        throw std::invalid_argument("need d_1 >= 1 to build");

    LexIdeal ideal;
    ideal.nvars = static_cast<int>(to_index(seq.values[1]));
    ideal.degree_cap = seq.max_index();
    ideal.hilbert = seq.values;
    ideal.segment_sizes.assign(seq.values.size(), 0);
    ideal.generators.assign(seq.values.size(), {});

    const int n = ideal.nvars;
    for (int i = 1; i <= ideal.degree_cap; ++i) {
        const std::size_t idx = static_cast<std::size_t>(i);
        ideal.segment_sizes[idx] = degree_count(n, i) - seq.values[idx];
        assert(ideal.segment_sizes[idx] >= 0);
    }
    assert(ideal.segment_sizes[1] == 0);

    // G_i = (segment at degree i) minus (shadow of segment at degree i-1);
    // both are lexsegments, so G_i is the contiguous run of positions
    // [shadow size, segment size).
    for (int i = 2; i <= ideal.degree_cap; ++i) {
        const std::size_t idx = static_cast<std::size_t>(i);
        const Lexsegment below(n, i - 1, ideal.segment_sizes[idx - 1]);
        const BigInt shadow_size = shadow(below).size();
        assert(shadow_size <= ideal.segment_sizes[idx]);
        const std::size_t count = to_index(ideal.segment_sizes[idx] - shadow_size);
        if (count == 0) continue;
        auto& bucket = ideal.generators[idx];
        bucket.reserve(count);
        bucket.push_back(grlex_unrank(n, i, shadow_size));
        while (bucket.size() < count) {
            auto next = grlex_successor(bucket.back());
            assert(next);
            bucket.push_back(std::move(*next));
        }
    }
    return ideal;
}

std::vector<Monomial> minimal_generators(const LexIdeal& ideal) {
    std::vector<Monomial> out;
    for (const auto& bucket : ideal.generators)
        out.insert(out.end(), bucket.begin(), bucket.end());
    return out;
}

bool membership(const Monomial& u, const LexIdeal& ideal) {
    if (u.nvars() != ideal.nvars)
        throw std::invalid_argument("monomial has the wrong variable count");
    const int d = u.degree();
    if (d > ideal.degree_cap) throw std::invalid_argument("degree above the cap");
    if (d == 0) return false;
    return grlex_rank(u) < ideal.segment_sizes[static_cast<std::size_t>(d)];
}

bool membership_by_generator(const Monomial& u, const LexIdeal& ideal) {
    if (u.degree() > ideal.degree_cap) throw std::invalid_argument("degree above the cap");
    for (const auto& bucket : ideal.generators)
        for (const auto& g : bucket)
            if (divides(g, u)) return true;
    return false;
}

BigInt hilbert_function(const LexIdeal& ideal, int h) {
    if (h < 0 || h > ideal.degree_cap) throw std::invalid_argument("degree above the cap");
    if (h == 0) return 1;
    return degree_count(ideal.nvars, h) - ideal.segment_sizes[static_cast<std::size_t>(h)];
}

std::pair<Monomial, Monomial> ek_factorize(const Monomial& u, const LexIdeal& ideal) {
    if (!membership(u, ideal))
        throw std::invalid_argument("ek_factorize: monomial not in the ideal");

    std::pair<Monomial, Monomial> found{Monomial::one(ideal.nvars), Monomial::one(ideal.nvars)};
    int hits = 0;
    for (const auto& bucket : ideal.generators) {
        for (const auto& g : bucket) {
            if (!divides(g, u)) continue;
            Monomial w = quotient(u, g);
            if (w.degree() == 0 || max_index(g) <= min_index(w)) {
                found = {g, std::move(w)};
                ++hits;
            }
        }
    }
    if (hits != 1)
        throw std::logic_error("canonical factorization not unique: " + std::to_string(hits));
    return found;
}

}  // namespace sumset
