#pragma once

#include <utility>
#include <vector>

#include "sumset/macaulay.hpp"
#include "sumset/monomial.hpp"

namespace sumset {

/// The lexideal realizing a validated growth sequence up to its degree cap:
/// at every degree i the ideal's slice is the top (|M_i| - d_i) lexsegment,
/// so the quotient's Hilbert function equals the sequence by construction.
/// Stored by segment sizes plus the minimal generators; degree slices are
/// enumerated on demand, never materialized wholesale.
struct LexIdeal {
    int nvars = 0;
    int degree_cap = 0;
    std::vector<BigInt> hilbert;                    // d_0 .. d_D
    std::vector<BigInt> segment_sizes;              // c_0 = 0, c_i = |M_i| - d_i
    std::vector<std::vector<Monomial>> generators;  // G_i by degree, index 0..D
};

/// Requires a sequence accepted by validate_sequence with d_1 >= 1.
LexIdeal build_lexideal(const BoundSequence& seq);

/// All minimal generators, ascending degree, descending within a degree.
std::vector<Monomial> minimal_generators(const LexIdeal& ideal);

/// Segment-position test; agrees with divisibility by a minimal generator.
/// Rejects degrees above the cap.
bool membership(const Monomial& u, const LexIdeal& ideal);

/// Divisor-based membership; used to cross-check the position test.
bool membership_by_generator(const Monomial& u, const LexIdeal& ideal);

/// dim of the quotient's degree-h slice = |M_h| - c_h.
BigInt hilbert_function(const LexIdeal& ideal, int h);

/// The unique factorization u = v*w with v a minimal generator and
/// max_index(v) <= min_index(w) (w = 1 counts as min_index infinity).
/// Requires membership(u, ideal).
std::pair<Monomial, Monomial> ek_factorize(const Monomial& u, const LexIdeal& ideal);

}  // namespace sumset
