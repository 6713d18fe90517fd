#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "sumset/lexideal.hpp"
#include "sumset/monomial.hpp"

namespace sumset {

/// A homogeneous difference of two monomials, lead > trail in graded-lex.
/// Coefficients are always +1 on the lead and -1 on the trail, so no field
/// arithmetic ever appears: reduction is pure monomial rewriting.
struct DiffBinomial {
    Monomial lead;
    Monomial trail;

    bool operator==(const DiffBinomial&) const = default;
};

/// Normalizes the order of the two monomials; rejects equal or
/// inhomogeneous pairs.
DiffBinomial make_diff(Monomial a, Monomial b);

std::string to_string(const DiffBinomial& f);

enum class BasisProvenance { deformed, completed };

struct BinomialBasis {
    std::vector<DiffBinomial> elements;  // sorted by descending lead
    BasisProvenance provenance = BasisProvenance::deformed;
    bool certified = false;  // set once buchberger_check has passed
};

/// u * xn / x_min(u); degree-preserving, rejects the constant monomial.
Monomial phi(const Monomial& u);

/// One difference u - phi(u) per minimal generator. Rejects generators
/// supported only on xn (those signal a zero in the sequence, for which
/// no sharp realization exists).
BinomialBasis deform(const LexIdeal& ideal);

/// Outcome of a full division: zero, a lone irreducible monomial, or an
/// irreducible difference binomial.
using Remainder = std::variant<std::monostate, Monomial, DiffBinomial>;

inline bool is_zero(const Remainder& r) {
    return std::holds_alternative<std::monostate>(r);
}

std::string to_string(const Remainder& r);

/// S-polynomial of two difference binomials; closed over differences:
/// the result is again a difference of two monomials, or zero (nullopt).
std::optional<DiffBinomial> s_poly(const DiffBinomial& f, const DiffBinomial& g);

/// Full division by the basis: the leading monomial is rewritten
/// lead -> trail while divisible, emitted to the remainder otherwise;
/// reduction then continues on the other term.
Remainder reduce(const std::optional<DiffBinomial>& f, const BinomialBasis& basis);

struct PairFailure {
    std::size_t i = 0;
    std::size_t j = 0;
    Remainder remainder;
};

struct CheckReport {
    bool pass = false;
    std::optional<PairFailure> failure;  // first failing pair in (i, j) order
};

/// Buchberger's criterion: every pairwise S-polynomial reduces to zero.
CheckReport buchberger_check(const BinomialBasis& basis);

/// Runs the criterion and stamps basis.certified on success.
CheckReport certify(BinomialBasis& basis);

/// Adds reduced nonzero S-polynomials until the criterion holds. Every
/// added element is again a difference binomial. The result is certified.
BinomialBasis buchberger_complete(const BinomialBasis& basis);

/// Chooses among the applicable divisors at one rewrite step, given how
/// many there are. Used to exercise confluence; the default takes the
/// first in basis order.
using DivisorPicker = std::function<std::size_t(std::size_t)>;

/// Rewrites u by lead -> trail until no basis lead divides it. Unique for
/// certified bases; refuses to run otherwise.
Monomial normal_form(const Monomial& u, const BinomialBasis& basis);
Monomial normal_form(const Monomial& u, const BinomialBasis& basis,
                     const DivisorPicker& pick);

struct PhiChain {
    int steps = 0;     // least l >= 1 with phi^l(u) outside the ideal
    Monomial result;   // phi^l(u)
};

/// Requires membership(u, ideal); terminates because the xn exponent
/// rises each step and no pure xn power lies in the ideal.
PhiChain phi_chain(const Monomial& u, const LexIdeal& ideal);

/// Degree-by-degree cross-check that the basis leads generate exactly the
/// ideal's slices, up to the cap.
bool leading_ideal_matches(const BinomialBasis& basis, const LexIdeal& ideal);

}  // namespace sumset
