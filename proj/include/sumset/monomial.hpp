#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sumset/bigint.hpp"

namespace sumset {

/// A monomial in n variables: dense exponent vector, degree cached.
/// Variable indices are 1-based in all interfaces (x1 > x2 > ... > xn).
class Monomial {
public:
    explicit Monomial(std::vector<int> exponents);
    static Monomial one(int nvars);
    static Monomial variable(int nvars, int var);

    int nvars() const { return static_cast<int>(exps_.size()); }
    int degree() const { return degree_; }
    int exponent(int var) const { return exps_[static_cast<std::size_t>(var - 1)]; }
    const std::vector<int>& exponents() const { return exps_; }

    bool operator==(const Monomial&) const = default;

private:
    std::vector<int> exps_;
    int degree_ = 0;
};

/// Graded lexicographic order: degree first, then the first nonzero
/// exponent difference decides (positive means greater).
std::strong_ordering grlex_compare(const Monomial& u, const Monomial& v);

inline bool grlex_less(const Monomial& u, const Monomial& v) {
    return grlex_compare(u, v) == std::strong_ordering::less;
}
inline bool grlex_greater(const Monomial& u, const Monomial& v) {
    return grlex_compare(u, v) == std::strong_ordering::greater;
}

/// Smallest / largest variable index with a positive exponent.
/// Both reject the constant monomial.
int min_index(const Monomial& u);
int max_index(const Monomial& u);

bool divides(const Monomial& u, const Monomial& v);  // u | v
Monomial mul(const Monomial& u, const Monomial& v);
Monomial quotient(const Monomial& v, const Monomial& u);  // v / u, u | v required
Monomial gcd_mono(const Monomial& u, const Monomial& v);
Monomial lcm_mono(const Monomial& u, const Monomial& v);

/// |M_d| in n variables = binom(n-1+d, d).
BigInt degree_count(int n, int d);

/// Next monomial of the same degree in descending graded-lex order,
/// or nullopt at the last one (xn^d).
std::optional<Monomial> grlex_successor(const Monomial& u);

/// All monomials of degree d in n variables, strictly descending.
std::vector<Monomial> enumerate_degree(int n, int d);

/// Number of same-degree monomials strictly greater than u.
BigInt grlex_rank(const Monomial& u);

/// Inverse of grlex_rank: the monomial of degree d at the given position
/// in descending order. Requires 0 <= rank < degree_count(n, d).
Monomial grlex_unrank(int n, int d, const BigInt& rank);

/// Text format, round-trip exact: factors in increasing variable index,
/// "^1" omitted, the constant monomial rendered "1". E.g. "x1^2*x3".
std::string to_string(const Monomial& u);
Monomial parse_monomial(std::string_view text, int nvars);

/// The top-c slice of M_degree in descending graded-lex order.
class Lexsegment {
public:
    Lexsegment(int nvars, int degree, BigInt size);

    int nvars() const { return nvars_; }
    int degree() const { return degree_; }
    const BigInt& size() const { return size_; }
    BigInt complement_size() const { return degree_count(nvars_, degree_) - size_; }

    bool contains(const Monomial& u) const;
    std::vector<Monomial> materialize() const;

    bool operator==(const Lexsegment&) const = default;

private:
    int nvars_ = 0;
    int degree_ = 0;
    BigInt size_;
};

Lexsegment lexsegment_take(int n, int i, const BigInt& c);

/// M_1 * C for a lexsegment C: again a lexsegment, one degree up, whose
/// complement has size macaulay_upper(|M_i| - |C|, i).
Lexsegment shadow(const Lexsegment& segment);

/// The lexsegment of M_h with the same cardinality as the given
/// same-degree set.
Lexsegment lex_compress(const std::vector<Monomial>& monomials);

}  // namespace sumset
