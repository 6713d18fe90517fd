#include "sumset/monomial.hpp"

#include <algorithm>
#include <cassert>
#include <charconv>
#include <numeric>
#include <stdexcept>

#include "sumset/macaulay.hpp"

namespace sumset {

Monomial::Monomial(std::vector<int> exponents) : exps_(std::move(exponents)) {
    if (exps_.empty()) throw std::invalid_argument("monomial needs at least one variable");
    for (int e : exps_)
        if (e < 0) throw std::invalid_argument("negative exponent");
    degree_ = std::accumulate(exps_.begin(), exps_.end(), 0);
}

Monomial Monomial::one(int nvars) {
    if (nvars < 1) throw std::invalid_argument("nvars must be >= 1");
    return Monomial(std::vector<int>(static_cast<std::size_t>(nvars), 0));
}

Monomial Monomial::variable(int nvars, int var) {
    if (var < 1 || var > nvars) throw std::invalid_argument("variable index out of range");
    std::vector<int> exps(static_cast<std::size_t>(nvars), 0);
    exps[static_cast<std::size_t>(var - 1)] = 1;
    return Monomial(std::move(exps));
}

namespace {

void require_same_nvars(const Monomial& u, const Monomial& v) {
    if (u.nvars() != v.nvars())
        throw std::invalid_argument("monomials live in different variable counts");
}

}  // namespace

std::strong_ordering grlex_compare(const Monomial& u, const Monomial& v) {
    require_same_nvars(u, v);
    if (auto c = u.degree() <=> v.degree(); c != 0) return c;
    return u.exponents() <=> v.exponents();
}

int min_index(const Monomial& u) {
    for (int j = 1; j <= u.nvars(); ++j)
        if (u.exponent(j) > 0) return j;
    throw std::invalid_argument("min_index of the constant monomial");
}

int max_index(const Monomial& u) {
    for (int j = u.nvars(); j >= 1; --j)
        if (u.exponent(j) > 0) return j;
    throw std::invalid_argument("max_index of the constant monomial");
}

bool divides(const Monomial& u, const Monomial& v) {
    require_same_nvars(u, v);
    for (int j = 1; j <= u.nvars(); ++j)
        if (u.exponent(j) > v.exponent(j)) return false;
    return true;
}

Monomial mul(const Monomial& u, const Monomial& v) {
    require_same_nvars(u, v);
    std::vector<int> exps(u.exponents());
    for (std::size_t j = 0; j < exps.size(); ++j) exps[j] += v.exponents()[j];
    return Monomial(std::move(exps));
}

Monomial quotient(const Monomial& v, const Monomial& u) {
    if (!divides(u, v)) throw std::invalid_argument("quotient without divisibility");
    std::vector<int> exps(v.exponents());
    for (std::size_t j = 0; j < exps.size(); ++j) exps[j] -= u.exponents()[j];
    return Monomial(std::move(exps));
}

Monomial gcd_mono(const Monomial& u, const Monomial& v) {
    require_same_nvars(u, v);
    std::vector<int> exps(static_cast<std::size_t>(u.nvars()));
    for (std::size_t j = 0; j < exps.size(); ++j)
        exps[j] = std::min(u.exponents()[j], v.exponents()[j]);
    return Monomial(std::move(exps));
}

Monomial lcm_mono(const Monomial& u, const Monomial& v) {
    require_same_nvars(u, v);
    std::vector<int> exps(static_cast<std::size_t>(u.nvars()));
    for (std::size_t j = 0; j < exps.size(); ++j)
        exps[j] = std::max(u.exponents()[j], v.exponents()[j]);
    return Monomial(std::move(exps));
}

BigInt degree_count(int n, int d) {
    if (n < 1) throw std::invalid_argument("nvars must be >= 1");
    if (d < 0) throw std::invalid_argument("degree must be >= 0");
    return binom(BigInt(n - 1 + d), BigInt(d));
}

std::optional<Monomial> grlex_successor(const Monomial& u) {
    const int n = u.nvars();
    std::vector<int> exps(u.exponents());
    // rightmost position before the last with a positive exponent
    int pivot = -1;
    for (int j = n - 2; j >= 0; --j) {
        if (exps[static_cast<std::size_t>(j)] > 0) {
            pivot = j;
            break;
        }
    }
    if (pivot < 0) return std::nullopt;  // xn^d is the minimum
    const int tail = exps[static_cast<std::size_t>(n - 1)];
    exps[static_cast<std::size_t>(pivot)] -= 1;
    for (int j = pivot + 1; j < n; ++j) exps[static_cast<std::size_t>(j)] = 0;
    exps[static_cast<std::size_t>(pivot + 1)] = tail + 1;
    return Monomial(std::move(exps));
}

std::vector<Monomial> enumerate_degree(int n, int d) {
    const std::size_t total = to_index(degree_count(n, d));
    std::vector<Monomial> out;
    out.reserve(total);
    std::vector<int> first(static_cast<std::size_t>(n), 0);
    first[0] = d;
    out.push_back(Monomial(std::move(first)));
    while (auto next = grlex_successor(out.back())) out.push_back(std::move(*next));
    assert(out.size() == total);
    return out;
}

BigInt grlex_rank(const Monomial& u) {
    const int n = u.nvars();
    BigInt rank = 0;
    int remaining = u.degree();
    for (int j = 1; j < n; ++j) {
        // monomials matching u before position j and strictly larger at j
        const int excess = remaining - u.exponent(j) - 1;
        if (excess >= 0) rank += binom(BigInt(excess + n - j), BigInt(n - j));
        remaining -= u.exponent(j);
    }
    return rank;
}

Monomial grlex_unrank(int n, int d, const BigInt& rank) {
    if (rank < 0 || rank >= degree_count(n, d))
        throw std::invalid_argument("rank out of range");
    std::vector<int> exps(static_cast<std::size_t>(n), 0);
    BigInt rem = rank;
    int degree_left = d;
    for (int j = 0; j < n - 1; ++j) {
        int t = degree_left;
        for (; t >= 0; --t) {
            const BigInt bucket = degree_count(n - 1 - j, degree_left - t);
            if (rem < bucket) break;
            rem -= bucket;
        }
        assert(t >= 0);
        exps[static_cast<std::size_t>(j)] = t;
        degree_left -= t;
    }
    exps[static_cast<std::size_t>(n - 1)] = degree_left;
    assert(rem == 0);
    return Monomial(std::move(exps));
}

std::string to_string(const Monomial& u) {
    if (u.degree() == 0) return "1";
    std::string out;
    for (int j = 1; j <= u.nvars(); ++j) {
        const int e = u.exponent(j);
        if (e == 0) continue;
        if (!out.empty()) out += '*';
        out += 'x';
        out += std::to_string(j);
        if (e > 1) {
            out += '^';
            out += std::to_string(e);
        }
    }
    return out;
}

namespace {

int parse_int(std::string_view text, std::size_t& pos) {
    int value = 0;
    const auto* begin = text.data() + pos;
    const auto* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr == begin)
        throw std::invalid_argument("bad monomial: expected integer");
    pos += static_cast<std::size_t>(ptr - begin);
    return value;
}

}  // namespace

Monomial parse_monomial(std::string_view text, int nvars) {
    if (text == "1") return Monomial::one(nvars);
    std::vector<int> exps(static_cast<std::size_t>(nvars), 0);
    std::size_t pos = 0;
    while (pos < text.size()) {
        if (text[pos] != 'x')
            throw std::invalid_argument("bad monomial '" + std::string(text) + "'");
        ++pos;
        const int var = parse_int(text, pos);
        if (var < 1 || var > nvars)
            throw std::invalid_argument("variable index out of range in monomial");
        int exp = 1;
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            exp = parse_int(text, pos);
            if (exp < 1) throw std::invalid_argument("bad exponent in monomial");
        }
        exps[static_cast<std::size_t>(var - 1)] += exp;
        if (pos < text.size()) {
            if (text[pos] != '*')
                throw std::invalid_argument("bad monomial '" + std::string(text) + "'");
            ++pos;
        }
    }
    return Monomial(std::move(exps));
}

Lexsegment::Lexsegment(int nvars, int degree, BigInt size)
    : nvars_(nvars), degree_(degree), size_(std::move(size)) {
    if (nvars_ < 1) throw std::invalid_argument("nvars must be >= 1");
    if (degree_ < 1) throw std::invalid_argument("lexsegment degree must be >= 1");
    if (size_ < 0 || size_ > degree_count(nvars_, degree_))
        throw std::invalid_argument("lexsegment size out of range");
}

bool Lexsegment::contains(const Monomial& u) const {
    if (u.nvars() != nvars_ || u.degree() != degree_)
        throw std::invalid_argument("monomial outside this degree slice");
    return grlex_rank(u) < size_;
}

std::vector<Monomial> Lexsegment::materialize() const {
    const std::size_t count = to_index(size_);
    std::vector<Monomial> out;
    out.reserve(count);
    if (count == 0) return out;
    std::vector<int> top(static_cast<std::size_t>(nvars_), 0);
    top[0] = degree_;
    out.push_back(Monomial(std::move(top)));
    while (out.size() < count) {
        auto next = grlex_successor(out.back());
        assert(next);
        out.push_back(std::move(*next));
    }
    return out;
}

Lexsegment lexsegment_take(int n, int i, const BigInt& c) { return Lexsegment(n, i, c); }

Lexsegment shadow(const Lexsegment& segment) {
    const int n = segment.nvars();
    const int i = segment.degree();
    const BigInt complement = macaulay_upper(segment.complement_size(), i);
    return Lexsegment(n, i + 1, degree_count(n, i + 1) - complement);
}

Lexsegment lex_compress(const std::vector<Monomial>& monomials) {
    if (monomials.empty())
        throw std::invalid_argument("lex_compress of an empty set");
    const int n = monomials.front().nvars();
    const int h = monomials.front().degree();
    for (const auto& m : monomials)
        if (m.nvars() != n || m.degree() != h)
            throw std::invalid_argument("lex_compress: mixed degrees");
    std::vector<Monomial> unique(monomials);
    std::sort(unique.begin(), unique.end(), grlex_greater);
    unique.erase(std::unique(unique.begin(), unique.end()), unique.end());
    return Lexsegment(n, h, BigInt(unique.size()));
}

}  // namespace sumset
