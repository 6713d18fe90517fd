#include "sumset/groebner.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <stdexcept>
#include <utility>

namespace sumset {

DiffBinomial make_diff(Monomial a, Monomial b) {
    const auto order = grlex_compare(a, b);
    if (order == std::strong_ordering::equal)
        throw std::invalid_argument("difference binomial needs distinct monomials");
    if (a.degree() != b.degree())
        throw std::invalid_argument("difference binomial must be homogeneous");
    if (order == std::strong_ordering::less) std::swap(a, b);
    return {std::move(a), std::move(b)};
}

std::string to_string(const DiffBinomial& f) {
    return to_string(f.lead) + " - " + to_string(f.trail);
}

std::string to_string(const Remainder& r) {
    if (std::holds_alternative<std::monostate>(r)) return "0";
    if (const auto* m = std::get_if<Monomial>(&r)) return to_string(*m);
    return to_string(std::get<DiffBinomial>(r));
}

Monomial phi(const Monomial& u) {
    if (u.degree() == 0) throw std::invalid_argument("phi of the constant monomial");
    const int n = u.nvars();
    std::vector<int> exps(u.exponents());
    exps[static_cast<std::size_t>(min_index(u) - 1)] -= 1;
    exps[static_cast<std::size_t>(n - 1)] += 1;
    return Monomial(std::move(exps));
}

namespace {

bool lead_descending(const DiffBinomial& a, const DiffBinomial& b) {
    return grlex_greater(a.lead, b.lead);
}

}  // namespace

BinomialBasis deform(const LexIdeal& ideal) {
    BinomialBasis basis;
    basis.provenance = BasisProvenance::deformed;
    for (const auto& g : minimal_generators(ideal)) {
        if (min_index(g) == ideal.nvars)
            throw std::invalid_argument(
                "generator supported only on the last variable: the sequence has a "
                "zero, sharp realization impossible");
        basis.elements.push_back({g, phi(g)});
        assert(grlex_greater(basis.elements.back().lead, basis.elements.back().trail));
    }
    std::sort(basis.elements.begin(), basis.elements.end(), lead_descending);
    return basis;
}

std::optional<DiffBinomial> s_poly(const DiffBinomial& f, const DiffBinomial& g) {
    const Monomial v = gcd_mono(f.lead, g.lead);
    // lead terms cancel; what survives of (lt(g)/v)f - (lt(f)/v)g is
    // (lead_f/v)*trail_g - (lead_g/v)*trail_f
    Monomial p = mul(quotient(f.lead, v), g.trail);
    Monomial q = mul(quotient(g.lead, v), f.trail);
    if (p == q) return std::nullopt;
    return make_diff(std::move(p), std::move(q));
}

namespace {

struct SignedTerm {
    Monomial m;
    int sign;  // +1 or -1
};

// First basis element whose lead divides m, in stored (descending-lead)
// order; -1 when none does.
int find_divisor(const Monomial& m, const BinomialBasis& basis) {
    for (std::size_t k = 0; k < basis.elements.size(); ++k)
        if (divides(basis.elements[k].lead, m)) return static_cast<int>(k);
    return -1;
}

Monomial rewrite(const Monomial& m, const DiffBinomial& rule) {
    Monomial out = mul(quotient(m, rule.lead), rule.trail);
    assert(grlex_less(out, m));  // rules rewrite strictly downward
    return out;
}

}  // namespace

Remainder reduce(const std::optional<DiffBinomial>& f, const BinomialBasis& basis) {
    if (!f) return std::monostate{};

    // the working polynomial always has at most two monomials, of
    // opposite signs; rewriting never merges terms except to cancel
    std::vector<SignedTerm> active;
    active.push_back({f->lead, +1});
    active.push_back({f->trail, -1});
    std::vector<SignedTerm> emitted;

    while (!active.empty()) {
        std::size_t top = 0;
        if (active.size() == 2 && grlex_greater(active[1].m, active[0].m)) top = 1;
        const int rule = find_divisor(active[top].m, basis);
        if (rule < 0) {
            emitted.push_back(std::move(active[top]));
            active.erase(active.begin() + static_cast<std::ptrdiff_t>(top));
            continue;
        }
        Monomial next = rewrite(active[top].m, basis.elements[static_cast<std::size_t>(rule)]);
        if (active.size() == 2 && next == active[1 - top].m) {
            active.clear();  // opposite signs cancel
        } else {
            active[top].m = std::move(next);
        }
    }

    if (emitted.empty()) return std::monostate{};
    if (emitted.size() == 1) return std::move(emitted[0].m);
    assert(emitted[0].sign != emitted[1].sign);
    if (emitted[0].m == emitted[1].m) return std::monostate{};
    return make_diff(std::move(emitted[0].m), std::move(emitted[1].m));
}

CheckReport buchberger_check(const BinomialBasis& basis) {
    for (std::size_t i = 0; i < basis.elements.size(); ++i) {
        for (std::size_t j = i + 1; j < basis.elements.size(); ++j) {
            Remainder r = reduce(s_poly(basis.elements[i], basis.elements[j]), basis);
            if (!is_zero(r)) return {false, PairFailure{i, j, std::move(r)}};
        }
    }
    return {true, std::nullopt};
}

CheckReport certify(BinomialBasis& basis) {
    CheckReport report = buchberger_check(basis);
    if (report.pass) basis.certified = true;
    return report;
}

BinomialBasis buchberger_complete(const BinomialBasis& basis) {
    BinomialBasis out = basis;
    std::deque<std::pair<std::size_t, std::size_t>> pending;
    for (std::size_t i = 0; i < out.elements.size(); ++i)
        for (std::size_t j = i + 1; j < out.elements.size(); ++j)
            pending.emplace_back(i, j);

    bool grew = false;
    while (!pending.empty()) {
        const auto [i, j] = pending.front();
        pending.pop_front();
        Remainder r = reduce(s_poly(out.elements[i], out.elements[j]), out);
        if (is_zero(r)) continue;
        auto* diff = std::get_if<DiffBinomial>(&r);
        if (diff == nullptr)
            throw std::logic_error("completion produced a lone monomial remainder");
        out.elements.push_back(std::move(*diff));
        grew = true;
        const std::size_t added = out.elements.size() - 1;
        for (std::size_t k = 0; k < added; ++k) pending.emplace_back(k, added);
    }

    std::sort(out.elements.begin(), out.elements.end(), lead_descending);
    if (grew) out.provenance = BasisProvenance::completed;
    const CheckReport final_check = buchberger_check(out);
    if (!final_check.pass)
        throw std::logic_error("completion finished but the criterion still fails");
    out.certified = true;
    return out;
}

namespace {

Monomial normal_form_impl(const Monomial& u, const BinomialBasis& basis,
                          const DivisorPicker* pick) {
    if (!basis.certified)
        throw std::invalid_argument("normal_form requires a certified basis");
    Monomial m = u;
    for (;;) {
        if (pick == nullptr) {
            const int rule = find_divisor(m, basis);
            if (rule < 0) return m;
            m = rewrite(m, basis.elements[static_cast<std::size_t>(rule)]);
            continue;
        }
        std::vector<std::size_t> candidates;
        for (std::size_t k = 0; k < basis.elements.size(); ++k)
            if (divides(basis.elements[k].lead, m)) candidates.push_back(k);
        if (candidates.empty()) return m;
        const std::size_t choice = (*pick)(candidates.size()) % candidates.size();
        m = rewrite(m, basis.elements[candidates[choice]]);
    }
}

}  // namespace

Monomial normal_form(const Monomial& u, const BinomialBasis& basis) {
    return normal_form_impl(u, basis, nullptr);
}

Monomial normal_form(const Monomial& u, const BinomialBasis& basis,
                     const DivisorPicker& pick) {
    return normal_form_impl(u, basis, &pick);
}

PhiChain phi_chain(const Monomial& u, const LexIdeal& ideal) {
    if (!membership(u, ideal))
        throw std::invalid_argument("phi_chain: monomial not in the ideal");
    Monomial w = u;
    // the xn exponent rises by one per step, so at most degree(u) steps
    // separate u from the pure xn power, which never lies in the ideal
    for (int steps = 1; steps <= u.degree() + 1; ++steps) {
        w = phi(w);
        if (!membership(w, ideal)) return {steps, std::move(w)};
    }
    throw std::logic_error("phi chain trapped in the ideal (the sequence has a zero)");
}

bool leading_ideal_matches(const BinomialBasis& basis, const LexIdeal& ideal) {
    for (int h = 1; h <= ideal.degree_cap; ++h) {
        for (const auto& u : enumerate_degree(ideal.nvars, h)) {
            bool divisible = false;
            for (const auto& f : basis.elements)
                if (divides(f.lead, u)) {
                    divisible = true;
                    break;
                }
            if (divisible != membership(u, ideal)) return false;
        }
    }
    return true;
}

}  // namespace sumset
