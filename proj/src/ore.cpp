#include "opal/ore.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace opal {

TermOrder TermOrder::graded_lex(std::vector<std::size_t> precedence) {
    return TermOrder(Kind::GradedLex, 0, std::move(precedence));
}

TermOrder TermOrder::block_elimination(std::size_t tag, std::vector<std::size_t> precedence) {
    return TermOrder(Kind::BlockElimination, tag, std::move(precedence));
}

std::size_t TermOrder::arity() const {
    return kind_ == Kind::GradedLex ? precedence_.size() : precedence_.size() + 1;
}

std::strong_ordering TermOrder::compare(const MultiIndex& a, const MultiIndex& b) const {
    assert(a.size() == arity() && b.size() == arity());
    if (kind_ == Kind::BlockElimination) {
        if (auto c = a[tag_] <=> b[tag_]; c != 0) return c;
    }
    unsigned ta = 0, tb = 0;
    for (std::size_t i : precedence_) {
        ta += a[i];
        tb += b[i];
    }
    if (auto c = ta <=> tb; c != 0) return c;
    for (std::size_t i : precedence_)
        if (auto c = a[i] <=> b[i]; c != 0) return c;
    return std::strong_ordering::equal;
}

std::string TermOrder::to_string(const std::vector<std::string>& names) const {
    std::ostringstream out;
    out << (kind_ == Kind::GradedLex ? "grlex " : "elim ");
    if (kind_ == Kind::BlockElimination) out << names.at(tag_) << " | ";
    bool first = true;
    for (std::size_t i : precedence_) {
        if (!first) out << ">";
        first = false;
        out << names.at(i);
    }
    return out.str();
}

OreOperator OreOperator::zero(FieldSpecPtr spec) {
    OreOperator op;
    op.spec_ = std::move(spec);
    return op;
}

OreOperator OreOperator::one(FieldSpecPtr spec) {
    return coefficient(FieldElement::one(std::move(spec)));
}

OreOperator OreOperator::derivation(FieldSpecPtr spec, std::size_t index) {
    assert(index < spec->num_derivations());
    MultiIndex mi(spec->num_derivations(), 0);
    mi[index] = 1;
    return term(FieldElement::one(std::move(spec)), std::move(mi));
}

OreOperator OreOperator::coefficient(FieldElement value) {
    MultiIndex mi(value.spec()->num_derivations(), 0);
    return term(std::move(value), std::move(mi));
}

OreOperator OreOperator::term(FieldElement value, MultiIndex index) {
    OreOperator op;
    op.spec_ = value.spec();
    assert(index.size() == op.spec_->num_derivations());
    if (!value.is_zero()) op.terms_.emplace(std::move(index), std::move(value));
    return op;
}

int OreOperator::order() const {
    int d = -1;
    for (const auto& [index, coeff] : terms_) d = std::max(d, static_cast<int>(exp_total(index)));
    return d;
}

void OreOperator::add_term(const MultiIndex& index, const FieldElement& value) {
    if (value.is_zero()) return;
    auto [it, inserted] = terms_.emplace(index, value);
    if (!inserted) {
        it->second = it->second + value;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void OreOperator::check_same_spec(const OreOperator& rhs) const {
    if (spec_.get() != rhs.spec_.get()) throw SpecMismatch();
}

OreOperator OreOperator::operator-() const {
    OreOperator r = zero(spec_);
    for (const auto& [index, coeff] : terms_) r.terms_.emplace(index, -coeff);
    return r;
}

OreOperator OreOperator::operator+(const OreOperator& rhs) const {
    check_same_spec(rhs);
    OreOperator r = *this;
    for (const auto& [index, coeff] : rhs.terms_) r.add_term(index, coeff);
    return r;
}

OreOperator OreOperator::operator-(const OreOperator& rhs) const {
    check_same_spec(rhs);
    OreOperator r = *this;
    for (const auto& [index, coeff] : rhs.terms_) r.add_term(index, -coeff);
    return r;
}

OreOperator OreOperator::left_scaled(const FieldElement& c) const {
    OreOperator r = zero(spec_);
    if (c.is_zero()) return r;
    for (const auto& [index, coeff] : terms_) r.terms_.emplace(index, c * coeff);
    return r;
}

OreOperator OreOperator::times_derivation_left(std::size_t index) const {
    // d_i * (a d^nu) = a d^(nu+e_i) + derive(a, i) d^nu
    OreOperator r = zero(spec_);
    for (const auto& [mi, coeff] : terms_) {
        MultiIndex shifted = mi;
        shifted[index] += 1;
        r.add_term(shifted, coeff);
        r.add_term(mi, coeff.derive(index));
    }
    return r;
}

OreOperator OreOperator::operator*(const OreOperator& rhs) const {
    check_same_spec(rhs);
    OreOperator result = zero(spec_);
    for (const auto& [mi, coeff] : terms_) {
        OreOperator shifted = rhs;
        for (std::size_t i = 0; i < mi.size(); ++i)
            for (unsigned k = 0; k < mi[i]; ++k) shifted = shifted.times_derivation_left(i);
        shifted = shifted.left_scaled(coeff);
        for (const auto& [index, c] : shifted.terms_) result.add_term(index, c);
    }
    return result;
}

bool OreOperator::operator==(const OreOperator& rhs) const {
    return spec_.get() == rhs.spec_.get() && terms_ == rhs.terms_;
}

std::pair<MultiIndex, FieldElement> OreOperator::leading(const TermOrder& ord) const {
    if (terms_.empty()) throw ZeroOperator("leading term");
    auto best = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
        if (ord.greater(it->first, best->first)) best = it;
    return {best->first, best->second};
}

OreOperator OreOperator::monic(const TermOrder& ord) const {
    auto [index, coeff] = leading(ord);
    return left_scaled(coeff.inverse());
}

OreOperator OreOperator::transported(FieldSpecPtr spec) const {
    OreOperator r = zero(spec);
    const std::size_t m = spec->num_derivations();
    for (const auto& [index, coeff] : terms_) {
        MultiIndex mi(m, 0);
        for (std::size_t i = 0; i < index.size(); ++i) {
            if (index[i] == 0) continue;
            assert(i < m);  // dropped slots must be zero
            mi[i] = index[i];
        }
        r.add_term(mi, coeff.with_spec(spec));
    }
    return r;
}

std::string OreOperator::to_string(const TermOrder& ord) const {
    if (terms_.empty()) return "0";
    std::vector<const std::map<MultiIndex, FieldElement>::value_type*> sorted;
    for (const auto& term : terms_) sorted.push_back(&term);
    std::sort(sorted.begin(), sorted.end(),
              [&](auto* a, auto* b) { return ord.greater(a->first, b->first); });

    const auto& deriv_names = spec_->derivations();
    std::ostringstream out;
    bool first = true;
    for (const auto* term : sorted) {
        const MultiIndex& index = term->first;
        FieldElement coeff = term->second;
        bool negative = coeff.is_negative_leading();
        if (negative) coeff = -coeff;
        if (first)
            out << (negative ? "-" : "");
        else
            out << (negative ? " - " : " + ");
        first = false;

        std::string mono;
        for (std::size_t i = 0; i < index.size(); ++i) {
            if (index[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += deriv_names[i];
            if (index[i] > 1) mono += "^" + std::to_string(index[i]);
        }
        // Parenthesize coefficients that would not rebind correctly under
        // the grammar's left-associative * and / or the folded sign.
        std::string ctext = coeff.to_string();
        bool needs_parens =
            ctext.find(" + ") != std::string::npos || ctext.find(" - ") != std::string::npos;
        if (mono.empty()) {
            out << (needs_parens ? "(" + ctext + ")" : ctext);
            continue;
        }
        if (coeff.is_one()) {
            out << mono;
            continue;
        }
        if (needs_parens)
            out << "(" << ctext << ")*" << mono;
        else
            out << ctext << "*" << mono;
    }
    return out.str();
}

ReductionResult right_reduce(const OreOperator& f, std::span<const OreOperator> divisors,
                             const TermOrder& ord) {
    struct Head {
        MultiIndex index;
        FieldElement coeff;
    };
    std::vector<Head> heads;
    heads.reserve(divisors.size());
    for (const auto& g : divisors) {
        auto [index, coeff] = g.leading(ord);  // throws ZeroOperator on zero divisor
        heads.push_back({std::move(index), std::move(coeff)});
    }

    ReductionResult result;
    result.remainder = f;
    result.cofactors.assign(divisors.size(), OreOperator::zero(f.spec()));

    for (;;) {
        // ord-greatest reducible term of the remainder, first divisor wins.
        const MultiIndex* target = nullptr;
        std::size_t chosen = 0;
        for (const auto& [index, coeff] : result.remainder.terms()) {
            for (std::size_t k = 0; k < heads.size(); ++k) {
                if (!exp_divides(heads[k].index, index)) continue;
                if (target == nullptr || ord.greater(index, *target)) {
                    target = &index;
                    chosen = k;
                }
                break;
            }
        }
        if (target == nullptr) break;
        const FieldElement& c = result.remainder.terms().at(*target);
        // q d^beta has leading term exactly c d^target against the divisor.
        FieldElement q = c / heads[chosen].coeff;
        MultiIndex beta = exp_sub(*target, heads[chosen].index);
        OreOperator mult = OreOperator::term(std::move(q), std::move(beta));
        result.cofactors[chosen] = result.cofactors[chosen] + mult;
        result.remainder = result.remainder - mult * divisors[chosen];
    }
    return result;
}

bool verify_factorization(const OreOperator& target, std::span<const OreOperator> factors) {
    if (factors.empty()) throw EmptyFactorList();
    OreOperator product = factors[0];
    for (std::size_t i = 1; i < factors.size(); ++i) product = product * factors[i];
    return product == target;
}

bool verify_intertwine(const OreOperator& a, const OreOperator& p, const OreOperator& b,
                       const TermOrder& ord) {
    if (b.is_zero()) throw DivisionByZero();
    const OreOperator divisors[] = {b};
    return right_reduce(a * p, divisors, ord).remainder.is_zero();
}

}  // namespace opal
