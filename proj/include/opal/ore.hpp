#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "opal/field.hpp"

namespace opal {

// Exponent vector of a derivation monomial; one slot per derivation.
using MultiIndex = std::vector<unsigned>;

// Well-order on derivation multi-indices. Graded lex compares total order
// first and then the derivations along a declared precedence (most
// significant first). Block elimination ranks one slot (the central tag
// variable) before a graded lex on the remaining slots.
class TermOrder {
public:
    enum class Kind { GradedLex, BlockElimination };

    static TermOrder graded_lex(std::vector<std::size_t> precedence);
    static TermOrder block_elimination(std::size_t tag, std::vector<std::size_t> precedence);

    Kind kind() const { return kind_; }
    std::size_t arity() const;
    std::size_t tag() const { return tag_; }
    const std::vector<std::size_t>& precedence() const { return precedence_; }

    std::strong_ordering compare(const MultiIndex& a, const MultiIndex& b) const;
    bool less(const MultiIndex& a, const MultiIndex& b) const {
        return compare(a, b) == std::strong_ordering::less;
    }
    bool greater(const MultiIndex& a, const MultiIndex& b) const {
        return compare(a, b) == std::strong_ordering::greater;
    }

    bool operator==(const TermOrder& rhs) const = default;

    std::string to_string(const std::vector<std::string>& derivation_names) const;

private:
    TermOrder(Kind kind, std::size_t tag, std::vector<std::size_t> precedence)
        : kind_(kind), tag_(tag), precedence_(std::move(precedence)) {}

    Kind kind_;
    std::size_t tag_;  // slot compared first under BlockElimination
    std::vector<std::size_t> precedence_;
};

// Element of the operator ring D = K[d_1..d_m] with commutation
// d_i * a = a * d_i + derive(a, i). Coefficients sit on the left of the
// derivation monomials; the term map is kept free of zeros.
class OreOperator {
public:
    OreOperator() = default;

    static OreOperator zero(FieldSpecPtr spec);
    static OreOperator one(FieldSpecPtr spec);
    static OreOperator derivation(FieldSpecPtr spec, std::size_t index);
    static OreOperator coefficient(FieldElement value);
    static OreOperator term(FieldElement value, MultiIndex index);

    const FieldSpecPtr& spec() const { return spec_; }
    const std::map<MultiIndex, FieldElement>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // Max total degree of the stored indices; -1 for the zero operator.
    int order() const;

    OreOperator operator-() const;
    OreOperator operator+(const OreOperator& rhs) const;
    OreOperator operator-(const OreOperator& rhs) const;
    // Noncommutative ring product (left-to-right composition).
    OreOperator operator*(const OreOperator& rhs) const;

    bool operator==(const OreOperator& rhs) const;
    bool operator!=(const OreOperator& rhs) const { return !(*this == rhs); }

    // Left multiplication by a coefficient: c * (a d^mu) = (c a) d^mu.
    OreOperator left_scaled(const FieldElement& c) const;
    // Left multiplication by the index-th derivation symbol.
    OreOperator times_derivation_left(std::size_t index) const;

    std::pair<MultiIndex, FieldElement> leading(const TermOrder& ord) const;  // ZeroOperator
    OreOperator monic(const TermOrder& ord) const;

    // Rebind all coefficients to a spec with identical symbols, resizing
    // indices to the new derivation count (tag embedding / projection).
    OreOperator transported(FieldSpecPtr spec) const;

    // Canonical rendering: terms descending under ord, coefficients in
    // canonical form, e.g. "dx^3 + x*dx^2*dy + 2*dx^2 - (x+2)*dy".
    std::string to_string(const TermOrder& ord) const;

private:
    void add_term(const MultiIndex& index, const FieldElement& value);
    void check_same_spec(const OreOperator& rhs) const;

    FieldSpecPtr spec_;
    std::map<MultiIndex, FieldElement> terms_;
};

struct ReductionResult {
    OreOperator remainder;
    std::vector<OreOperator> cofactors;  // one per divisor, f = sum cofactor_k * g_k + remainder
};

// Right reduction of f modulo the sequence G: repeatedly cancels the
// ord-greatest term whose index is divisible by some leading index of G,
// always choosing the first matching divisor. The remainder has no term
// divisible by any leading index of G.
ReductionResult right_reduce(const OreOperator& f, std::span<const OreOperator> divisors,
                             const TermOrder& ord);

// True iff the left-to-right product of factors equals target exactly.
bool verify_factorization(const OreOperator& target, std::span<const OreOperator> factors);

// True iff A*P lies in the left ideal D*B, i.e. u -> P(u) maps solutions of
// B into solutions of A. {B} alone is a Groebner basis of D*B, so a single
// right reduction decides membership.
bool verify_intertwine(const OreOperator& a, const OreOperator& p, const OreOperator& b,
                       const TermOrder& ord);

}  // namespace opal
