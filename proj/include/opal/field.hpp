#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "opal/errors.hpp"
#include "opal/polynomial.hpp"

namespace opal {

class FieldSpec;
using FieldSpecPtr = std::shared_ptr<const FieldSpec>;

// The coefficient field K = Q(x_1..x_p, g_1..g_q) together with m commuting
// derivations. Symbols are the base variables followed by the generators; a
// derivation table entry gives the derivative of each symbol as a rational
// function in all symbols. Immutable once built.
class FieldSpec {
public:
    struct TableEntry {
        Polynomial num;
        Polynomial den;
    };

    const std::vector<std::string>& derivations() const { return derivations_; }
    const std::vector<std::string>& symbols() const { return symbols_; }
    std::size_t num_derivations() const { return derivations_.size(); }
    std::size_t num_symbols() const { return symbols_.size(); }
    std::size_t num_variables() const { return num_variables_; }
    bool is_generator(std::size_t symbol) const { return symbol >= num_variables_; }

    std::optional<std::size_t> derivation_index(const std::string& name) const;
    std::optional<std::size_t> symbol_index(const std::string& name) const;

    const TableEntry& derivative_of(std::size_t derivation, std::size_t symbol) const {
        return table_[derivation][symbol];
    }

    // Same coefficient field with one extra derivation acting as zero on
    // every symbol. Backs the central tag variable used for ideal
    // intersection: a tag exponent slot whose commutation is trivial.
    FieldSpecPtr with_zero_derivation(const std::string& name) const;

private:
    friend class FieldSpecBuilder;
    FieldSpec() = default;

    std::vector<std::string> derivations_;
    std::vector<std::string> symbols_;
    std::size_t num_variables_ = 0;
    std::vector<std::vector<TableEntry>> table_;  // [derivation][symbol]
};

// Two-phase construction: names first (so coefficient expressions can be
// parsed against the symbol list), then generator table entries.
class FieldSpecBuilder {
public:
    FieldSpecBuilder& derivation(const std::string& name);
    // Base variable, attached positionally (j-th variable to j-th derivation).
    FieldSpecBuilder& variable(const std::string& name);
    // Base variable attached to a named derivation.
    FieldSpecBuilder& variable(const std::string& name, const std::string& attached_to);
    // Generator with all derivatives zero.
    FieldSpecBuilder& constant(const std::string& name);
    FieldSpecBuilder& generator(const std::string& name);
    FieldSpecBuilder& table_entry(const std::string& gen, const std::string& derivation,
                                  Polynomial num, Polynomial den);

    // Symbol list in final order, available before build() for parsing
    // table-entry expressions.
    std::vector<std::string> symbol_names() const;
    std::vector<std::string> derivation_names() const;

    // Throws DuplicateName or ClosureError.
    FieldSpecPtr build() const;

private:
    struct GeneratorDef {
        std::string name;
        bool is_constant;
        std::vector<std::pair<std::string, FieldSpec::TableEntry>> entries;
    };
    std::vector<std::string> derivations_;
    std::vector<std::pair<std::string, std::optional<std::string>>> variables_;
    std::vector<GeneratorDef> generators_;
};

// Element of K in canonical form: gcd(num, den) a unit, denominator
// integer-primitive with positive leading coefficient. Equality of field
// elements is equality of representations.
class FieldElement {
public:
    FieldElement() = default;

    static FieldElement zero(FieldSpecPtr spec);
    static FieldElement one(FieldSpecPtr spec);
    static FieldElement from_rational(FieldSpecPtr spec, const Rational& value);
    static FieldElement from_symbol(FieldSpecPtr spec, std::size_t symbol);
    static FieldElement from_polynomial(FieldSpecPtr spec, Polynomial num);
    static FieldElement from_fraction(FieldSpecPtr spec, Polynomial num, Polynomial den);

    const FieldSpecPtr& spec() const { return spec_; }
    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;

    FieldElement operator-() const;
    FieldElement operator+(const FieldElement& rhs) const;
    FieldElement operator-(const FieldElement& rhs) const;
    FieldElement operator*(const FieldElement& rhs) const;
    FieldElement operator/(const FieldElement& rhs) const;  // DivisionByZero
    FieldElement inverse() const;
    FieldElement pow(int exponent) const;

    bool operator==(const FieldElement& rhs) const;
    bool operator!=(const FieldElement& rhs) const { return !(*this == rhs); }

    // Derivative under the i-th derivation: quotient rule over the symbol
    // derivatives from the table.
    FieldElement derive(std::size_t derivation) const;

    // Rebind to a spec with identical symbols (tag extension and back).
    FieldElement with_spec(FieldSpecPtr spec) const;

    std::string to_string() const;
    // True when the canonical form leads with a negative coefficient;
    // renderers fold this into the term separator.
    bool is_negative_leading() const;

private:
    FieldElement(FieldSpecPtr spec, Polynomial num, Polynomial den);
    void normalize();
    void check_same_spec(const FieldElement& rhs) const;

    FieldSpecPtr spec_;
    Polynomial num_;
    Polynomial den_;
};

}  // namespace opal
