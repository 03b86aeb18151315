#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <utility>

#include "opal/ore.hpp"

namespace opal {

// Grammar shared by operator expressions and coefficient expressions:
//
//   expr    := term (('+' | '-') term)*
//   term    := factor (('*' | '/') factor)*
//   factor  := ('-')* atom ('^' integer)?
//   atom    := identifier | integer | '(' expr ')'
//
// '*' is strict left-to-right composition in the operator ring; coefficient
// subexpressions multiply commutatively as a special case. '/' requires an
// order-zero, nonzero divisor. Whitespace is insignificant.

// Resolves free identifiers to named operator bindings; returns false when
// the name is unknown.
using BindingLookup = std::function<bool(const std::string&, OreOperator&)>;

// Parse an operator expression over the spec's derivations and symbols,
// with optional named bindings. Throws ParseError / UnknownSymbol.
OreOperator parse_operator(std::string_view text, const FieldSpecPtr& spec,
                           const BindingLookup& bindings = nullptr);

// Parse a commutative rational-function expression over the given symbols
// (derivations not allowed); used for derivation-table entries before a
// spec exists. Returns numerator and denominator polynomials.
std::pair<Polynomial, Polynomial> parse_coefficient(std::string_view text,
                                                    const std::vector<std::string>& symbols);

// Term order from a precedence list like "dx>dy" (or a single name).
TermOrder parse_order(std::string_view text, const FieldSpecPtr& spec);

}  // namespace opal
