#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "opal/groebner.hpp"

namespace opal {

// Minimal leading exponents of a reduced basis: an antichain under
// componentwise divisibility. The region of derivation monomials outside
// every shadow e + N^m carries the free derivative coordinates.
struct Staircase {
    std::size_t m = 0;
    std::vector<MultiIndex> exponents;  // minimized, sorted lexicographically

    static Staircase of(std::size_t m, std::vector<MultiIndex> exponents);
};

// Leading indices of a reduced basis under its (graded) order. The unit
// ideal yields {0}; the zero ideal yields the empty staircase.
Staircase staircase_of(const GroebnerBasis& basis);

// Number of multi-indices of total degree <= s outside every shadow of the
// staircase, by direct enumeration.
std::int64_t hilbert_count(const Staircase& staircase, unsigned s);

// Integer-valued polynomial in binomial form sum a_i * C(s+i, i), equal to
// the Hilbert count for all s >= valid_from.
struct NumericalPolynomial {
    std::vector<std::int64_t> binomial_coefficients;  // a_0 .. a_m
    unsigned valid_from = 0;

    std::int64_t evaluate(std::int64_t s) const;
    bool is_zero() const;
    int degree() const;  // -1 for the zero polynomial

    std::string to_binomial_string() const;  // e.g. "3*C(s+1,1) - 3"
    std::string to_monomial_string() const;  // e.g. "3*s"
};

// Eventual polynomial of the Hilbert count. Fits a degree <= m polynomial
// through m+1 consecutive counts and verifies it on every further count up
// to the certain stabilization bound (the corner of the staircase bounding
// box); advances the fit window on mismatch. valid_from reports where the
// count actually stabilizes.
NumericalPolynomial dimension_polynomial(const Staircase& staircase);

// Closed form for m = 2: with E = {(i_1,j_1) .. (i_t,j_t)}, i ascending and
// j descending, d = i_1 + j_t and W the finite region above (i_1, j_t) and
// below the stairs: omega(s) = d s + (3d - d^2)/2 + |W|. Throws WrongArity
// when m != 2.
NumericalPolynomial dimension_polynomial_m2(const Staircase& staircase);

// Differential type tau (degree of omega) and typical differential
// dimension a_tau (leading binomial coefficient); (-1, 0) for omega = 0.
// Ordered lexicographically.
struct Gauge {
    int tau = -1;
    std::int64_t a_tau = 0;

    auto operator<=>(const Gauge&) const = default;
    std::string to_string() const;
};

Gauge gauge_of(const NumericalPolynomial& omega);

Gauge gauge_of_ideal(const LeftIdeal& ideal, const TermOrder& ord,
                     const BuchbergerOptions& options = {});
Gauge gauge_of_basis(const GroebnerBasis& basis);

}  // namespace opal
