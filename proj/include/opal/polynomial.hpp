#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace opal {

using Rational = mpq_class;

// Exponent vector of a commutative monomial; one slot per ring symbol.
using Exponents = std::vector<unsigned>;

unsigned exp_total(const Exponents& e);
bool exp_divides(const Exponents& a, const Exponents& b);  // a <= b componentwise
Exponents exp_add(const Exponents& a, const Exponents& b);
Exponents exp_sub(const Exponents& a, const Exponents& b);  // requires b <= a
Exponents exp_max(const Exponents& a, const Exponents& b);

// Graded lexicographic order on exponent vectors: total degree first, then
// the first differing slot decides. Used as the fixed internal order of the
// coefficient polynomial ring (canonical forms, leading coefficients).
struct GrlexExpLess {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

// Multivariate polynomial over Q with exact rational coefficients.
// Terms are kept normalized: no zero coefficients are stored and the zero
// polynomial is the empty term map.
class Polynomial {
public:
    using TermMap = std::map<Exponents, Rational, GrlexExpLess>;

    explicit Polynomial(std::size_t arity = 0) : arity_(arity) {}

    static Polynomial constant(std::size_t arity, const Rational& value);
    static Polynomial variable(std::size_t arity, std::size_t index, unsigned power = 1);

    std::size_t arity() const { return arity_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Value of a constant polynomial (0 for the zero polynomial).
    Rational constant_value() const;

    const TermMap& terms() const { return terms_; }
    unsigned total_degree() const;  // 0 for the zero polynomial
    unsigned degree_in(std::size_t var) const;
    const Exponents& leading_exponents() const;
    const Rational& leading_coefficient() const;

    void add_term(const Exponents& mono, const Rational& coefficient);

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial operator+(const Polynomial& rhs) const;
    Polynomial operator-(const Polynomial& rhs) const;
    Polynomial operator*(const Polynomial& rhs) const;
    Polynomial operator*(const Rational& scalar) const;
    Polynomial pow(unsigned exponent) const;

    bool operator==(const Polynomial& rhs) const {
        return arity_ == rhs.arity_ && terms_ == rhs.terms_;
    }
    bool operator!=(const Polynomial& rhs) const { return !(*this == rhs); }

    Polynomial derivative(std::size_t var) const;

    // Exact division; throws std::logic_error when the division is not exact.
    Polynomial divided_exactly_by(const Polynomial& divisor) const;

    // gcd(coefficient numerators)/lcm(coefficient denominators), carrying the
    // sign of the leading coefficient. content(0) = 0.
    Rational content() const;
    // this / content(): integer coefficients, content 1, positive leading
    // coefficient. primitive_part(0) = 0.
    Polynomial primitive_part() const;

    // Primitive gcd with positive leading coefficient; 1 for coprime inputs
    // and for pairs of nonzero constants. gcd(0, p) = primitive_part(p).
    static Polynomial gcd(const Polynomial& a, const Polynomial& b);

    std::string to_string(const std::vector<std::string>& names) const;

private:
    std::size_t arity_;
    TermMap terms_;
};

}  // namespace opal
