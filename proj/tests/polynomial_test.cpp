#include <random>

#include "doctest.h"
#include "opal/polynomial.hpp"

using opal::Exponents;
using opal::Polynomial;
using opal::Rational;

namespace {

const std::vector<std::string> kNames = {"x", "y"};

Polynomial x() { return Polynomial::variable(2, 0); }
Polynomial y() { return Polynomial::variable(2, 1); }
Polynomial c(long v) { return Polynomial::constant(2, Rational(v)); }

Polynomial random_poly(std::mt19937_64& rng, unsigned max_terms = 4, unsigned max_deg = 3) {
    std::uniform_int_distribution<unsigned> nterms(0, max_terms);
    std::uniform_int_distribution<unsigned> deg(0, max_deg);
    std::uniform_int_distribution<long> coeff(-5, 5);
    Polynomial p(2);
    unsigned n = nterms(rng);
    for (unsigned i = 0; i < n; ++i) {
        Exponents e = {deg(rng), deg(rng)};
        p.add_term(e, Rational(coeff(rng)));
    }
    return p;
}

}  // namespace

TEST_CASE("grlex order on exponent vectors") {
    opal::GrlexExpLess less;
    CHECK(less({1, 0}, {2, 0}));
    CHECK(less({0, 2}, {1, 1}));
    CHECK(less({1, 1}, {2, 0}));
    CHECK_FALSE(less({2, 0}, {2, 0}));
}

TEST_CASE("basic arithmetic") {
    Polynomial p = x() * x() - c(1);
    Polynomial q = x() - c(1);
    CHECK(p.total_degree() == 2);
    CHECK((q * (x() + c(1))) == p);
    CHECK((p - p).is_zero());
    CHECK((p * c(0)).is_zero());
}

TEST_CASE("derivative") {
    Polynomial p = x().pow(2) * y() + x() * c(3);
    CHECK(p.derivative(0) == x() * y() * c(2) + c(3));
    CHECK(p.derivative(1) == x().pow(2));
}

TEST_CASE("exact division") {
    Polynomial p = (x() + y()) * (x() - y()) * (x() + c(2));
    CHECK(p.divided_exactly_by(x() + y()) == (x() - y()) * (x() + c(2)));
    CHECK_THROWS_AS((x() * x() + c(1)).divided_exactly_by(x() + c(1)), std::logic_error);
}

TEST_CASE("content and primitive part") {
    Polynomial p = x() * c(4) + c(6);
    CHECK(p.content() == Rational(2));
    CHECK(p.primitive_part() == x() * c(2) + c(3));
    Polynomial q = x() * Rational(1, 2) + y() * Rational(3, 2);
    CHECK(q.content() == Rational(1, 2));
    Polynomial neg = -(x() + c(1));
    CHECK(neg.content() == Rational(-1));
    CHECK(neg.primitive_part() == x() + c(1));
    CHECK(Polynomial(2).content() == Rational(0));
}

TEST_CASE("gcd on fixed cases") {
    Polynomial a = (x() + y()).pow(2) * (x() - c(1));
    Polynomial b = (x() + y()) * (x() + c(1));
    CHECK(Polynomial::gcd(a, b) == x() + y());

    // common constant factors are units in Q[x,y]
    CHECK(Polynomial::gcd(x() * c(2), c(4)) == c(1));
    CHECK(Polynomial::gcd(Polynomial(2), a) == a.primitive_part());
    CHECK(Polynomial::gcd(c(3), c(6)) == c(1));

    // (x^2 - 1) / (x - 1) via gcd reduction
    Polynomial num = x().pow(2) - c(1);
    Polynomial den = x() - c(1);
    Polynomial g = Polynomial::gcd(num, den);
    CHECK(num.divided_exactly_by(g) == x() + c(1));
}

TEST_CASE("gcd properties on random inputs") {
    std::mt19937_64 rng(42);
    for (int iter = 0; iter < 80; ++iter) {
        Polynomial a = random_poly(rng);
        Polynomial b = random_poly(rng);
        Polynomial m = random_poly(rng, 3, 2);
        Polynomial g = Polynomial::gcd(a * m, b * m);
        if ((a * m).is_zero() && (b * m).is_zero()) {
            CHECK(g.is_zero());
            continue;
        }
        // g divides both inputs and is divisible by the common factor
        CHECK_NOTHROW((a * m).divided_exactly_by(g));
        CHECK_NOTHROW((b * m).divided_exactly_by(g));
        if (!m.is_zero()) CHECK_NOTHROW(g.divided_exactly_by(Polynomial::gcd(g, m.primitive_part())));
        if (!g.is_zero()) {
            CHECK(g.content() == Rational(1));
            CHECK(g.leading_coefficient() > 0);
        }
        if (!m.is_zero() && !a.is_zero() && !b.is_zero())
            CHECK_NOTHROW(g.divided_exactly_by(
                Polynomial::gcd(Polynomial::gcd(a, b) * m, g)));
    }
}

TEST_CASE("rendering") {
    Polynomial p = x().pow(2) * y() * c(3) - x() + Polynomial::constant(2, Rational(1, 2));
    CHECK(p.to_string(kNames) == "3*x^2*y - x + 1/2");
    CHECK(Polynomial(2).to_string(kNames) == "0");
    CHECK((-x()).to_string(kNames) == "-x");
}
