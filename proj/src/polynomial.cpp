#include "opal/polynomial.hpp"

#include <cassert>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace opal {

unsigned exp_total(const Exponents& e) {
    unsigned t = 0;
    for (unsigned v : e) t += v;
    return t;
}

bool exp_divides(const Exponents& a, const Exponents& b) {
    assert(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Exponents exp_add(const Exponents& a, const Exponents& b) {
    assert(a.size() == b.size());
    Exponents r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Exponents exp_sub(const Exponents& a, const Exponents& b) {
    assert(a.size() == b.size());
    Exponents r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        assert(b[i] <= a[i]);
        r[i] = a[i] - b[i];
    }
    return r;
}

Exponents exp_max(const Exponents& a, const Exponents& b) {
    assert(a.size() == b.size());
    Exponents r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] > b[i] ? a[i] : b[i];
    return r;
}

bool GrlexExpLess::operator()(const Exponents& a, const Exponents& b) const {
    unsigned ta = exp_total(a), tb = exp_total(b);
    if (ta != tb) return ta < tb;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

Polynomial Polynomial::constant(std::size_t arity, const Rational& value) {
    Polynomial p(arity);
    if (value != 0) p.terms_.emplace(Exponents(arity, 0), value);
    return p;
}

Polynomial Polynomial::variable(std::size_t arity, std::size_t index, unsigned power) {
    assert(index < arity);
    Polynomial p(arity);
    if (power == 0) return constant(arity, 1);
    Exponents e(arity, 0);
    e[index] = power;
    p.terms_.emplace(std::move(e), Rational(1));
    return p;
}

bool Polynomial::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && exp_total(terms_.begin()->first) == 0;
}

Rational Polynomial::constant_value() const {
    if (terms_.empty()) return Rational(0);
    assert(is_constant());
    return terms_.begin()->second;
}

unsigned Polynomial::total_degree() const {
    if (terms_.empty()) return 0;
    return exp_total(terms_.rbegin()->first);
}

unsigned Polynomial::degree_in(std::size_t var) const {
    unsigned d = 0;
    for (const auto& [mono, coeff] : terms_)
        if (mono[var] > d) d = mono[var];
    return d;
}

const Exponents& Polynomial::leading_exponents() const {
    assert(!terms_.empty());
    return terms_.rbegin()->first;
}

const Rational& Polynomial::leading_coefficient() const {
    assert(!terms_.empty());
    return terms_.rbegin()->second;
}

void Polynomial::add_term(const Exponents& mono, const Rational& coefficient) {
    assert(mono.size() == arity_);
    if (coefficient == 0) return;
    auto [it, inserted] = terms_.emplace(mono, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial r(arity_);
    for (const auto& [mono, coeff] : terms_) r.terms_.emplace(mono, -coeff);
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    assert(arity_ == rhs.arity_);
    for (const auto& [mono, coeff] : rhs.terms_) add_term(mono, coeff);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    assert(arity_ == rhs.arity_);
    for (const auto& [mono, coeff] : rhs.terms_) add_term(mono, -coeff);
    return *this;
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
    Polynomial r = *this;
    r += rhs;
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const {
    Polynomial r = *this;
    r -= rhs;
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
    assert(arity_ == rhs.arity_);
    Polynomial r(arity_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : rhs.terms_) r.add_term(exp_add(ma, mb), ca * cb);
    return r;
}

Polynomial Polynomial::operator*(const Rational& scalar) const {
    Polynomial r(arity_);
    if (scalar == 0) return r;
    for (const auto& [mono, coeff] : terms_) r.terms_.emplace(mono, coeff * scalar);
    return r;
}

Polynomial Polynomial::pow(unsigned exponent) const {
    Polynomial r = constant(arity_, 1);
    for (unsigned i = 0; i < exponent; ++i) r = r * *this;
    return r;
}

Polynomial Polynomial::derivative(std::size_t var) const {
    assert(var < arity_);
    Polynomial r(arity_);
    for (const auto& [mono, coeff] : terms_) {
        if (mono[var] == 0) continue;
        Exponents e = mono;
        e[var] -= 1;
        r.add_term(e, coeff * Rational(mono[var]));
    }
    return r;
}

Polynomial Polynomial::divided_exactly_by(const Polynomial& divisor) const {
    assert(arity_ == divisor.arity_);
    if (divisor.is_zero()) throw std::logic_error("polynomial division by zero");
    Polynomial quotient(arity_);
    Polynomial rem = *this;
    const Exponents& dlead = divisor.leading_exponents();
    const Rational& dcoeff = divisor.leading_coefficient();
    while (!rem.is_zero()) {
        const Exponents& rlead = rem.leading_exponents();
        if (!exp_divides(dlead, rlead))
            throw std::logic_error("polynomial division is not exact");
        Exponents q = exp_sub(rlead, dlead);
        Rational c = rem.leading_coefficient() / dcoeff;
        Polynomial t(arity_);
        t.terms_.emplace(std::move(q), c);
        quotient += t;
        rem -= t * divisor;
    }
    return quotient;
}

Rational Polynomial::content() const {
    if (terms_.empty()) return Rational(0);
    mpz_class num_gcd = 0, den_lcm = 1;
    for (const auto& [mono, coeff] : terms_) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), coeff.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), coeff.get_den().get_mpz_t());
    }
    Rational c(num_gcd, den_lcm);
    c.canonicalize();
    if (leading_coefficient() < 0) c = -c;
    return c;
}

Polynomial Polynomial::primitive_part() const {
    if (terms_.empty()) return *this;
    return *this * (Rational(1) / content());
}

namespace {

// Univariate view with respect to one symbol: coefficient polynomials (with
// that symbol cleared) indexed by its exponent.
std::vector<Polynomial> split_by(const Polynomial& p, std::size_t var) {
    std::vector<Polynomial> coeffs(p.degree_in(var) + 1, Polynomial(p.arity()));
    for (const auto& [mono, coeff] : p.terms()) {
        Exponents e = mono;
        unsigned k = e[var];
        e[var] = 0;
        coeffs[k].add_term(e, coeff);
    }
    return coeffs;
}

Polynomial join_by(const std::vector<Polynomial>& coeffs, std::size_t var, std::size_t arity) {
    Polynomial p(arity);
    for (std::size_t k = 0; k < coeffs.size(); ++k)
        p += coeffs[k] * Polynomial::variable(arity, var, static_cast<unsigned>(k));
    return p;
}

void trim(std::vector<Polynomial>& u) {
    while (!u.empty() && u.back().is_zero()) u.pop_back();
}

// gcd of the coefficient polynomials of p with respect to var.
Polynomial content_in(const Polynomial& p, std::size_t var) {
    Polynomial c(p.arity());
    for (const Polynomial& coeff : split_by(p, var)) c = Polynomial::gcd(c, coeff);
    return c;
}

Polynomial primitive_in(const Polynomial& p, std::size_t var) {
    if (p.is_zero()) return p;
    return p.divided_exactly_by(content_in(p, var)).primitive_part();
}

// Pseudo-remainder of a by b in the variable var; requires deg(a) >= deg(b).
Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b, std::size_t var) {
    const std::size_t arity = a.arity();
    std::vector<Polynomial> r = split_by(a, var);
    std::vector<Polynomial> d = split_by(b, var);
    trim(r);
    trim(d);
    const std::size_t db = d.size() - 1;
    const Polynomial& lead = d.back();
    while (r.size() >= d.size() && !r.empty()) {
        const std::size_t dr = r.size() - 1;
        Polynomial top = r.back();
        std::vector<Polynomial> next(dr, Polynomial(arity));
        for (std::size_t k = 0; k < dr; ++k) {
            next[k] = r[k] * lead;
            if (k >= dr - db && k < dr)  // subtract top * x^(dr-db) * d
                next[k] -= top * d[k - (dr - db)];
        }
        r = std::move(next);
        trim(r);
    }
    return join_by(r, var, arity);
}

}  // namespace

Polynomial Polynomial::gcd(const Polynomial& a, const Polynomial& b) {
    assert(a.arity() == b.arity());
    if (a.is_zero()) return b.primitive_part();
    if (b.is_zero()) return a.primitive_part();

    Polynomial pa = a.primitive_part();
    Polynomial pb = b.primitive_part();
    if (pa.is_constant() || pb.is_constant()) return constant(a.arity(), 1);

    std::size_t var = 0;
    for (std::size_t v = a.arity(); v-- > 0;) {
        if (pa.degree_in(v) > 0 || pb.degree_in(v) > 0) {
            var = v;
            break;
        }
    }
    if (pa.degree_in(var) == 0) return gcd(pa, content_in(pb, var));
    if (pb.degree_in(var) == 0) return gcd(content_in(pa, var), pb);

    Polynomial cont_a = content_in(pa, var);
    Polynomial cont_b = content_in(pb, var);
    Polynomial c = gcd(cont_a, cont_b);

    // Primitive pseudo-remainder sequence in var.
    Polynomial u = pa.divided_exactly_by(cont_a);
    Polynomial v = pb.divided_exactly_by(cont_b);
    if (u.degree_in(var) < v.degree_in(var)) std::swap(u, v);
    while (!v.is_zero()) {
        Polynomial r = pseudo_remainder(u, v, var);
        u = std::move(v);
        v = r.is_zero() ? r : primitive_in(r, var);
    }
    Polynomial g = u.degree_in(var) == 0 ? constant(a.arity(), 1) : primitive_in(u, var);
    return (c * g).primitive_part();
}

std::string Polynomial::to_string(const std::vector<std::string>& names) const {
    assert(names.size() == arity_);
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    // Highest term first.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        Rational coeff = it->second;
        if (first) {
            if (coeff < 0) {
                out << "-";
                coeff = -coeff;
            }
        } else {
            out << (coeff < 0 ? " - " : " + ");
            if (coeff < 0) coeff = -coeff;
        }
        first = false;
        bool printed_coeff = false;
        if (coeff != 1 || exp_total(it->first) == 0) {
            out << coeff.get_str();
            printed_coeff = true;
        }
        bool first_var = !printed_coeff;
        for (std::size_t v = 0; v < arity_; ++v) {
            unsigned e = it->first[v];
            if (e == 0) continue;
            if (!first_var) out << "*";
            first_var = false;
            out << names[v];
            if (e > 1) out << "^" << e;
        }
    }
    return out.str();
}

}  // namespace opal
