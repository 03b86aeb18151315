#include "opal/field.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <sstream>
#include <utility>

namespace opal {

std::optional<std::size_t> FieldSpec::derivation_index(const std::string& name) const {
    for (std::size_t i = 0; i < derivations_.size(); ++i)
        if (derivations_[i] == name) return i;
    return std::nullopt;
}

std::optional<std::size_t> FieldSpec::symbol_index(const std::string& name) const {
    for (std::size_t i = 0; i < symbols_.size(); ++i)
        if (symbols_[i] == name) return i;
    return std::nullopt;
}

FieldSpecPtr FieldSpec::with_zero_derivation(const std::string& name) const {
    auto extended = std::shared_ptr<FieldSpec>(new FieldSpec(*this));
    extended->derivations_.push_back(name);
    std::vector<TableEntry> zeros;
    zeros.reserve(symbols_.size());
    const std::size_t arity = symbols_.size();
    for (std::size_t s = 0; s < arity; ++s)
        zeros.push_back({Polynomial(arity), Polynomial::constant(arity, 1)});
    extended->table_.push_back(std::move(zeros));
    return extended;
}

FieldSpecBuilder& FieldSpecBuilder::derivation(const std::string& name) {
    derivations_.push_back(name);
    return *this;
}

FieldSpecBuilder& FieldSpecBuilder::variable(const std::string& name) {
    variables_.emplace_back(name, std::nullopt);
    return *this;
}

FieldSpecBuilder& FieldSpecBuilder::variable(const std::string& name,
                                             const std::string& attached_to) {
    variables_.emplace_back(name, attached_to);
    return *this;
}

FieldSpecBuilder& FieldSpecBuilder::constant(const std::string& name) {
    generators_.push_back({name, true, {}});
    return *this;
}

FieldSpecBuilder& FieldSpecBuilder::generator(const std::string& name) {
    generators_.push_back({name, false, {}});
    return *this;
}

FieldSpecBuilder& FieldSpecBuilder::table_entry(const std::string& gen,
                                                const std::string& derivation, Polynomial num,
                                                Polynomial den) {
    for (auto& g : generators_) {
        if (g.name == gen) {
            g.entries.emplace_back(derivation,
                                   FieldSpec::TableEntry{std::move(num), std::move(den)});
            return *this;
        }
    }
    throw ClosureError(gen, derivation);
}

std::vector<std::string> FieldSpecBuilder::symbol_names() const {
    std::vector<std::string> names;
    for (const auto& [name, attach] : variables_) names.push_back(name);
    for (const auto& g : generators_) names.push_back(g.name);
    return names;
}

std::vector<std::string> FieldSpecBuilder::derivation_names() const { return derivations_; }

FieldSpecPtr FieldSpecBuilder::build() const {
    auto spec = std::shared_ptr<FieldSpec>(new FieldSpec());
    spec->derivations_ = derivations_;
    spec->symbols_ = symbol_names();
    spec->num_variables_ = variables_.size();

    std::set<std::string> seen;
    for (const auto& name : derivations_)
        if (!seen.insert(name).second) throw DuplicateName(name);
    for (const auto& name : spec->symbols_)
        if (!seen.insert(name).second) throw DuplicateName(name);

    const std::size_t m = derivations_.size();
    const std::size_t arity = spec->symbols_.size();
    const Polynomial zero(arity);
    const Polynomial one = Polynomial::constant(arity, 1);

    spec->table_.assign(m, std::vector<FieldSpec::TableEntry>(arity, {zero, one}));

    for (std::size_t j = 0; j < variables_.size(); ++j) {
        const auto& [name, attach] = variables_[j];
        if (attach) {
            auto i = spec->derivation_index(*attach);
            if (!i) throw ClosureError(name, *attach);
            spec->table_[*i][j].num = one;
        } else if (j < m) {
            spec->table_[j][j].num = one;
        }
    }

    for (std::size_t k = 0; k < generators_.size(); ++k) {
        const auto& g = generators_[k];
        const std::size_t sym = variables_.size() + k;
        if (g.is_constant) continue;
        std::vector<bool> covered(m, false);
        for (const auto& [deriv, entry] : g.entries) {
            auto i = spec->derivation_index(deriv);
            if (!i) throw ClosureError(g.name, deriv);
            if (covered[*i]) throw DuplicateName(g.name + ":" + deriv);
            covered[*i] = true;
            if (entry.den.is_zero()) throw DivisionByZero();
            spec->table_[*i][sym] = entry;
        }
        for (std::size_t i = 0; i < m; ++i)
            if (!covered[i]) throw ClosureError(g.name, derivations_[i]);
    }
    return spec;
}

FieldElement::FieldElement(FieldSpecPtr spec, Polynomial num, Polynomial den)
    : spec_(std::move(spec)), num_(std::move(num)), den_(std::move(den)) {
    normalize();
}

FieldElement FieldElement::zero(FieldSpecPtr spec) {
    const std::size_t arity = spec->num_symbols();
    return FieldElement(std::move(spec), Polynomial(arity), Polynomial::constant(arity, 1));
}

FieldElement FieldElement::one(FieldSpecPtr spec) { return from_rational(std::move(spec), 1); }

FieldElement FieldElement::from_rational(FieldSpecPtr spec, const Rational& value) {
    const std::size_t arity = spec->num_symbols();
    return FieldElement(std::move(spec), Polynomial::constant(arity, value),
                        Polynomial::constant(arity, 1));
}

FieldElement FieldElement::from_symbol(FieldSpecPtr spec, std::size_t symbol) {
    const std::size_t arity = spec->num_symbols();
    return FieldElement(std::move(spec), Polynomial::variable(arity, symbol),
                        Polynomial::constant(arity, 1));
}

FieldElement FieldElement::from_polynomial(FieldSpecPtr spec, Polynomial num) {
    const std::size_t arity = spec->num_symbols();
    return FieldElement(std::move(spec), std::move(num), Polynomial::constant(arity, 1));
}

FieldElement FieldElement::from_fraction(FieldSpecPtr spec, Polynomial num, Polynomial den) {
    return FieldElement(std::move(spec), std::move(num), std::move(den));
}

void FieldElement::normalize() {
    if (den_.is_zero()) throw DivisionByZero();
    if (num_.is_zero()) {
        den_ = Polynomial::constant(num_.arity(), 1);
        return;
    }
    Polynomial g = Polynomial::gcd(num_, den_);
    if (!(g.is_constant() && g.constant_value() == 1)) {
        num_ = num_.divided_exactly_by(g);
        den_ = den_.divided_exactly_by(g);
    }
    // Scale so the denominator is integer-primitive with positive leading
    // coefficient; that pins the representation uniquely.
    Rational c = den_.content();
    if (c != 1) {
        Rational inv = Rational(1) / c;
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

bool FieldElement::is_one() const {
    return num_.is_constant() && num_.constant_value() == 1 && den_.is_constant() &&
           den_.constant_value() == 1;
}

void FieldElement::check_same_spec(const FieldElement& rhs) const {
    if (spec_.get() != rhs.spec_.get()) throw SpecMismatch();
}

FieldElement FieldElement::operator-() const { return FieldElement(spec_, -num_, den_); }

FieldElement FieldElement::operator+(const FieldElement& rhs) const {
    check_same_spec(rhs);
    return FieldElement(spec_, num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
}

FieldElement FieldElement::operator-(const FieldElement& rhs) const {
    check_same_spec(rhs);
    return FieldElement(spec_, num_ * rhs.den_ - rhs.num_ * den_, den_ * rhs.den_);
}

FieldElement FieldElement::operator*(const FieldElement& rhs) const {
    check_same_spec(rhs);
    return FieldElement(spec_, num_ * rhs.num_, den_ * rhs.den_);
}

FieldElement FieldElement::operator/(const FieldElement& rhs) const {
    check_same_spec(rhs);
    if (rhs.is_zero()) throw DivisionByZero();
    return FieldElement(spec_, num_ * rhs.den_, den_ * rhs.num_);
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw DivisionByZero();
    return FieldElement(spec_, den_, num_);
}

FieldElement FieldElement::pow(int exponent) const {
    FieldElement base = exponent < 0 ? inverse() : *this;
    unsigned n = exponent < 0 ? static_cast<unsigned>(-exponent) : static_cast<unsigned>(exponent);
    FieldElement r = one(spec_);
    for (unsigned i = 0; i < n; ++i) r = r * base;
    return r;
}

bool FieldElement::operator==(const FieldElement& rhs) const {
    return spec_.get() == rhs.spec_.get() && num_ == rhs.num_ && den_ == rhs.den_;
}

FieldElement FieldElement::derive(std::size_t derivation) const {
    assert(derivation < spec_->num_derivations());
    const std::size_t arity = spec_->num_symbols();
    auto derive_poly = [&](const Polynomial& p) {
        FieldElement acc = zero(spec_);
        for (std::size_t s = 0; s < arity; ++s) {
            Polynomial partial = p.derivative(s);
            if (partial.is_zero()) continue;
            const auto& entry = spec_->derivative_of(derivation, s);
            if (entry.num.is_zero()) continue;
            acc = acc + FieldElement(spec_, partial * entry.num, entry.den);
        }
        return acc;
    };
    FieldElement dn = derive_poly(num_);
    FieldElement dd = derive_poly(den_);
    FieldElement num = from_polynomial(spec_, num_);
    FieldElement den = from_polynomial(spec_, den_);
    return (dn * den - num * dd) / (den * den);
}

FieldElement FieldElement::with_spec(FieldSpecPtr spec) const {
    assert(spec->num_symbols() == spec_->num_symbols());
    FieldElement r;
    r.spec_ = std::move(spec);
    r.num_ = num_;
    r.den_ = den_;
    return r;
}

bool FieldElement::is_negative_leading() const {
    return !num_.is_zero() && num_.leading_coefficient() < 0;
}

std::string FieldElement::to_string() const {
    const auto& names = spec_->symbols();
    if (den_.is_constant() && den_.constant_value() == 1) return num_.to_string(names);
    std::ostringstream out;
    bool num_atom = num_.terms().size() == 1;
    bool den_atom = den_.terms().size() == 1 && den_.leading_coefficient() == 1 &&
                    [&] {
                        unsigned nonzero = 0;
                        for (unsigned e : den_.leading_exponents()) nonzero += e > 0 ? 1 : 0;
                        return nonzero <= 1;
                    }();
    if (num_atom)
        out << num_.to_string(names);
    else
        out << "(" << num_.to_string(names) << ")";
    out << "/";
    if (den_atom)
        out << den_.to_string(names);
    else
        out << "(" << den_.to_string(names) << ")";
    return out.str();
}

}  // namespace opal
