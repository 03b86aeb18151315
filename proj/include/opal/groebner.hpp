#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "opal/ore.hpp"

namespace opal {

// Left ideal D*g_1 + ... + D*g_r given by generators. The zero ideal is
// represented by a single zero generator.
struct LeftIdeal {
    FieldSpecPtr spec;
    std::vector<OreOperator> generators;

    static LeftIdeal of(std::initializer_list<OreOperator> gens);
    static LeftIdeal of(std::vector<OreOperator> gens);
};

struct BuchbergerOptions {
    // Processed S-pairs before giving up with ResourceExceeded.
    std::size_t pair_budget = 100000;
};

// Reduced monic left Groebner basis. The zero ideal has an empty element
// list; the unit ideal reduces to the single element 1.
class GroebnerBasis {
public:
    GroebnerBasis(std::vector<OreOperator> elements, TermOrder order, FieldSpecPtr spec)
        : elements_(std::move(elements)), order_(std::move(order)), spec_(std::move(spec)) {}

    const std::vector<OreOperator>& elements() const { return elements_; }
    const TermOrder& order() const { return order_; }
    const FieldSpecPtr& spec() const { return spec_; }
    bool reduced() const { return true; }

    bool is_zero_ideal() const { return elements_.empty(); }
    bool is_unit_ideal() const;

    LeftIdeal as_ideal() const;

private:
    std::vector<OreOperator> elements_;
    TermOrder order_;
    FieldSpecPtr spec_;
};

// Buchberger completion for the left ideal: S-pairs cancel leading terms
// with monomial-times-scalar left multipliers, and the normal selection
// strategy picks the pair with the ord-least lcm. Every pair is processed;
// the commutative coprime-criterion does not carry over to this ring. The
// returned basis is autoreduced, monic and sorted, hence unique for the
// ideal and order.
GroebnerBasis buchberger(const LeftIdeal& ideal, const TermOrder& ord,
                         const BuchbergerOptions& options = {});

// Ideal membership: the normal form of f modulo the basis vanishes.
bool member(const OreOperator& f, const GroebnerBasis& basis);

// True iff the two bases generate the same ideal.
bool same_ideal(const GroebnerBasis& a, const GroebnerBasis& b);

// Basis of I + J (generated by the union of the generators).
GroebnerBasis ideal_sum(const LeftIdeal& lhs, const LeftIdeal& rhs, const TermOrder& ord,
                        const BuchbergerOptions& options = {});

// Basis of the intersection of two left ideals, computed with a central tag
// variable w: the ideal generated by {w f} and {(1-w) g} in D[w] meets D
// exactly in the intersection, and an order eliminating w exposes that part.
GroebnerBasis ideal_intersect(const LeftIdeal& lhs, const LeftIdeal& rhs, const TermOrder& ord,
                              const BuchbergerOptions& options = {});

// The single element of a reduced basis, if the basis has exactly one.
std::optional<OreOperator> principal_generator(const GroebnerBasis& basis);

// True iff every generator of the ideal right-reduces to zero modulo the
// candidate right factor alone.
bool check_right_factor(const LeftIdeal& ideal, const OreOperator& factor, const TermOrder& ord);

}  // namespace opal
