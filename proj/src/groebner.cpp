#include "opal/groebner.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <utility>

namespace opal {

LeftIdeal LeftIdeal::of(std::initializer_list<OreOperator> gens) {
    return of(std::vector<OreOperator>(gens));
}

LeftIdeal LeftIdeal::of(std::vector<OreOperator> gens) {
    assert(!gens.empty());
    LeftIdeal ideal;
    ideal.spec = gens.front().spec();
    ideal.generators = std::move(gens);
    for (const auto& g : ideal.generators)
        if (g.spec().get() != ideal.spec.get()) throw SpecMismatch();
    return ideal;
}

bool GroebnerBasis::is_unit_ideal() const {
    return elements_.size() == 1 && elements_.front().order() == 0;
}

LeftIdeal GroebnerBasis::as_ideal() const {
    if (elements_.empty()) return LeftIdeal::of({OreOperator::zero(spec_)});
    LeftIdeal ideal;
    ideal.spec = spec_;
    ideal.generators = elements_;
    return ideal;
}

namespace {

// Autoreduction: drop elements whose leading index is divisible by another's,
// then tail-reduce every survivor against the rest until stable.
std::vector<OreOperator> autoreduce(std::vector<OreOperator> basis, const TermOrder& ord) {
    auto lead = [&](const OreOperator& g) { return g.leading(ord).first; };

    std::sort(basis.begin(), basis.end(),
              [&](const OreOperator& a, const OreOperator& b) { return ord.less(lead(a), lead(b)); });
    std::vector<OreOperator> minimal;
    for (const auto& g : basis) {
        bool redundant = false;
        for (const auto& kept : minimal)
            if (exp_divides(lead(kept), lead(g))) {
                redundant = true;
                break;
            }
        if (!redundant) minimal.push_back(g);
    }

    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < minimal.size(); ++i) {
            std::vector<OreOperator> others;
            others.reserve(minimal.size() - 1);
            for (std::size_t j = 0; j < minimal.size(); ++j)
                if (j != i) others.push_back(minimal[j]);
            if (others.empty()) break;
            OreOperator reduced = right_reduce(minimal[i], others, ord).remainder;
            if (reduced != minimal[i]) {
                // Leading terms form an antichain, so the head survives.
                assert(!reduced.is_zero());
                minimal[i] = reduced.monic(ord);
                changed = true;
            }
        }
    }
    std::sort(minimal.begin(), minimal.end(),
              [&](const OreOperator& a, const OreOperator& b) { return ord.less(lead(a), lead(b)); });
    return minimal;
}

}  // namespace

GroebnerBasis buchberger(const LeftIdeal& ideal, const TermOrder& ord,
                         const BuchbergerOptions& options) {
    assert(ord.arity() == ideal.spec->num_derivations());

    std::vector<OreOperator> basis;
    using Pair = std::pair<std::size_t, std::size_t>;
    // Normal strategy: process the pair with the smallest lcm first.
    auto pair_less = [&](const Pair& a, const Pair& b, const std::vector<MultiIndex>& leads) {
        MultiIndex la = exp_max(leads[a.first], leads[a.second]);
        MultiIndex lb = exp_max(leads[b.first], leads[b.second]);
        if (auto c = ord.compare(la, lb); c != 0) return c == std::strong_ordering::less;
        return a < b;
    };

    std::vector<MultiIndex> leads;
    std::vector<Pair> queue;
    auto push_element = [&](OreOperator g) {
        g = g.monic(ord);
        std::size_t index = basis.size();
        for (std::size_t j = 0; j < index; ++j) queue.emplace_back(j, index);
        basis.push_back(std::move(g));
        leads.push_back(basis.back().leading(ord).first);
    };

    for (const auto& gen : ideal.generators) {
        if (gen.is_zero()) continue;
        OreOperator reduced = basis.empty() ? gen : right_reduce(gen, basis, ord).remainder;
        if (!reduced.is_zero()) push_element(std::move(reduced));
    }
    if (basis.empty()) return GroebnerBasis({}, ord, ideal.spec);

    std::size_t processed = 0;
    while (!queue.empty()) {
        auto best = std::min_element(queue.begin(), queue.end(), [&](const Pair& a, const Pair& b) {
            return pair_less(a, b, leads);
        });
        Pair pair = *best;
        queue.erase(best);
        if (++processed > options.pair_budget)
            throw ResourceExceeded("S-pair budget of " + std::to_string(options.pair_budget) +
                                   " exhausted");

        const MultiIndex& li = leads[pair.first];
        const MultiIndex& lj = leads[pair.second];
        MultiIndex lcm = exp_max(li, lj);
        // No coprime-criterion shortcut: with derivations acting on the
        // coefficients, S-pairs of disjoint leading indices can still leave
        // nonzero remainders (e.g. dx+1 and dy-1/x meet in a unit).

        auto spoly_part = [&](std::size_t k) {
            const OreOperator& g = basis[k];
            FieldElement inv_lc = g.leading(ord).second.inverse();
            return OreOperator::term(std::move(inv_lc), exp_sub(lcm, leads[k])) * g;
        };
        OreOperator spoly = spoly_part(pair.first) - spoly_part(pair.second);
        if (spoly.is_zero()) continue;
        OreOperator reduced = right_reduce(spoly, basis, ord).remainder;
        if (!reduced.is_zero()) push_element(std::move(reduced));
    }

    std::vector<OreOperator> final_basis = autoreduce(std::move(basis), ord);
    // A unit in the basis means the whole ring.
    for (const auto& g : final_basis)
        if (g.order() == 0) return GroebnerBasis({OreOperator::one(ideal.spec)}, ord, ideal.spec);
    return GroebnerBasis(std::move(final_basis), ord, ideal.spec);
}

bool member(const OreOperator& f, const GroebnerBasis& basis) {
    if (f.is_zero()) return true;
    if (basis.is_zero_ideal()) return false;
    return right_reduce(f, basis.elements(), basis.order()).remainder.is_zero();
}

bool same_ideal(const GroebnerBasis& a, const GroebnerBasis& b) {
    for (const auto& g : a.elements())
        if (!member(g.transported(b.spec()), b)) return false;
    for (const auto& g : b.elements())
        if (!member(g.transported(a.spec()), a)) return false;
    return true;
}

GroebnerBasis ideal_sum(const LeftIdeal& lhs, const LeftIdeal& rhs, const TermOrder& ord,
                        const BuchbergerOptions& options) {
    if (lhs.spec.get() != rhs.spec.get()) throw SpecMismatch();
    std::vector<OreOperator> gens = lhs.generators;
    gens.insert(gens.end(), rhs.generators.begin(), rhs.generators.end());
    return buchberger(LeftIdeal::of(std::move(gens)), ord, options);
}

GroebnerBasis ideal_intersect(const LeftIdeal& lhs, const LeftIdeal& rhs, const TermOrder& ord,
                              const BuchbergerOptions& options) {
    if (lhs.spec.get() != rhs.spec.get()) throw SpecMismatch();
    const FieldSpecPtr& spec = lhs.spec;
    const std::size_t m = spec->num_derivations();

    std::string tag_name = "_w";
    while (spec->derivation_index(tag_name) || spec->symbol_index(tag_name)) tag_name += "_";
    FieldSpecPtr extended = spec->with_zero_derivation(tag_name);

    OreOperator w = OreOperator::derivation(extended, m);
    OreOperator one_minus_w = OreOperator::one(extended) - w;

    std::vector<OreOperator> gens;
    for (const auto& f : lhs.generators)
        if (!f.is_zero()) gens.push_back(w * f.transported(extended));
    for (const auto& g : rhs.generators)
        if (!g.is_zero()) gens.push_back(one_minus_w * g.transported(extended));
    if (gens.empty())  // one side is the zero ideal
        return buchberger(LeftIdeal::of({OreOperator::zero(spec)}), ord, options);

    std::vector<std::size_t> precedence =
        ord.kind() == TermOrder::Kind::GradedLex
            ? ord.precedence()
            : [m] {
                  std::vector<std::size_t> p(m);
                  for (std::size_t i = 0; i < m; ++i) p[i] = i;
                  return p;
              }();
    TermOrder elim = TermOrder::block_elimination(m, precedence);

    GroebnerBasis staged = buchberger(LeftIdeal::of(std::move(gens)), elim, options);

    std::vector<OreOperator> tag_free;
    for (const auto& g : staged.elements()) {
        bool free = true;
        for (const auto& [index, coeff] : g.terms())
            if (index[m] != 0) {
                free = false;
                break;
            }
        if (free) tag_free.push_back(g.transported(spec));
    }
    if (tag_free.empty()) tag_free.push_back(OreOperator::zero(spec));
    return buchberger(LeftIdeal::of(std::move(tag_free)), ord, options);
}

std::optional<OreOperator> principal_generator(const GroebnerBasis& basis) {
    if (basis.elements().size() == 1) return basis.elements().front();
    return std::nullopt;
}

bool check_right_factor(const LeftIdeal& ideal, const OreOperator& factor, const TermOrder& ord) {
    if (factor.is_zero()) throw DivisionByZero();
    const OreOperator divisors[] = {factor};
    for (const auto& g : ideal.generators)
        if (!right_reduce(g, divisors, ord).remainder.is_zero()) return false;
    return true;
}

}  // namespace opal
