#include "opal/series.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace opal {

namespace {

bool contained_in(const GroebnerBasis& smaller, const GroebnerBasis& larger) {
    for (const auto& g : smaller.elements())
        if (!member(g, larger)) return false;
    return true;
}

std::int64_t a_at(const Gauge& g, int tau) { return g.tau == tau ? g.a_tau : 0; }

}  // namespace

Chain Chain::from_ideals(std::vector<GroebnerBasis> ideals, TermOrder ord,
                         const BuchbergerOptions& options) {
    if (ideals.empty()) throw InvalidChain("chain has no ideals");
    for (std::size_t i = 0; i + 1 < ideals.size(); ++i)
        if (!contained_in(ideals[i], ideals[i + 1]))
            throw InvalidChain("ideal " + std::to_string(i) + " is not contained in ideal " +
                               std::to_string(i + 1));
    if (!ideals.back().is_unit_ideal()) {
        const FieldSpecPtr& spec = ideals.front().spec();
        ideals.push_back(buchberger(LeftIdeal::of({OreOperator::one(spec)}), ord, options));
    }
    return Chain(std::move(ideals), std::move(ord));
}

Chain chain_from_right_factorization(std::span<const OreOperator> factors, const TermOrder& ord,
                                     const BuchbergerOptions& options) {
    if (factors.empty()) throw EmptyFactorList();
    std::vector<GroebnerBasis> ideals;
    // I_i = <F_{i+1} ... F_r>, so the full product sits at the bottom.
    for (std::size_t i = 0; i < factors.size(); ++i) {
        OreOperator tail = factors[i];
        for (std::size_t j = i + 1; j < factors.size(); ++j) tail = tail * factors[j];
        if (i == 0) {
            OreOperator full = tail;
            if (!verify_factorization(full, factors)) throw InvalidChain("factors do not multiply");
        }
        ideals.push_back(buchberger(LeftIdeal::of({tail}), ord, options));
    }
    return Chain::from_ideals(std::move(ideals), ord, options);
}

GroebnerBasis group_sum(const LeftIdeal& lhs, const LeftIdeal& rhs, const TermOrder& ord,
                        const BuchbergerOptions& options) {
    return ideal_intersect(lhs, rhs, ord, options);
}

GroebnerBasis group_intersect(const LeftIdeal& lhs, const LeftIdeal& rhs, const TermOrder& ord,
                              const BuchbergerOptions& options) {
    return ideal_sum(lhs, rhs, ord, options);
}

std::string QuotientGauge::to_string() const {
    return tau_drop ? "(type drop)" : gauge.to_string();
}

SeriesReport analyze(const Chain& chain, const BuchbergerOptions& options) {
    (void)options;
    const auto& ideals = chain.ideals();
    for (std::size_t i = 0; i + 1 < ideals.size(); ++i)
        if (!contained_in(ideals[i], ideals[i + 1]))
            throw InvalidChain("ideal " + std::to_string(i) + " is not contained in ideal " +
                               std::to_string(i + 1));

    SeriesReport report;
    for (const auto& basis : ideals) report.step_gauges.push_back(gauge_of_basis(basis));
    report.chain_tau = report.step_gauges.front().tau;

    const std::size_t steps = chain.steps();
    for (std::size_t i = 0; i < steps; ++i) {
        // proper groups in the chain are G_0 .. G_{r-1}; the unit ideal ends it
        if (i + 1 < steps && report.step_gauges[i + 1].tau != report.chain_tau)
            report.tau_uniform = false;
        std::int64_t diff = a_at(report.step_gauges[i], report.chain_tau) -
                            a_at(report.step_gauges[i + 1], report.chain_tau);
        QuotientGauge q;
        if (diff > 0) {
            q.gauge = Gauge{report.chain_tau, diff};
            if (chain.spec()->num_derivations() == 2 && q.gauge == Gauge{1, 1})
                report.annotations.push_back(
                    "step " + std::to_string(i) +
                    ": quotient of gauge (1, 1) in two derivations is almost simple");
        } else {
            q.tau_drop = true;
        }
        report.quotient_gauges.push_back(q);
        if (i + 1 < steps &&
            a_at(report.step_gauges[i], report.chain_tau) <=
                a_at(report.step_gauges[i + 1], report.chain_tau))
            report.strictly_decreasing = false;
    }
    return report;
}

namespace {

struct Tagged {
    GroebnerBasis basis;
    std::size_t origin;  // original step the refined ideal came from
};

// Flattened refinement of `target` against `other`:
// ideal(G_{i,j}) = intersect(I_{i+1}, sum(J_j, I_i)), rows i, then the unit.
std::vector<Tagged> raw_refinement(const Chain& target, const Chain& other,
                                   const BuchbergerOptions& options) {
    const auto& I = target.ideals();
    const auto& J = other.ideals();
    std::vector<Tagged> refined;
    for (std::size_t i = 0; i + 1 < I.size(); ++i) {
        for (std::size_t j = 0; j + 1 < J.size(); ++j) {
            GroebnerBasis inner =
                ideal_sum(J[j].as_ideal(), I[i].as_ideal(), target.ord(), options);
            GroebnerBasis step =
                ideal_intersect(I[i + 1].as_ideal(), inner.as_ideal(), target.ord(), options);
            refined.push_back({std::move(step), i});
        }
    }
    refined.push_back({I.back(), I.size() - 2});
    return refined;
}

std::vector<Tagged> collapse_equal(std::vector<Tagged> chain) {
    std::vector<Tagged> out;
    for (auto& t : chain) {
        if (!out.empty() && same_ideal(out.back().basis, t.basis)) {
            // the surviving breakpoint owns the quotient below the group
            out.back().origin = t.origin;
            continue;
        }
        out.push_back(std::move(t));
    }
    return out;
}

}  // namespace

RefineResult refine(const Chain& lhs, const Chain& rhs, const BuchbergerOptions& options) {
    if (!same_ideal(lhs.ideals().front(), rhs.ideals().front())) throw MismatchedTop();

    const int chain_tau = gauge_of_basis(lhs.ideals().front()).tau;

    std::vector<std::string> absorbed;
    auto build_side = [&](const Chain& target, const Chain& other, const char* label) {
        std::vector<Tagged> steps = collapse_equal(raw_refinement(target, other, options));
        std::vector<Gauge> gauges;
        gauges.reserve(steps.size());
        for (const auto& t : steps) gauges.push_back(gauge_of_basis(t.basis));

        // Absorb sub-steps whose quotient has smaller type: drop the upper
        // breakpoint of such a quotient (never the ends), merging it into
        // the neighbouring step. Isogeny kernels of smaller type do not
        // change the type-tau quotient data.
        for (;;) {
            bool changed = false;
            for (std::size_t i = 0; i + 1 < steps.size(); ++i) {
                std::int64_t diff = a_at(gauges[i], chain_tau) - a_at(gauges[i + 1], chain_tau);
                if (diff != 0) continue;
                std::size_t victim;
                if (i > 0)
                    victim = i;
                else if (i + 1 < steps.size() - 1)
                    victim = i + 1;
                else
                    continue;  // single-step degenerate chain: leave as is
                absorbed.push_back(std::string(label) + ": absorbed a smaller-type quotient below step " +
                                   std::to_string(victim));
                steps.erase(steps.begin() + static_cast<std::ptrdiff_t>(victim));
                gauges.erase(gauges.begin() + static_cast<std::ptrdiff_t>(victim));
                changed = true;
                break;
            }
            if (!changed) break;
        }

        std::vector<GroebnerBasis> ideals;
        std::vector<std::size_t> pairing;
        ideals.reserve(steps.size());
        for (auto& t : steps) {
            ideals.push_back(std::move(t.basis));
            pairing.push_back(t.origin);
        }
        pairing.pop_back();  // the final unit ideal is not a step
        return std::make_pair(Chain::from_ideals(std::move(ideals), target.ord(), options),
                              std::move(pairing));
    };

    auto [left, left_pairing] = build_side(lhs, rhs, "left");
    auto [right, right_pairing] = build_side(rhs, lhs, "right");
    return RefineResult{std::move(left), std::move(right), std::move(absorbed),
                        std::move(left_pairing), std::move(right_pairing)};
}

CompareResult compare_quotient_gauges(const Chain& lhs, const Chain& rhs,
                                      const BuchbergerOptions& options) {
    SeriesReport left = analyze(lhs, options);
    SeriesReport right = analyze(rhs, options);
    CompareResult result;
    auto collect = [](const SeriesReport& report) {
        std::vector<Gauge> gauges;
        for (const auto& q : report.quotient_gauges)
            if (!q.tau_drop) gauges.push_back(q.gauge);
        std::sort(gauges.begin(), gauges.end());
        return gauges;
    };
    result.left_multiset = collect(left);
    result.right_multiset = collect(right);
    result.verdict = left.chain_tau == right.chain_tau &&
                             result.left_multiset == result.right_multiset
                         ? Verdict::Consistent
                         : Verdict::Inconsistent;
    return result;
}

}  // namespace opal
