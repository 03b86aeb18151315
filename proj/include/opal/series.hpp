#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "opal/gauge.hpp"

namespace opal {

// Increasing sequence of left ideals I_0 <= I_1 <= ... <= I_r with I_r the
// unit ideal, encoding the decreasing sequence of solution groups
// G_0 > G_1 > ... > G_r = {0}: larger ideal, smaller group. Subgroup
// language translates at this boundary: group sum <-> ideal intersection,
// group intersection <-> ideal sum.
class Chain {
public:
    // Validates containments by membership and that the last ideal is the
    // unit ideal (appended automatically when missing). Throws InvalidChain.
    static Chain from_ideals(std::vector<GroebnerBasis> ideals, TermOrder ord,
                             const BuchbergerOptions& options = {});

    const std::vector<GroebnerBasis>& ideals() const { return ideals_; }
    const TermOrder& ord() const { return ord_; }
    const FieldSpecPtr& spec() const { return ideals_.front().spec(); }
    std::size_t steps() const { return ideals_.size() - 1; }

private:
    Chain(std::vector<GroebnerBasis> ideals, TermOrder ord)
        : ideals_(std::move(ideals)), ord_(std::move(ord)) {}

    std::vector<GroebnerBasis> ideals_;
    TermOrder ord_;
};

// Chain of the right-factor subgroups of a factored operator L = F_1...F_r:
// I_i = <F_{i+1}...F_r>, closed off by the unit ideal.
Chain chain_from_right_factorization(std::span<const OreOperator> factors, const TermOrder& ord,
                                     const BuchbergerOptions& options = {});

// Ideal of the group sum G(I) + G(J): the intersection of the ideals.
GroebnerBasis group_sum(const LeftIdeal& lhs, const LeftIdeal& rhs, const TermOrder& ord,
                        const BuchbergerOptions& options = {});
// Ideal of the group intersection: the sum of the ideals.
GroebnerBasis group_intersect(const LeftIdeal& lhs, const LeftIdeal& rhs, const TermOrder& ord,
                              const BuchbergerOptions& options = {});

// Gauge bookkeeping of one chain step. The quotient G_i/G_{i+1} contributes
// a_tau(I_i) - a_tau(I_{i+1}) at the chain's type; a zero difference means
// the quotient has strictly smaller type (its exact gauge is not computed).
struct QuotientGauge {
    bool tau_drop = false;  // quotient type < chain type
    Gauge gauge;            // meaningful when !tau_drop

    bool operator==(const QuotientGauge&) const = default;
    std::string to_string() const;
};

struct SeriesReport {
    int chain_tau = -1;
    std::vector<Gauge> step_gauges;            // one per ideal, unit ideal included
    std::vector<QuotientGauge> quotient_gauges;  // one per step
    bool tau_uniform = true;        // every proper step has the chain's type
    bool strictly_decreasing = true;  // a_tau strictly drops along proper steps
    std::vector<std::string> annotations;
};

// Per-step and quotient gauges of a valid chain. Throws InvalidChain when a
// containment fails.
SeriesReport analyze(const Chain& chain, const BuchbergerOptions& options = {});

struct RefineResult {
    Chain left;   // refinement of the first argument
    Chain right;  // refinement of the second
    // Sub-quotients of smaller type absorbed into neighbouring steps while
    // collapsing, reported for audit.
    std::vector<std::string> absorbed;
    // pairing[side][k] = original step index owning refined step k
    std::vector<std::size_t> left_pairing;
    std::vector<std::size_t> right_pairing;
};

// Mutual refinement through G_{i,j} = G_{i+1}(H_j meet G_i), realized on
// ideals as intersect(I_{i+1}, sum(J_j, I_i)). Consecutive equal ideals are
// collapsed and sub-steps whose quotient drops type are absorbed, so every
// refined step carries a quotient of the chain's type. Throws MismatchedTop
// unless both chains start at the same ideal.
RefineResult refine(const Chain& lhs, const Chain& rhs, const BuchbergerOptions& options = {});

enum class Verdict { Consistent, Inconsistent };

struct CompareResult {
    Verdict verdict = Verdict::Inconsistent;
    // quotient gauges of the chain's type, sorted (multiset form)
    std::vector<Gauge> left_multiset;
    std::vector<Gauge> right_multiset;
};

// Necessary condition for the pairwise-isogeny conclusion: the multisets of
// type-tau quotient gauges agree. Never a sufficiency claim.
CompareResult compare_quotient_gauges(const Chain& lhs, const Chain& rhs,
                                      const BuchbergerOptions& options = {});

}  // namespace opal
