#include "doctest.h"
#include "opal/series.hpp"

using namespace opal;

namespace {

struct Plane {
    FieldSpecPtr spec =
        FieldSpecBuilder{}.derivation("dx").derivation("dy").variable("x").variable("y").build();
    TermOrder ord = TermOrder::graded_lex({0, 1});
    OreOperator dx = OreOperator::derivation(spec, 0);
    OreOperator dy = OreOperator::derivation(spec, 1);
    OreOperator x = OreOperator::coefficient(FieldElement::from_symbol(spec, 0));
    OreOperator one = OreOperator::one(spec);

    std::vector<OreOperator> landau_factors() const {
        return {dx + one, dx + one, dx + x * dy};
    }
    OreOperator landau() const { return (dx + one) * (dx + one) * (dx + x * dy); }
};

struct HeatPlane {
    FieldSpecPtr spec =
        FieldSpecBuilder{}.derivation("dx").derivation("dt").variable("x").variable("t").build();
    TermOrder ord = TermOrder::graded_lex({0, 1});
    OreOperator dx = OreOperator::derivation(spec, 0);
    OreOperator dt = OreOperator::derivation(spec, 1);
    OreOperator x = OreOperator::coefficient(FieldElement::from_symbol(spec, 0));
    OreOperator num(long v) const {
        return OreOperator::coefficient(FieldElement::from_rational(spec, v));
    }
    OreOperator heat() const { return dx * dx - dt; }
    OreOperator transport() const { return dx - x * dt; }
    OreOperator cartan() const { return (x * dx - x * x * dt - num(2)) * heat(); }
};

std::vector<Gauge> gauges_of(const std::vector<QuotientGauge>& qs) {
    std::vector<Gauge> out;
    for (const auto& q : qs) {
        REQUIRE_FALSE(q.tau_drop);
        out.push_back(q.gauge);
    }
    return out;
}

}  // namespace

TEST_CASE("chain from the cubic factorization") {
    Plane f;
    auto factors = f.landau_factors();
    Chain chain = chain_from_right_factorization(factors, f.ord);
    REQUIRE(chain.ideals().size() == 4);
    CHECK(member(f.landau(), chain.ideals()[0]));
    CHECK(member((f.dx + f.one) * (f.dx + f.x * f.dy), chain.ideals()[1]));
    CHECK(member(f.dx + f.x * f.dy, chain.ideals()[2]));
    CHECK(chain.ideals()[3].is_unit_ideal());
    // containments certified by membership
    for (std::size_t i = 0; i + 1 < chain.ideals().size(); ++i)
        for (const auto& g : chain.ideals()[i].elements())
            CHECK(member(g, chain.ideals()[i + 1]));

    CHECK_THROWS_AS(chain_from_right_factorization({}, f.ord), EmptyFactorList);

    std::vector<OreOperator> single = {f.landau()};
    Chain trivial = chain_from_right_factorization(single, f.ord);
    CHECK(trivial.ideals().size() == 2);
}

TEST_CASE("group operations on ideals") {
    Plane f;
    LeftIdeal a = LeftIdeal::of({f.dx + f.one});
    LeftIdeal b = LeftIdeal::of({f.dx + f.x * f.dy});

    // sum of the two order-one groups: the printed intersection ideal
    auto sum = group_sum(a, b, f.ord);
    CHECK(gauge_of_basis(sum) == Gauge{1, 2});

    // their intersection is the trivial group
    auto meet = group_intersect(a, b, f.ord);
    CHECK(meet.is_unit_ideal());

    // adding the trivial group changes nothing
    LeftIdeal unit = LeftIdeal::of({f.one});
    CHECK(same_ideal(group_sum(a, unit, f.ord), buchberger(a, f.ord)));

    // intersecting with itself changes nothing
    CHECK(same_ideal(group_intersect(a, a, f.ord), buchberger(a, f.ord)));
}

TEST_CASE("analysis of the cubic factorization chain") {
    Plane f;
    auto factors = f.landau_factors();
    Chain chain = chain_from_right_factorization(factors, f.ord);
    SeriesReport report = analyze(chain);

    CHECK(report.chain_tau == 1);
    CHECK(report.step_gauges ==
          std::vector<Gauge>{{1, 3}, {1, 2}, {1, 1}, {-1, 0}});
    CHECK(gauges_of(report.quotient_gauges) ==
          std::vector<Gauge>{{1, 1}, {1, 1}, {1, 1}});
    CHECK(report.tau_uniform);
    CHECK(report.strictly_decreasing);
    CHECK(report.annotations.size() == 3);

    // telescoping: quotient dimensions sum to the top typical dimension
    std::int64_t total = 0;
    for (const auto& q : report.quotient_gauges) total += q.gauge.a_tau;
    CHECK(total == report.step_gauges.front().a_tau);
}

TEST_CASE("explicit three-group chain") {
    Plane f;
    // G > H1 > H2 > 0 with H1 the printed intersection and H2 = ker(dx+1)
    auto g = buchberger(LeftIdeal::of({f.landau()}), f.ord);
    auto h1 = group_sum(LeftIdeal::of({f.dx + f.one}), LeftIdeal::of({f.dx + f.x * f.dy}), f.ord);
    auto h2 = buchberger(LeftIdeal::of({f.dx + f.one}), f.ord);
    Chain chain = Chain::from_ideals({g, h1, h2}, f.ord);
    SeriesReport report = analyze(chain);
    CHECK(report.step_gauges ==
          std::vector<Gauge>{{1, 3}, {1, 2}, {1, 1}, {-1, 0}});
    CHECK(gauges_of(report.quotient_gauges) ==
          std::vector<Gauge>{{1, 1}, {1, 1}, {1, 1}});
}

TEST_CASE("invalid chains are rejected") {
    Plane f;
    auto small = buchberger(LeftIdeal::of({f.dx + f.one}), f.ord);
    auto big = buchberger(LeftIdeal::of({f.landau()}), f.ord);
    // wrong direction: <dx+1> is not inside <L>
    CHECK_THROWS_AS(Chain::from_ideals({small, big}, f.ord), InvalidChain);
}

TEST_CASE("refinement of the quadratic-factor chain") {
    Plane f;
    auto factors = f.landau_factors();
    Chain fine = chain_from_right_factorization(factors, f.ord);
    std::vector<OreOperator> second = {
        f.dx * f.dx + f.x * f.dx * f.dy + f.dx + (f.x + f.one + f.one) * f.dy, f.dx + f.one};
    Chain coarse = chain_from_right_factorization(second, f.ord);
    REQUIRE(coarse.ideals().size() == 3);

    RefineResult result = refine(fine, coarse, {});

    // the already-composition chain is unchanged
    REQUIRE(result.left.ideals().size() == fine.ideals().size());
    for (std::size_t i = 0; i < fine.ideals().size(); ++i)
        CHECK(same_ideal(result.left.ideals()[i], fine.ideals()[i]));

    // the coarse side gains the group sum H1 = ker(dx+1) + ker(dx + x dy)
    REQUIRE(result.right.ideals().size() == 4);
    SeriesReport report = analyze(result.right);
    CHECK(report.step_gauges ==
          std::vector<Gauge>{{1, 3}, {1, 2}, {1, 1}, {-1, 0}});
    auto h1 = group_sum(LeftIdeal::of({f.dx + f.one}), LeftIdeal::of({f.dx + f.x * f.dy}), f.ord);
    CHECK(same_ideal(result.right.ideals()[1], h1));
    CHECK(same_ideal(result.right.ideals()[2],
                     buchberger(LeftIdeal::of({f.dx + f.one}), f.ord)));

    // both refined steps of the first coarse step descend from it
    CHECK(result.right_pairing == std::vector<std::size_t>{0, 0, 1});

    auto verdict = compare_quotient_gauges(fine, result.right, {});
    CHECK(verdict.verdict == Verdict::Consistent);
    CHECK(verdict.left_multiset == std::vector<Gauge>{{1, 1}, {1, 1}, {1, 1}});
}

TEST_CASE("refining a chain against itself changes nothing") {
    Plane f;
    auto factors = f.landau_factors();
    Chain chain = chain_from_right_factorization(factors, f.ord);
    RefineResult result = refine(chain, chain, {});
    REQUIRE(result.left.ideals().size() == chain.ideals().size());
    for (std::size_t i = 0; i < chain.ideals().size(); ++i) {
        CHECK(same_ideal(result.left.ideals()[i], chain.ideals()[i]));
        CHECK(same_ideal(result.right.ideals()[i], chain.ideals()[i]));
    }
    CHECK(result.left_pairing == std::vector<std::size_t>{0, 1, 2});
}

TEST_CASE("refinement of the two heat-side chains") {
    HeatPlane h;
    std::vector<OreOperator> via_heat = {h.x * h.dx - h.x * h.x * h.dt - h.num(2), h.heat()};
    std::vector<OreOperator> via_transport = {h.x * h.dx * h.dx - h.x * h.dt - h.num(2) * h.dx,
                                              h.transport()};
    Chain k1 = chain_from_right_factorization(via_heat, h.ord);
    Chain k2 = chain_from_right_factorization(via_transport, h.ord);

    RefineResult result = refine(k1, k2, {});
    CHECK(result.left.ideals().size() == 3);
    CHECK(result.right.ideals().size() == 3);

    SeriesReport left = analyze(result.left);
    SeriesReport right = analyze(result.right);
    CHECK(gauges_of(left.quotient_gauges) == std::vector<Gauge>{{1, 1}, {1, 2}});
    CHECK(gauges_of(right.quotient_gauges) == std::vector<Gauge>{{1, 2}, {1, 1}});

    auto verdict = compare_quotient_gauges(result.left, result.right, {});
    CHECK(verdict.verdict == Verdict::Consistent);
    CHECK(verdict.left_multiset == std::vector<Gauge>{{1, 1}, {1, 2}});

    // the intermediate groups themselves are not isogenous: gauges differ
    CHECK(gauge_of_basis(k1.ideals()[1]) == Gauge{1, 2});
    CHECK(gauge_of_basis(k2.ideals()[1]) == Gauge{1, 1});
}

TEST_CASE("mismatched tops are rejected") {
    Plane f;
    std::vector<OreOperator> a = {f.dx + f.one};
    std::vector<OreOperator> b = {f.dx + f.x * f.dy};
    Chain ca = chain_from_right_factorization(a, f.ord);
    Chain cb = chain_from_right_factorization(b, f.ord);
    CHECK_THROWS_AS(refine(ca, cb, {}), MismatchedTop);
}

TEST_CASE("inconsistent quotient multisets") {
    auto line = FieldSpecBuilder{}.derivation("d").variable("x").build();
    auto ord = TermOrder::graded_lex({0});
    auto d = OreOperator::derivation(line, 0);
    std::vector<OreOperator> two = {d * d};
    std::vector<OreOperator> three = {d * d * d};
    Chain c2 = chain_from_right_factorization(two, ord);
    Chain c3 = chain_from_right_factorization(three, ord);
    auto verdict = compare_quotient_gauges(c2, c3, {});
    CHECK(verdict.verdict == Verdict::Inconsistent);
    CHECK(verdict.left_multiset == std::vector<Gauge>{{0, 2}});
    CHECK(verdict.right_multiset == std::vector<Gauge>{{0, 3}});

    // symmetric and reflexive
    CHECK(compare_quotient_gauges(c3, c2, {}).verdict == Verdict::Inconsistent);
    CHECK(compare_quotient_gauges(c2, c2, {}).verdict == Verdict::Consistent);
}
