#include <doctest.h>

#include "av/errors.hpp"
#include "av/spectral.hpp"

using namespace av;

namespace {
const Rat kTol(1, 1000000000);
}

TEST_CASE("chi of scalar maps is exact") {
    VarietyModel E2 = make_variety({{Factor{"E", 2, EndOrder{}}}});
    Correspondence g3 = graph(multiplication_map(3, E2.spec), E2);
    GradedAction act = graded_action(g3, E2);
    for (int i = 0; i <= 4; ++i) {
        Interval c = chi(act, i, kTol);
        Rat want = rat_pow(Rat(3), i);
        CHECK(c.lo == want);
        CHECK(c.hi == want);
    }
}

TEST_CASE("gaussian shift has half-integral weights") {
    VarietyModel Ecm = make_variety({{Factor{"E", 1, EndOrder{false, 0, 1}}}});
    EndMatrix phi = zero_endo(Ecm.spec);
    phi.blocks[0][0][0] = {1, 1};
    Correspondence c = graph(phi, Ecm);
    GradedAction act = graded_action(c, Ecm);
    Interval c0 = chi(act, 0, kTol), c1 = chi(act, 1, kTol), c2 = chi(act, 2, kTol);
    CHECK(c0.lo == 1);
    CHECK(c0.hi == 1);
    CHECK(c2.lo == 2);
    CHECK(c2.hi == 2);
    CHECK(c1.lo * c1.lo <= 2);
    CHECK(c1.hi * c1.hi >= 2);
    CHECK(c1.width() <= kTol);
    WeilVerdict w = weil_check(act.mats[1], Rat(2), 1, kTol);
    CHECK(w.pass());
    CHECK(w.sign == 1);
    CHECK(weil_check(act.mats[0], Rat(2), 0, kTol).pass());
    CHECK(weil_check(act.mats[2], Rat(2), 2, kTol).pass());
    CHECK(is_semisimple(act.mats[1]));
}

TEST_CASE("shear passes moduli but fails semisimplicity") {
    VarietyModel E2 = make_variety({{Factor{"E", 2, EndOrder{}}}});
    EndMatrix uni = identity_endo(E2.spec);
    uni.blocks[0][0][1] = {1, 0};
    Mat U = realize_pullback(uni, E2.spec);
    WeilVerdict w = weil_check(U, Rat(1), 1, kTol);
    CHECK(w.functional_equation_ok);
    CHECK(w.moduli_ok);
    CHECK(!is_semisimple(U));
    SpectralReport rep = spectral_report(U, kTol);
    CHECK(!rep.semisimple);
    CHECK(poly_divides(rep.min_poly, rep.char_poly));
    CHECK(rep.radius.lo <= 1);
    CHECK(rep.radius.hi >= 1);
    CHECK(rep.radius.width() <= kTol);
}

TEST_CASE("mixed moduli fail the weight check") {
    VarietyModel E2 = make_variety({{Factor{"E", 2, EndOrder{}}}});
    EndMatrix d12 = zero_endo(E2.spec);
    d12.blocks[0][0][0] = {1, 0};
    d12.blocks[0][1][1] = {2, 0};
    Mat M = realize_pullback(d12, E2.spec);
    CHECK(!weil_check(M, Rat(2), 1, kTol).pass());
}

TEST_CASE("growth sequence 2^m + 1 certifies degree 2") {
    VarietyModel Ecm2 = make_variety({{Factor{"E", 2, EndOrder{false, 0, 1}}}});
    EndMatrix dphi1 = identity_endo(Ecm2.spec);
    dphi1.blocks[0][0][0] = {1, 1};
    Correspondence c = graph(dphi1, Ecm2);
    GradedAction act = graded_action(c, Ecm2);
    GrowthEstimate g = lambda_growth(act, 1, 40, Ecm2, kTol);
    CHECK(g.sequence[0] == 3);
    CHECK(g.sequence[1] == 5);
    CHECK(g.sequence[2] == 9);
    CHECK(g.stabilized);
    CHECK(!g.all_zero);
    REQUIRE(g.recurrence.coeffs.size() == 2);
    CHECK(g.recurrence.coeffs[0] == 3);
    CHECK(g.recurrence.coeffs[1] == -2);
    CHECK(g.dominant_modulus.lo == 2);
    CHECK(g.dominant_modulus.hi == 2);
    LambdaNumerical ln = lambda_numerical(act, build_Nk(Ecm2, 1), Ecm2, kTol);
    CHECK(ln.saturation_events.empty());
    CHECK(ln.value.contains(Rat(2)));
    CHECK(ln.value.width() <= kTol);
    DdcVerdict dv = ddc_check(act, 1, build_Nk(Ecm2, 1), Ecm2, Rat(1, 1000000));
    CHECK(dv.pass);
    CHECK(!dv.inconclusive);
    Rat ratio = g.sequence[39] / g.sequence[38];
    CHECK(rat_abs(ratio - 2) < kTol);
}

TEST_CASE("shear growth is polynomial with modulus one") {
    VarietyModel E2 = make_variety({{Factor{"E", 2, EndOrder{}}}});
    EndMatrix uni = identity_endo(E2.spec);
    uni.blocks[0][0][1] = {1, 0};
    Correspondence c = graph(uni, E2);
    GrowthEstimate g = lambda_growth(c, 1, 40, E2, kTol);
    CHECK(g.sequence[0] == 3);
    CHECK(g.sequence[1] == 6);
    CHECK(g.sequence[2] == 11);
    CHECK(g.stabilized);
    CHECK(g.dominant_modulus.lo == 1);
    CHECK(g.dominant_modulus.hi == 1);
    CHECK(ddc_check(c, 1, E2, Rat(1, 1000000)).pass);
}

TEST_CASE("odd chi is dominated by adjacent even ones") {
    VarietyModel Ecm = make_variety({{Factor{"E", 1, EndOrder{false, 0, 1}}}});
    EndMatrix phi = zero_endo(Ecm.spec);
    phi.blocks[0][0][0] = {1, 1};
    Correspondence c = graph(phi, Ecm);
    DinhVerdict v = dinh_check(c, 0, Ecm, kTol);
    CHECK(v.pass);
    CHECK(v.slack >= -kTol);
}

TEST_CASE("trace ratios of a scalar map") {
    VarietyModel E2 = make_variety({{Factor{"E", 2, EndOrder{}}}});
    Correspondence g5 = graph(multiplication_map(5, E2.spec), E2);
    TraceRatios tr = trace_bound_ratios(g5, E2);
    REQUIRE(tr.even.size() == 3);
    REQUIRE(tr.odd_sq.size() == 2);
    CHECK(tr.even[0] == Rat(1, 2));
    CHECK(tr.even[1] == 3);
    CHECK(tr.even[2] == Rat(1, 2));
}

TEST_CASE("interpolated bounds for a log-concave sequence") {
    LogConcaveBounds lb = log_concave_bounds({Rat(2), Rat(3), Rat(4)});
    CHECK(lb.witness_sq == (std::vector<Rat>{Rat(2, 3), Rat(3, 4)}));
    REQUIRE(lb.bounds.size() == 5);
    CHECK(lb.bounds[0].square == 4);
    CHECK(lb.bounds[1].square == 6);
    CHECK(lb.bounds[2].square == 9);
    CHECK(lb.bounds[3].square == 12);
    CHECK(lb.bounds[4].square == 16);

    std::vector<Rat> grid;
    for (int e = -10; e <= 10; ++e) grid.push_back(rat_pow(Rat(2), e));
    for (int i = 0; i <= 4; ++i) {
        Rat best(-1);
        for (const Rat& w : lb.witness_sq) {
            Rat v = envelope_value_sq(lb.a, w, i);
            if (best < 0 || v < best) best = v;
        }
        for (const Rat& r : grid) {
            Rat v = envelope_value_sq(lb.a, r * r, i);
            if (v < best) best = v;
        }
        CHECK(best == lb.bounds[(size_t)i].square);
    }

    std::vector<Rat> b;
    for (int i = 0; i <= 4; ++i)
        b.push_back(sqrt_enclosure(lb.bounds[(size_t)i].square, Rat(1, 100000)).lo);
    ReductionVerdict rv = reduction_oracle(lb.a, b, grid);
    CHECK(rv.premise_ok);
    CHECK(rv.conclusion_ok);
    CHECK(rv.implication_holds());

    std::vector<Rat> bad = b;
    bad[1] = Rat(5, 2);
    ReductionVerdict rb = reduction_oracle(lb.a, bad, grid);
    CHECK(!rb.premise_ok);
    CHECK(rb.premise_failure_point >= 0);
    CHECK(rb.premise_failure_point < (int)lb.witness_sq.size());
    CHECK(!rb.conclusion_ok);
    CHECK(rb.conclusion_failure_index == 1);

    LogConcaveBounds ones = log_concave_bounds({Rat(1), Rat(1), Rat(1)});
    for (const SqrtVal& s : ones.bounds) CHECK(s.square == 1);
    for (const Rat& w : ones.witness_sq) CHECK(w == 1);
}

TEST_CASE("non-log-concave input is rejected with the index") {
    bool threw = false;
    try {
        log_concave_bounds({Rat(1), Rat(1), Rat(2)});
    } catch (const InputError& e) {
        threw = std::string(e.what()).find("index 1") != std::string::npos;
    }
    CHECK(threw);
}

TEST_CASE("norm comparison ratios") {
    VarietyModel E2 = make_variety({{Factor{"E", 2, EndOrder{}}}});
    Correspondence g2c = graph(multiplication_map(2, E2.spec), E2);
    NormRatios nr = norm_comparison_ratios(g2c, 1, E2);
    CHECK(!nr.degenerate);
    CHECK(nr.even == 1);
    CHECK(nr.odd_sq.has_value());
    Correspondence dE = diagonal(E2);
    NormRatios nid = norm_comparison_ratios(dE, 1, E2);
    CHECK(nid.even == 1);
    CHECK(nid.odd_sq == Rat(1));
}

TEST_CASE("lambda of a scalar map is its degree power") {
    VarietyModel E2 = make_variety({{Factor{"E", 2, EndOrder{}}}});
    Correspondence g3 = graph(multiplication_map(3, E2.spec), E2);
    LambdaNumerical l1 = lambda_numerical(g3, 1, E2, kTol);
    CHECK(l1.value.lo == 9);
    CHECK(l1.value.hi == 9);
    LambdaNumerical l2 = lambda_numerical(g3, 2, E2, kTol);
    CHECK(l2.value.lo == 81);
    CHECK(l2.value.hi == 81);
}
