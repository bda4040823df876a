#include <doctest.h>

#include "av/numerical.hpp"
#include "av/poly.hpp"

using namespace av;

TEST_CASE("divisor generator counts") {
    VarietyModel E = make_variety({{Factor{"E", 1, EndOrder{}}}});
    VarietyModel E2 = make_variety({{Factor{"E", 2, EndOrder{}}}});
    VarietyModel E1xE2 =
        make_variety({{Factor{"E1", 1, EndOrder{}}, Factor{"E2", 1, EndOrder{}}}});
    VarietyModel Ecm2 = make_variety({{Factor{"E", 2, EndOrder{false, 0, 1}}}});
    CHECK(divisor_generators(E).size() == 1);
    CHECK(divisor_generators(E1xE2).size() == 2);
    CHECK(divisor_generators(E2).size() == 4);
    CHECK(divisor_generators(Ecm2).size() == 6);
}

TEST_CASE("diagonal divisor on a self product") {
    VarietyModel E2 = make_variety({{Factor{"E", 2, EndOrder{}}}});
    GradedClass D = divisor_generators(E2)[2];
    std::vector<Rat> want = {1, 0, -1, 1, 0, 1};
    CHECK(D.comp[2] == want);
    CHECK(poincare_pairing(E2.cohom, D, D) == 0);
    GradedClass F0 = basis_class(E2.cohom, 0b0011), F1 = basis_class(E2.cohom, 0b1100);
    CHECK(poincare_pairing(E2.cohom, D, F0) == 1);
    CHECK(poincare_pairing(E2.cohom, D, F1) == 1);
}

TEST_CASE("lattice dimensions by codimension") {
    VarietyModel E2 = make_variety({{Factor{"E", 2, EndOrder{}}}});
    VarietyModel E1xE2 =
        make_variety({{Factor{"E1", 1, EndOrder{}}, Factor{"E2", 1, EndOrder{}}}});
    VarietyModel Ecm2 = make_variety({{Factor{"E", 2, EndOrder{false, 0, 1}}}});
    CHECK(build_Nk(E1xE2, 1).dimension == 2);
    CHECK(build_Nk(E2, 1).dimension == 3);
    CHECK(build_Nk(Ecm2, 1).dimension == 4);
    CHECK(build_Nk(E2, 0).dimension == 1);
    CHECK(build_Nk(E2, 2).dimension == 1);
}

TEST_CASE("quotient gram rows span the quotient") {
    VarietyModel Ecm2 = make_variety({{Factor{"E", 2, EndOrder{false, 0, 1}}}});
    NumericalLattice lat = build_Nk(Ecm2, 1);
    Mat rows((int)lat.quotient_basis.size(), lat.gram.cols);
    for (size_t b = 0; b < lat.quotient_basis.size(); ++b)
        for (int j = 0; j < lat.gram.cols; ++j)
            rows.at((int)b, j) = lat.gram.at(lat.quotient_basis[b], j);
    CHECK(rank(rows) == lat.dimension);
}

TEST_CASE("induced matrices of scalar maps") {
    VarietyModel E2 = make_variety({{Factor{"E", 2, EndOrder{}}}});
    NumericalLattice lat = build_Nk(E2, 1);
    InducedAction ind = induced_action(diagonal(E2), lat, E2);
    CHECK(ind.matrix == Mat::identity(3));
    CHECK(ind.saturation_events.empty());
    CHECK(ind.descent_violations.empty());
    InducedAction m2 = induced_action(graph(multiplication_map(2, E2.spec), E2), lat, E2);
    CHECK(m2.matrix == Mat::identity(3).scaled(4));
}

TEST_CASE("induced action on a full CM lattice") {
    VarietyModel Ecm2 = make_variety({{Factor{"E", 2, EndOrder{false, 0, 1}}}});
    NumericalLattice lat = build_Nk(Ecm2, 1);
    EndMatrix dphi1 = identity_endo(Ecm2.spec);
    dphi1.blocks[0][0][0] = {1, 1};
    Correspondence cphi = graph(dphi1, Ecm2);
    InducedAction ind = induced_action(cphi, lat, Ecm2);
    CHECK(ind.saturation_events.empty());
    CHECK(ind.matrix.rows == 4);
    CHECK(char_poly(ind.matrix).eval(Rat(2)) == 0);

    EndMatrix b = zero_endo(Ecm2.spec);
    b.blocks[0][0][1] = {1, -1};
    b.blocks[0][1][0] = {2, 0};
    b.blocks[0][1][1] = {1, 1};
    Correspondence cb = graph(b, Ecm2);
    InducedAction ib = induced_action(cb, lat, Ecm2);
    InducedAction icomp = induced_action(compose(cb, cphi, Ecm2), lat, Ecm2);
    CHECK(icomp.matrix == ind.matrix * ib.matrix);

    GradedAction act = graded_action(cphi, Ecm2);
    CHECK(lattice_degree(act, lat, Ecm2) == degree_sequence(cphi, Ecm2)[1]);
    GradedAction actb = graded_action(cb, Ecm2);
    CHECK(lattice_degree(actb, lat, Ecm2) == degree_sequence(cb, Ecm2)[1]);
}

TEST_CASE("algebraic and transcendental pieces") {
    VarietyModel E = make_variety({{Factor{"E", 1, EndOrder{}}}});
    VarietyModel E2 = make_variety({{Factor{"E", 2, EndOrder{}}}});
    VarietyModel Ecm2 = make_variety({{Factor{"E", 2, EndOrder{false, 0, 1}}}});
    AlgTrSplit s = alg_tr_split(Ecm2, 1);
    CHECK(s.algebraic.size() == 4);
    CHECK(s.transcendental.size() == 2);
    CHECK(s.direct);
    AlgTrSplit s0 = alg_tr_split(E2, 0);
    CHECK(s0.algebraic.size() == 1);
    CHECK(s0.transcendental.empty());
    CHECK(s0.direct);
    AlgTrSplit sE = alg_tr_split(E, 1);
    CHECK(sE.algebraic.size() == 1);
    CHECK(sE.transcendental.empty());
    CHECK(sE.direct);
    AlgTrSplit s2 = alg_tr_split(E2, 1);
    CHECK(s2.algebraic.size() == 3);
    CHECK(s2.transcendental.size() == 3);
    CHECK(s2.direct);
}
