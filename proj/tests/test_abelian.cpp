#include <doctest.h>

#include "av/abelian.hpp"
#include "av/errors.hpp"
#include "av/poly.hpp"
#include "av/rng.hpp"

using namespace av;

TEST_CASE("gaussian multiplication realizes as a rotation-scaling") {
    AbelianSpec e_cm{{Factor{"E", 1, EndOrder{false, 0, 1}}}};
    validate_spec(e_cm);
    EndMatrix phi = zero_endo(e_cm);
    phi.blocks[0][0][0] = {1, 1};
    Mat M = realize_pullback(phi, e_cm);
    CHECK(M.at(0, 0) == 1);
    CHECK(M.at(0, 1) == -1);
    CHECK(M.at(1, 0) == 1);
    CHECK(M.at(1, 1) == 1);
    Poly cp = char_poly(M);
    CHECK(cp.c[0] == 2);
    CHECK(cp.c[1] == -2);
    CHECK(cp.c[2] == 1);
    CHECK(isogeny_degree(phi, e_cm) == 2);
}

TEST_CASE("realization reverses composition") {
    AbelianSpec ecm2{{Factor{"E", 2, EndOrder{false, 0, 1}}}};
    DetRng rng2(11);
    for (int trial = 0; trial < 10; ++trial) {
        EndMatrix f = zero_endo(ecm2), g = zero_endo(ecm2);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                f.blocks[0][i][j] = {Int(rng2.int_in(-2, 2)), Int(rng2.int_in(-2, 2))};
                g.blocks[0][i][j] = {Int(rng2.int_in(-2, 2)), Int(rng2.int_in(-2, 2))};
            }
        CHECK(realize_pullback(compose_endo(f, g, ecm2), ecm2) ==
              realize_pullback(g, ecm2) * realize_pullback(f, ecm2));
    }
}

TEST_CASE("polarized similitude detection") {
    AbelianSpec ecm2{{Factor{"E", 2, EndOrder{false, 0, 1}}}};
    CohomModel mdl2 = make_model(2);
    CHECK(is_polarized(multiplication_map(3, ecm2), ecm2, mdl2) == Rat(9));
    EndMatrix diag_phi1 = identity_endo(ecm2);
    diag_phi1.blocks[0][0][0] = {1, 1};
    CHECK(!is_polarized(diag_phi1, ecm2, mdl2).has_value());
    EndMatrix diag_phiphi = zero_endo(ecm2);
    diag_phiphi.blocks[0][0][0] = {1, 1};
    diag_phiphi.blocks[0][1][1] = {1, 1};
    CHECK(is_polarized(diag_phiphi, ecm2, mdl2) == Rat(2));
}

TEST_CASE("shear endomorphism is unipotent and unpolarized") {
    AbelianSpec e2{{Factor{"E", 2, EndOrder{}}}};
    CohomModel mdl2 = make_model(2);
    EndMatrix uni = identity_endo(e2);
    uni.blocks[0][0][1] = {1, 0};
    Mat U = realize_pullback(uni, e2);
    Mat wantU(4, 4);
    wantU.at(0, 0) = 1;
    wantU.at(1, 1) = 1;
    wantU.at(2, 0) = 1;
    wantU.at(2, 2) = 1;
    wantU.at(3, 1) = 1;
    wantU.at(3, 3) = 1;
    CHECK(U == wantU);
    CHECK(isogeny_degree(uni, e2) == 1);
    CHECK(!is_polarized(uni, e2, mdl2).has_value());
    CHECK(min_poly(U).deg() == 2);
}

TEST_CASE("imaginary orders are required") {
    CHECK_THROWS_AS(validate_order(EndOrder{false, 0, -1}), InputError);
}
