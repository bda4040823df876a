#include <doctest.h>

#include "av/exterior.hpp"
#include "av/rng.hpp"

using namespace av;

TEST_CASE("betti numbers and basis order") {
    CohomModel m2 = make_model(2);
    CHECK(m2.betti(0) == 1);
    CHECK(m2.betti(1) == 4);
    CHECK(m2.betti(2) == 6);
    CHECK(m2.betti(4) == 1);
    std::vector<uint32_t> want = {0b0011, 0b0101, 0b1001, 0b0110, 0b1010, 0b1100};
    CHECK(m2.basis[2] == want);
}

TEST_CASE("top integral of the symplectic power") {
    CohomModel m2 = make_model(2);
    CHECK(integrate(m2, theta_pow(m2, 2)) == 2);
    CohomModel m3 = make_model(3);
    CHECK(integrate(m3, theta_pow(m3, 3)) == 6);
}

TEST_CASE("wedge is graded commutative and associative") {
    CohomModel m2 = make_model(2);
    GradedClass a = basis_class(m2, 0b0001), b = basis_class(m2, 0b0010);
    GradedClass ab = wedge(m2, a, b), ba = wedge(m2, b, a);
    CHECK(ab == class_scale(Rat(-1), ba));
    GradedClass c = basis_class(m2, 0b0100);
    CHECK(wedge(m2, wedge(m2, a, b), c) == wedge(m2, a, wedge(m2, b, c)));
}

TEST_CASE("duality gram is a signed permutation") {
    for (int n = 1; n <= 4; ++n) {
        CohomModel mm = make_model(n);
        for (int i = 0; i <= mm.rank; ++i) {
            Mat g = pairing_gram(mm, i);
            for (int r = 0; r < g.rows; ++r) {
                int nz = 0;
                for (int cc = 0; cc < g.cols; ++cc)
                    if (g.at(r, cc) != 0) {
                        ++nz;
                        CHECK((g.at(r, cc) == 1 || g.at(r, cc) == -1));
                    }
                CHECK(nz == 1);
            }
            if (g.rows == g.cols) {
                Rat d = det(g);
                CHECK((d == 1 || d == -1));
            }
        }
    }
}

TEST_CASE("compound matrices are functorial") {
    Mat I4 = Mat::identity(4);
    CHECK(exterior_power_matrix(I4, 2) == Mat::identity(6));
    CHECK(exterior_power_matrix(I4.scaled(2), 2) == Mat::identity(6).scaled(4));
    DetRng rng(7);
    for (int trial = 0; trial < 5; ++trial) {
        Mat A(4, 4), B(4, 4);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                A.at(i, j) = Rat(rng.int_in(-3, 3));
                B.at(i, j) = Rat(rng.int_in(-3, 3));
            }
        for (int i = 0; i <= 4; ++i)
            CHECK(exterior_power_matrix(A * B, i) ==
                  exterior_power_matrix(A, i) * exterior_power_matrix(B, i));
    }
}

TEST_CASE("pushforward of a scalar map") {
    Mat twoI2 = Mat::identity(2).scaled(2);
    CHECK(pushforward_matrix(twoI2, 1) == Mat::identity(2).scaled(2));
}
