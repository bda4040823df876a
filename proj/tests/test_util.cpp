#include <doctest.h>

#include "av/matrix.hpp"
#include "av/poly.hpp"
#include "av/rational.hpp"
#include "av/recurrence.hpp"
#include "av/rng.hpp"
#include "av/roots.hpp"
#include "av/sha256.hpp"

using namespace av;

TEST_CASE("square root enclosures") {
    Interval s2 = sqrt_enclosure(Rat(2), Rat(1, 1000000));
    CHECK(s2.lo * s2.lo <= 2);
    CHECK(s2.hi * s2.hi >= 2);
    CHECK(s2.width() <= Rat(1, 1000000));
    Interval s4 = sqrt_enclosure(Rat(4), Rat(1, 1000000));
    CHECK(s4.lo == 2);
    CHECK(s4.hi == 2);
}

TEST_CASE("rational parsing") {
    CHECK(parse_rational("3/4") == Rat(3, 4));
    CHECK(parse_rational("-1.25") == Rat(-5, 4));
    CHECK(parse_rational("7") == Rat(7));
}

TEST_CASE("exact linear algebra") {
    Mat m(2, 2);
    m.at(0, 0) = 1;
    m.at(0, 1) = -1;
    m.at(1, 0) = 1;
    m.at(1, 1) = 1;
    CHECK(det(m) == 2);
    CHECK(inverse(m) * m == Mat::identity(2));
    CHECK(rank(m) == 2);
}

TEST_CASE("characteristic and minimal polynomials") {
    Mat m(2, 2);
    m.at(0, 0) = 1;
    m.at(0, 1) = -1;
    m.at(1, 0) = 1;
    m.at(1, 1) = 1;
    Poly cp = char_poly(m);
    REQUIRE(cp.c.size() == 3);
    CHECK(cp.c[0] == 2);
    CHECK(cp.c[1] == -2);
    CHECK(cp.c[2] == 1);
    CHECK(min_poly(m) == monic(cp));
    Mat nil(2, 2);
    nil.at(0, 1) = 1;
    CHECK(min_poly(nil).deg() == 2);
}

TEST_CASE("minimal linear recurrences") {
    std::vector<Rat> s;
    Rat p2 = 1;
    for (int i = 0; i < 12; ++i) {
        s.push_back(p2 + 1);
        p2 *= 2;
    }
    Recurrence rec = berlekamp_massey(s);
    REQUIRE(rec.coeffs.size() == 2);
    CHECK(rec.coeffs[0] == 3);
    CHECK(rec.coeffs[1] == -2);
    CHECK(verify_recurrence(s, rec));
    CHECK(recurrence_char_poly(rec).c.size() == 3);
}

TEST_CASE("certified root moduli") {
    Poly cp{{Rat(2), Rat(-2), Rat(1)}};
    RootCertificate rc = certify_roots(cp, Rat(1, 1000000000));
    CHECK(rc.radius.lo * rc.radius.lo <= 2);
    CHECK(rc.radius.hi * rc.radius.hi >= 2);
    CHECK(rc.radius.width() < Rat(1, 1000));

    Poly p = (Poly::x() - Poly::constant(1)) * (Poly::x() - Poly::constant(2)) *
             (Poly::x() - Poly::constant(3));
    RootCertificate rc2 = certify_roots(p, Rat(1, 1000000));
    CHECK(rc2.radius.lo <= 3);
    CHECK(rc2.radius.hi >= 3);
    CHECK(rc2.min_modulus.lo <= 1);
    CHECK(rc2.min_modulus.hi >= 1);

    Poly q{{Rat(0), Rat(0), Rat(0), Rat(25), Rat(-10), Rat(1)}};
    RootCertificate rc3 = certify_roots(q, Rat(1, 1000000));
    CHECK(rc3.radius.contains(Rat(5)));
    CHECK(rc3.min_modulus.lo == 0);
    CHECK(rc3.min_modulus.hi == 0);

    Poly qi{{Rat(1), Rat(0), Rat(1)}};
    RootCertificate rc4 = certify_roots(qi, Rat(1, 1000000000));
    CHECK(rc4.radius.lo == 1);
    CHECK(rc4.radius.hi == 1);
}

TEST_CASE("digest vectors") {
    CHECK(sha256_hex("") ==
          "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
    CHECK(sha256_hex("abc") ==
          "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("seeded rng replays") {
    DetRng r1(42), r2(42);
    for (int i = 0; i < 8; ++i) CHECK(r1.int_in(-3, 3) == r2.int_in(-3, 3));
    DetRng c1 = r1.child(), c2 = r2.child();
    CHECK(c1.next() == c2.next());
}
