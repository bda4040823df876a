#pragma once

#include <string>
#include <vector>

#include "av/matrix.hpp"
#include "av/rational.hpp"

namespace av {

/// Polynomial over the rationals; c[i] is the coefficient of x^i.
/// Invariant: no trailing zero coefficients; the zero polynomial has empty c.
struct Poly {
    std::vector<Rat> c;

    Poly() = default;
    explicit Poly(std::vector<Rat> coeffs);
    static Poly constant(const Rat& v);
    static Poly x();

    int deg() const { return (int)c.size() - 1; }
    bool is_zero() const { return c.empty(); }
    const Rat& lead() const;
    Rat coeff(int i) const { return i >= 0 && i < (int)c.size() ? c[i] : Rat(0); }

    Rat eval(const Rat& x) const;
    bool operator==(const Poly& o) const { return c == o.c; }
    std::string to_string(const std::string& var = "x") const;
};

Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly operator*(const Poly& a, const Poly& b);
Poly poly_scale(const Poly& a, const Rat& s);
Poly poly_shift(const Poly& a, int k);  // multiply by x^k

/// Exact division with remainder over Q; b must be nonzero.
void poly_divmod(const Poly& a, const Poly& b, Poly* q, Poly* r);
bool poly_divides(const Poly& a, const Poly& b);  // a | b

Poly derivative(const Poly& a);
Poly monic(const Poly& a);

/// Monic gcd over Q.
Poly poly_gcd(Poly a, Poly b);

/// Product of the distinct irreducible factors: a / gcd(a, a').
Poly squarefree_part(const Poly& a);

/// det(xI - M), computed exactly by evaluation at integer nodes and
/// Newton interpolation.
Poly char_poly(const Mat& M);

/// Minimal polynomial: lcm of the annihilators of the standard basis
/// vectors under the Krylov iteration; verified to annihilate M.
Poly min_poly(const Mat& M);

/// Complex number with exact rational parts.
struct CRat {
    Rat re, im;

    CRat() : re(0), im(0) {}
    CRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

    CRat operator+(const CRat& o) const { return {re + o.re, im + o.im}; }
    CRat operator-(const CRat& o) const { return {re - o.re, im - o.im}; }
    CRat operator*(const CRat& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    CRat operator/(const CRat& o) const;
    Rat norm() const { return re * re + im * im; }  // squared modulus
    bool operator==(const CRat& o) const { return re == o.re && im == o.im; }
};

CRat poly_eval(const Poly& p, const CRat& z);

}  // namespace av
