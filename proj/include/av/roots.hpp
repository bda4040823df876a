#pragma once

#include "av/matrix.hpp"
#include "av/poly.hpp"
#include "av/rational.hpp"

namespace av {

/// Certified enclosures for the root moduli of a polynomial.
/// Enclosures are exact rational statements about the true roots: every root
/// modulus lies in some entry of disk_moduli, the maximum lies in radius, the
/// minimum lies in min_modulus.
struct RootCertificate {
    Interval radius;
    Interval min_modulus;
    std::vector<Interval> disk_moduli;
    int precision_bits = 0;  // 0 when an exact fast path applied
};

/// Certifies root moduli of a nonconstant polynomial within tol.
/// Works on the squarefree part; rational-root and quadratic cases are exact.
/// Otherwise Aberth-Ehrlich approximation at escalating precision is followed
/// by an exact rational Gershgorin-disk certificate. Throws PrecisionError
/// when the 4096-bit cap is reached without certification.
RootCertificate certify_roots(const Poly& p, const Rat& tol);

Interval spectral_radius(const Poly& p, const Rat& tol);
Interval spectral_radius(const Mat& M, const Rat& tol);

inline constexpr int kPrecisionCapBits = 4096;

}  // namespace av
