#pragma once

#include <vector>

#include "av/poly.hpp"
#include "av/rational.hpp"

namespace av {

/// Linear recurrence s_m = sum_{j=1..order} coeffs[j-1] * s_{m-j}.
struct Recurrence {
    std::vector<Rat> coeffs;

    int order() const { return (int)coeffs.size(); }
};

/// Minimal linear recurrence fitting the whole sequence, via
/// Berlekamp-Massey over Q. Order 0 means the sequence is all zero.
Recurrence berlekamp_massey(const std::vector<Rat>& s);

/// x^L - c_1 x^{L-1} - ... - c_L for coefficients c of the recurrence.
Poly recurrence_char_poly(const Recurrence& r);

/// Replays the recurrence from its first `order` seeds and compares exactly.
bool verify_recurrence(const std::vector<Rat>& s, const Recurrence& r);

}  // namespace av
