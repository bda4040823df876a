#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "av/errors.hpp"

namespace av {

using Rat = mpq_class;
using Int = mpz_class;

Rat rat_pow(const Rat& x, long e);
Rat rat_abs(const Rat& x);
bool rat_is_integer(const Rat& x);
int rat_sign(const Rat& x);

/// Parses "p", "-p", "p/q" or a decimal like "1.25" into an exact rational.
Rat parse_rational(const std::string& text);

/// Exact rational rendered as "p" or "p/q".
std::string rat_string(const Rat& x);

/// Fixed-point decimal with `frac_digits` digits after the point.
/// rounding: -1 toward minus infinity, +1 toward plus infinity.
std::string rat_decimal(const Rat& x, int frac_digits, int rounding);

/// Floor of sqrt(x) for x >= 0.
Int isqrt_floor(const Int& x);
bool is_perfect_square(const Int& x, Int* root = nullptr);
Int binomial(int n, int k);

/// Closed rational interval [lo, hi].
struct Interval {
    Rat lo, hi;

    Interval() : lo(0), hi(0) {}
    Interval(Rat l, Rat h);
    static Interval point(const Rat& v) { return Interval(v, v); }

    Rat width() const { return hi - lo; }
    Rat mid() const { return (lo + hi) / 2; }
    bool contains(const Rat& v) const { return lo <= v && v <= hi; }
    bool is_point() const { return lo == hi; }
};

/// Separation between two intervals; zero when they overlap.
Rat interval_gap(const Interval& a, const Interval& b);

/// Product of intervals of nonnegative values.
Interval interval_mul_nonneg(const Interval& a, const Interval& b);

/// Enclosure of sqrt(x) for x >= 0 with width <= eps; width 0 when x is a
/// perfect square of rationals.
Interval sqrt_enclosure(const Rat& x, const Rat& eps);

/// Enclosure of sqrt over a nonnegative interval.
Interval sqrt_interval(const Interval& x, const Rat& eps);

/// A nonnegative value carried as its exact square, so comparisons between
/// square roots stay exact.
struct SqrtVal {
    Rat square;

    SqrtVal() : square(0) {}
    explicit SqrtVal(Rat sq);
    static SqrtVal of_rational(const Rat& v) { return SqrtVal(v * v); }

    bool operator<=(const SqrtVal& o) const { return square <= o.square; }
    bool operator<(const SqrtVal& o) const { return square < o.square; }
    bool operator==(const SqrtVal& o) const { return square == o.square; }

    /// value <= r for rational r.
    bool leq_rational(const Rat& r) const { return r >= 0 && square <= r * r; }
    /// value >= r for rational r.
    bool geq_rational(const Rat& r) const { return r < 0 || square >= r * r; }

    Interval enclosure(const Rat& eps) const { return sqrt_enclosure(square, eps); }
};

}  // namespace av
