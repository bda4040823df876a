#pragma once

#include <optional>
#include <string>
#include <vector>

#include "av/correspondence.hpp"
#include "av/numerical.hpp"
#include "av/poly.hpp"
#include "av/recurrence.hpp"
#include "av/roots.hpp"

namespace av {

/// Verdict of the weight-i eigenvalue check against the reference scale q:
/// exact palindromic functional equation plus certified root moduli.
struct WeilVerdict {
    Rat q;
    int weight = 0;
    bool functional_equation_ok = false;
    int sign = 0;  // the +-1 of the functional equation; 0 when vacuous
    bool moduli_ok = false;

    bool pass() const { return functional_equation_ok && moduli_ok; }
};

bool is_semisimple(const Mat& M);
WeilVerdict weil_check(const Mat& M, const Rat& q, int weight, const Rat& tol);

/// Exact polynomial data plus the certified spectral radius of one matrix.
struct SpectralReport {
    Poly char_poly;
    Poly min_poly;
    Interval radius;
    bool semisimple = false;
    int precision_bits = 0;
    std::optional<WeilVerdict> weil;
};

SpectralReport spectral_report(const Mat& M, const Rat& tol);

/// Certified spectral radius of the degree-i action.
Interval chi(const Correspondence& c, int i, const Rat& tol, const VarietyModel& vm);
Interval chi(const GradedAction& act, int i, const Rat& tol);

/// Degree growth of iterates: exact values deg_k of the m-th iterate for
/// m = 1..m_max, their minimal linear recurrence, and the certified largest
/// root modulus of the recurrence.
struct GrowthEstimate {
    std::vector<Rat> sequence;
    Recurrence recurrence;
    bool stabilized = false;
    bool all_zero = false;
    Interval dominant_modulus;
    std::string diagnostic;  // set when the recurrence fails to stabilize
};

GrowthEstimate lambda_growth(const GradedAction& act, int k, int m_max,
                             const VarietyModel& vm, const Rat& tol);
GrowthEstimate lambda_growth(const Correspondence& c, int k, int m_max,
                             const VarietyModel& vm, const Rat& tol);

/// Certified spectral radius of the induced lattice action.
struct LambdaNumerical {
    Interval value;
    std::vector<std::string> saturation_events;
};

LambdaNumerical lambda_numerical(const GradedAction& act, const NumericalLattice& lat,
                                 const VarietyModel& vm, const Rat& tol);
LambdaNumerical lambda_numerical(const Correspondence& c, int k, const VarietyModel& vm,
                                 const Rat& tol);

/// Distance between two intervals (0 when they overlap).
Rat interval_distance(const Interval& a, const Interval& b);

/// Degree-growth comparison: the three certified values of the same quantity
/// must pairwise agree within tol relative to their size.
struct DdcVerdict {
    Interval chi_even;
    Interval lambda_num;
    Interval lambda_grow;
    bool pass = false;
    bool inconclusive = false;  // mismatch co-occurring with lattice saturation
    std::vector<std::string> saturation_events;
};

DdcVerdict ddc_check(const GradedAction& act, int k, const NumericalLattice& lat,
                     const VarietyModel& vm, const Rat& tol);
DdcVerdict ddc_check(const Correspondence& c, int k, const VarietyModel& vm, const Rat& tol);

/// Odd-degree comparison: chi at 2k+1 must not exceed the geometric mean of
/// the adjacent lattice growth rates.
struct DinhVerdict {
    Interval chi_odd;
    Interval bound;  // sqrt of the product of the two lambda values
    Rat slack = 0;   // bound.lo - chi_odd.hi
    bool pass = false;
};

DinhVerdict dinh_check(const GradedAction& act, int k, const NumericalLattice& lat_k,
                       const NumericalLattice& lat_k1, const VarietyModel& vm, const Rat& tol);
DinhVerdict dinh_check(const Correspondence& c, int k, const VarietyModel& vm, const Rat& tol);

/// Trace-to-degree ratios; odd entries are carried as exact squares.
struct TraceRatios {
    std::vector<Rat> even;    // k = 0..n: |trace at 2k| / deg_k
    std::vector<Rat> odd_sq;  // k = 0..n-1: trace at 2k+1 squared / (deg_k deg_{k+1})
};

TraceRatios trace_bound_ratios(const GradedAction& act, const VarietyModel& vm);
TraceRatios trace_bound_ratios(const Correspondence& c, const VarietyModel& vm);

/// Interleaved bound vector built from a positive log-concave sequence.
struct LogConcaveBounds {
    std::vector<Rat> a;
    std::vector<Rat> witness_sq;   // squared witness radii a_k / a_{k+1}
    std::vector<SqrtVal> bounds;   // length 2n+1; even entries are exact squares of a_k
};

/// Validates positivity and log-concavity (naming the violating index) and
/// produces the bounds.
LogConcaveBounds log_concave_bounds(const std::vector<Rat>& a);

/// max_j w^j a_j (the squared-radius envelope numerator).
Rat envelope_max_sq(const std::vector<Rat>& a, const Rat& w);
/// Squared value of max_j r^(2j) a_j / r^i at r^2 = w.
Rat envelope_value_sq(const std::vector<Rat>& a, const Rat& w, int i);

/// Checks the scaling premise for b against a at the witness radii and a
/// caller-supplied grid of radii, then the interleaved conclusions.
struct ReductionVerdict {
    bool premise_ok = false;
    bool conclusion_ok = false;
    int premise_failure_point = -1;  // index into witnesses-then-grid sampling order
    int conclusion_failure_index = -1;

    bool implication_holds() const { return !premise_ok || conclusion_ok; }
};

ReductionVerdict reduction_oracle(const std::vector<Rat>& a, const std::vector<Rat>& b,
                                  const std::vector<Rat>& r_grid);

/// Surrogate operator-norm ratios between cohomological and lattice actions.
struct NormRatios {
    Rat even = 0;                 // max-entry norm ratio at degree 2k vs N^k
    std::optional<Rat> odd_sq;    // squared ratio at degree 2k+1 vs sqrt(N^k * N^(k+1))
    bool degenerate = false;      // a zero denominator was hit
};

NormRatios norm_comparison_ratios(const Correspondence& c, int k, const VarietyModel& vm);

}  // namespace av
