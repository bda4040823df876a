#include "av/spectral.hpp"

#include <algorithm>

#include "av/errors.hpp"

namespace av {

namespace {

Rat dot(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    Rat s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

/// Tighter tolerance for the underlying certificates so that comparisons at
/// the caller's tolerance are not dominated by enclosure width.
Rat cert_tol(const Rat& tol) { return tol / 1000; }

}  // namespace

bool is_semisimple(const Mat& M) {
    Poly mp = min_poly(M);
    return poly_gcd(mp, derivative(mp)).deg() == 0;
}

WeilVerdict weil_check(const Mat& M, const Rat& q, int weight, const Rat& tol) {
    if (q <= 0) throw InputError("reference scale q must be positive");
    WeilVerdict v;
    v.q = q;
    v.weight = weight;

    Poly P = char_poly(M);
    int b = P.deg();
    Rat qi = rat_pow(q, weight);

    // functional equation x^b P(q^i / x) = sign * q^(ib/2) P(x), compared
    // coefficientwise through squares to stay rational
    bool fe = true;
    int sign = 0;
    Rat qib = rat_pow(qi, b);
    for (int j = 0; j <= b && fe; ++j) {
        Rat lhs = P.coeff(j) * P.coeff(j) * rat_pow(qi, 2 * j);
        Rat rhs = qib * P.coeff(b - j) * P.coeff(b - j);
        if (lhs != rhs) fe = false;
        if (P.coeff(j) != 0) {
            int s = rat_sign(P.coeff(j)) * rat_sign(P.coeff(b - j));
            if (sign == 0)
                sign = s;
            else if (sign != s)
                fe = false;
        }
    }
    v.functional_equation_ok = fe;
    v.sign = fe ? sign : 0;

    // every certified root modulus must sit in the tol window around sqrt(q^i)
    RootCertificate cert = certify_roots(P, cert_tol(tol));
    Interval target = sqrt_enclosure(qi, cert_tol(tol));
    bool moduli = true;
    for (const Interval& dm : cert.disk_moduli)
        if (dm.lo < target.lo - tol || dm.hi > target.hi + tol) moduli = false;
    v.moduli_ok = moduli;
    return v;
}

SpectralReport spectral_report(const Mat& M, const Rat& tol) {
    SpectralReport r;
    r.char_poly = char_poly(M);
    r.min_poly = min_poly(M);
    RootCertificate cert = certify_roots(r.char_poly, tol);
    r.radius = cert.radius;
    r.precision_bits = cert.precision_bits;
    r.semisimple = poly_gcd(r.min_poly, derivative(r.min_poly)).deg() == 0;
    return r;
}

Interval chi(const GradedAction& act, int i, const Rat& tol) {
    if (i < 0 || i >= (int)act.mats.size()) throw InputError("degree out of range");
    return certify_roots(char_poly(act.mats[(size_t)i]), tol).radius;
}

Interval chi(const Correspondence& c, int i, const Rat& tol, const VarietyModel& vm) {
    return chi(graded_action(c, vm), i, tol);
}

GrowthEstimate lambda_growth(const GradedAction& act, int k, int m_max,
                             const VarietyModel& vm, const Rat& tol) {
    if (m_max < 4) throw InputError("m_max must be at least 4");
    int n = vm.n();
    if (k < 0 || k > n) throw InputError("codimension out of range");
    const Mat& A = act.mats[(size_t)(2 * k)];
    GradedClass thk = theta_pow(vm.cohom, k);
    GradedClass thnk = theta_pow(vm.cohom, n - k);
    std::vector<Rat> pair_vec =
        matvec(pairing_gram(vm.cohom, 2 * k), thnk.comp[(size_t)(2 * (n - k))]);

    GrowthEstimate est;
    std::vector<Rat> v = thk.comp[(size_t)(2 * k)];
    for (int m = 1; m <= m_max; ++m) {
        v = matvec(A, v);
        est.sequence.push_back(dot(pair_vec, v));
    }

    est.all_zero = std::all_of(est.sequence.begin(), est.sequence.end(),
                               [](const Rat& x) { return x == 0; });
    est.recurrence = berlekamp_massey(est.sequence);
    if (est.all_zero) {
        est.stabilized = true;
        est.dominant_modulus = Interval::point(Rat(0));
        return est;
    }
    size_t L = est.recurrence.coeffs.size();
    bool replay = verify_recurrence(est.sequence, est.recurrence);
    est.stabilized = replay && 2 * (int)L <= m_max;
    if (!est.stabilized) {
        est.diagnostic = "minimal recurrence did not stabilize; increase m_max";
        return est;
    }
    est.dominant_modulus = certify_roots(recurrence_char_poly(est.recurrence), tol).radius;
    return est;
}

GrowthEstimate lambda_growth(const Correspondence& c, int k, int m_max,
                             const VarietyModel& vm, const Rat& tol) {
    return lambda_growth(graded_action(c, vm), k, m_max, vm, tol);
}

LambdaNumerical lambda_numerical(const GradedAction& act, const NumericalLattice& lat,
                                 const VarietyModel& vm, const Rat& tol) {
    InducedAction ind = induced_action(act, lat, vm);
    LambdaNumerical r;
    r.value = certify_roots(char_poly(ind.matrix), tol).radius;
    r.saturation_events = ind.saturation_events;
    for (const std::string& d : ind.descent_violations) r.saturation_events.push_back(d);
    return r;
}

LambdaNumerical lambda_numerical(const Correspondence& c, int k, const VarietyModel& vm,
                                 const Rat& tol) {
    return lambda_numerical(graded_action(c, vm), build_Nk(vm, k), vm, tol);
}

Rat interval_distance(const Interval& a, const Interval& b) {
    Rat lo = std::max(a.lo, b.lo);
    Rat hi = std::min(a.hi, b.hi);
    return lo > hi ? Rat(lo - hi) : Rat(0);
}

DdcVerdict ddc_check(const GradedAction& act, int k, const NumericalLattice& lat,
                     const VarietyModel& vm, const Rat& tol) {
    DdcVerdict v;
    Rat t = cert_tol(tol);
    v.chi_even = chi(act, 2 * k, t);
    LambdaNumerical ln = lambda_numerical(act, lat, vm, t);
    v.lambda_num = ln.value;
    v.saturation_events = ln.saturation_events;
    GrowthEstimate lg = lambda_growth(act, k, 40, vm, t);
    v.lambda_grow = lg.dominant_modulus;

    Rat scale = std::max({Rat(1), v.chi_even.hi, v.lambda_num.hi, v.lambda_grow.hi});
    Rat allowed = tol * scale;
    bool agree = interval_distance(v.chi_even, v.lambda_num) <= allowed &&
                 interval_distance(v.chi_even, v.lambda_grow) <= allowed &&
                 interval_distance(v.lambda_num, v.lambda_grow) <= allowed;
    v.pass = agree && lg.stabilized;
    v.inconclusive = !v.pass && !v.saturation_events.empty();
    return v;
}

DdcVerdict ddc_check(const Correspondence& c, int k, const VarietyModel& vm, const Rat& tol) {
    return ddc_check(graded_action(c, vm), k, build_Nk(vm, k), vm, tol);
}

DinhVerdict dinh_check(const GradedAction& act, int k, const NumericalLattice& lat_k,
                       const NumericalLattice& lat_k1, const VarietyModel& vm,
                       const Rat& tol) {
    if (k < 0 || k >= vm.n()) throw InputError("odd-degree comparison needs 0 <= k < n");
    DinhVerdict v;
    Rat t = cert_tol(tol);
    v.chi_odd = chi(act, 2 * k + 1, t);
    Interval lk = lambda_numerical(act, lat_k, vm, t).value;
    Interval lk1 = lambda_numerical(act, lat_k1, vm, t).value;
    Interval prod(std::max(Rat(0), Rat(lk.lo * lk1.lo)), lk.hi * lk1.hi);
    v.bound = sqrt_interval(prod, t);
    v.slack = v.bound.lo - v.chi_odd.hi;
    v.pass = v.slack >= -tol;
    return v;
}

DinhVerdict dinh_check(const Correspondence& c, int k, const VarietyModel& vm, const Rat& tol) {
    return dinh_check(graded_action(c, vm), k, build_Nk(vm, k), build_Nk(vm, k + 1), vm, tol);
}

TraceRatios trace_bound_ratios(const GradedAction& act, const VarietyModel& vm) {
    int n = vm.n();
    std::vector<Rat> degs = degree_sequence(act, vm);
    for (int k = 0; k <= n; ++k)
        if (degs[(size_t)k] == 0)
            throw InputError("degenerate: ratio undefined (zero degree at k=" +
                             std::to_string(k) + ")");
    TraceRatios r;
    for (int k = 0; k <= n; ++k)
        r.even.push_back(rat_abs(act.mats[(size_t)(2 * k)].trace()) / degs[(size_t)k]);
    for (int k = 0; k < n; ++k) {
        Rat t = act.mats[(size_t)(2 * k + 1)].trace();
        r.odd_sq.push_back(t * t / (degs[(size_t)k] * degs[(size_t)k + 1]));
    }
    return r;
}

TraceRatios trace_bound_ratios(const Correspondence& c, const VarietyModel& vm) {
    return trace_bound_ratios(graded_action(c, vm), vm);
}

LogConcaveBounds log_concave_bounds(const std::vector<Rat>& a) {
    if (a.empty()) throw InputError("empty sequence");
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] <= 0)
            throw InputError("sequence must be positive; entry " + std::to_string(i) +
                             " is " + rat_string(a[i]));
    for (size_t k = 1; k + 1 < a.size(); ++k)
        if (a[k] * a[k] < a[k - 1] * a[k + 1])
            throw InputError("sequence is not log-concave at index " + std::to_string(k));
    LogConcaveBounds lb;
    lb.a = a;
    size_t n = a.size() - 1;
    for (size_t k = 0; k < n; ++k) lb.witness_sq.push_back(a[k] / a[k + 1]);
    for (size_t i = 0; i <= 2 * n; ++i) {
        if (i % 2 == 0) {
            const Rat& ak = a[i / 2];
            lb.bounds.emplace_back(ak * ak);
        } else {
            lb.bounds.emplace_back(a[i / 2] * a[i / 2 + 1]);
        }
    }
    return lb;
}

Rat envelope_max_sq(const std::vector<Rat>& a, const Rat& w) {
    if (w <= 0) throw InputError("squared radius must be positive");
    Rat best = 0, p = 1;
    for (size_t j = 0; j < a.size(); ++j) {
        best = std::max(best, Rat(p * a[j]));
        p *= w;
    }
    return best;
}

Rat envelope_value_sq(const std::vector<Rat>& a, const Rat& w, int i) {
    Rat m = envelope_max_sq(a, w);
    return m * m / rat_pow(w, i);
}

ReductionVerdict reduction_oracle(const std::vector<Rat>& a, const std::vector<Rat>& b,
                                  const std::vector<Rat>& r_grid) {
    LogConcaveBounds lb = log_concave_bounds(a);
    size_t n = a.size() - 1;
    if (b.size() != 2 * n + 1)
        throw InputError("bound vector must have length " + std::to_string(2 * n + 1));
    for (size_t i = 0; i < b.size(); ++i)
        if (b[i] < 0) throw InputError("bound vector must be nonnegative");

    std::vector<Rat> samples_w = lb.witness_sq;
    for (const Rat& r : r_grid) {
        if (r <= 0) throw InputError("grid radii must be positive");
        samples_w.push_back(r * r);
    }

    ReductionVerdict v;
    v.premise_ok = true;
    for (size_t p = 0; p < samples_w.size() && v.premise_ok; ++p) {
        Rat m2 = envelope_max_sq(a, samples_w[p]);
        m2 = m2 * m2;
        Rat wi = 1;
        for (size_t i = 0; i < b.size(); ++i) {
            if (b[i] * b[i] * wi > m2) {
                v.premise_ok = false;
                v.premise_failure_point = (int)p;
                break;
            }
            wi *= samples_w[p];
        }
    }

    v.conclusion_ok = true;
    for (size_t i = 0; i < b.size(); ++i) {
        bool ok = (b[i] * b[i] <= lb.bounds[i].square);
        if (!ok) {
            v.conclusion_ok = false;
            v.conclusion_failure_index = (int)i;
            break;
        }
    }
    return v;
}

NormRatios norm_comparison_ratios(const Correspondence& c, int k, const VarietyModel& vm) {
    int n = vm.n();
    if (k < 0 || k > n) throw InputError("codimension out of range");
    GradedAction act = graded_action(c, vm);
    NormRatios r;
    Rat nk = induced_action(act, build_Nk(vm, k), vm).matrix.max_abs_entry();
    Rat ck = act.mats[(size_t)(2 * k)].max_abs_entry();
    if (nk == 0) {
        r.degenerate = true;
    } else {
        r.even = ck / nk;
    }
    if (k < n) {
        Rat nk1 = induced_action(act, build_Nk(vm, k + 1), vm).matrix.max_abs_entry();
        Rat codd = act.mats[(size_t)(2 * k + 1)].max_abs_entry();
        if (nk == 0 || nk1 == 0)
            r.degenerate = true;
        else
            r.odd_sq = codd * codd / (nk * nk1);
    }
    return r;
}

}  // namespace av
