#include "av/suites.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <numeric>

#include "av/errors.hpp"

namespace av {

namespace {

using Clock = std::chrono::steady_clock;

long long ms_since(Clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0)
        .count();
}

std::string utc_now() {
    std::time_t t = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

Rat cert_tol() { return Rat(1, 1000000000); }

std::string dec(const Rat& x) { return rat_decimal(x, 12, x >= 0 ? 1 : -1); }

int max_multiplicity(const AbelianSpec& spec) {
    int m = 0;
    for (const Factor& f : spec.factors) m = std::max(m, f.multiplicity);
    return m;
}

/// The shear (x, y) -> (x + y, y) on the first factor with two coordinates.
EndMatrix shear_endo(const AbelianSpec& spec) {
    EndMatrix f = identity_endo(spec);
    for (size_t b = 0; b < spec.factors.size(); ++b)
        if (spec.factors[b].multiplicity >= 2) {
            f.blocks[b][0][1] = OrderElem{1, 0};
            break;
        }
    return f;
}

void suite_ddc(Report& rep, const VarietyModel& vm, DetRng& base, const SuiteParams& p) {
    std::vector<NumericalLattice> lat;
    for (int k = 0; k <= vm.n(); ++k) lat.push_back(build_Nk(vm, k));
    for (int s = 0; s < p.samples; ++s) {
        DetRng rng = base.child();
        Correspondence f = random_effective(rng, vm, p);
        GradedAction act = graded_action(f, vm);
        std::string in = corr_key(f);
        for (int k = 0; k <= vm.n(); ++k) {
            auto t0 = Clock::now();
            DdcVerdict v = ddc_check(act, k, lat[(size_t)k], vm, p.tol);
            CheckRecord rec;
            rec.check_id = "ddc";
            rec.sample = s;
            rec.k = k;
            rec.inputs = in;
            rec.verdict = v.pass ? "pass" : (v.inconclusive ? "inconclusive" : "fail");
            rec.certified_values = {
                {"chi", format_interval(v.chi_even)},
                {"lambda_growth", format_interval(v.lambda_grow)},
                {"lambda_numerical", format_interval(v.lambda_num)}};
            rec.saturation_events = v.saturation_events;
            rec.runtime_ms = ms_since(t0);
            rep.records.push_back(rec);
        }
    }
}

void suite_gwrh(Report& rep, const VarietyModel& vm, DetRng& base, const SuiteParams& p) {
    for (int s = 0; s < p.samples; ++s) {
        DetRng rng = base.child();
        Rat q;
        EndMatrix f = random_polarized_endo(rng, vm.spec, p.entry_bound, &q);
        std::optional<Rat> qp = is_polarized(f, vm.spec, vm.cohom);
        GradedAction act = graded_action(graph(f, vm), vm);
        std::string in = endo_key(f);
        for (int i = 0; i <= 2 * vm.n(); ++i) {
            auto t0 = Clock::now();
            CheckRecord rec;
            rec.check_id = "gwrh";
            rec.sample = s;
            rec.k = i;
            rec.inputs = in;
            if (!qp) {
                rec.verdict = "fail";
                rec.certified_values = {{"polarized", "none"}};
            } else {
                WeilVerdict w = weil_check(act.mats[(size_t)i], *qp, i, cert_tol());
                rec.verdict = w.pass() ? "pass" : "fail";
                rec.certified_values = {{"q", rat_string(*qp)},
                                        {"sign", std::to_string(w.sign)}};
            }
            rec.runtime_ms = ms_since(t0);
            rep.records.push_back(rec);
        }
    }
    if (max_multiplicity(vm.spec) >= 2) {
        auto t0 = Clock::now();
        EndMatrix uni = shear_endo(vm.spec);
        Mat U = realize_pullback(uni, vm.spec);
        WeilVerdict w = weil_check(U, Rat(1), 1, cert_tol());
        CheckRecord rec;
        rec.check_id = "gwrh_control";
        rec.sample = p.samples;
        rec.k = 1;
        rec.inputs = endo_key(uni);
        bool nonpolarized = !is_polarized(uni, vm.spec, vm.cohom).has_value();
        rec.verdict = (nonpolarized && w.pass()) ? "pass" : "fail";
        rec.certified_values = {{"polarized", nonpolarized ? "none" : "some"},
                                {"weil_q1", w.pass() ? "pass" : "fail"}};
        rec.runtime_ms = ms_since(t0);
        rep.records.push_back(rec);
    }
}

void suite_semisimple(Report& rep, const VarietyModel& vm, DetRng& base,
                      const SuiteParams& p) {
    for (int s = 0; s < p.samples; ++s) {
        DetRng rng = base.child();
        Rat q;
        EndMatrix f = random_polarized_endo(rng, vm.spec, p.entry_bound, &q);
        GradedAction act = graded_action(graph(f, vm), vm);
        std::string in = endo_key(f);
        for (int i = 0; i <= 2 * vm.n(); ++i) {
            auto t0 = Clock::now();
            CheckRecord rec;
            rec.check_id = "semisimple";
            rec.sample = s;
            rec.k = i;
            rec.inputs = in;
            rec.verdict = is_semisimple(act.mats[(size_t)i]) ? "pass" : "fail";
            rec.runtime_ms = ms_since(t0);
            rep.records.push_back(rec);
        }
    }
    if (max_multiplicity(vm.spec) >= 2) {
        auto t0 = Clock::now();
        EndMatrix uni = shear_endo(vm.spec);
        Mat U = realize_pullback(uni, vm.spec);
        CheckRecord rec;
        rec.check_id = "semisimple_control";
        rec.sample = p.samples;
        rec.k = 1;
        rec.inputs = endo_key(uni);
        rec.verdict = is_semisimple(U) ? "pass" : "fail";
        rec.expected_fail = true;
        rec.runtime_ms = ms_since(t0);
        rep.records.push_back(rec);
    }
}

void suite_dinh(Report& rep, const VarietyModel& vm, DetRng& base, const SuiteParams& p) {
    std::vector<NumericalLattice> lat;
    for (int k = 0; k <= vm.n(); ++k) lat.push_back(build_Nk(vm, k));
    for (int s = 0; s < p.samples; ++s) {
        DetRng rng = base.child();
        Correspondence f = random_effective(rng, vm, p);
        GradedAction act = graded_action(f, vm);
        std::string in = corr_key(f);
        for (int k = 0; k + 1 <= vm.n(); ++k) {
            auto t0 = Clock::now();
            DinhVerdict v =
                dinh_check(act, k, lat[(size_t)k], lat[(size_t)k + 1], vm, cert_tol());
            CheckRecord rec;
            rec.check_id = "dinh";
            rec.sample = s;
            rec.k = k;
            rec.inputs = in;
            rec.verdict = v.pass ? "pass" : "fail";
            rec.certified_values = {{"bound", format_interval(v.bound)},
                                    {"chi_odd", format_interval(v.chi_odd)}};
            rec.ratios = {{"slack", dec(v.slack)}};
            rec.runtime_ms = ms_since(t0);
            rep.records.push_back(rec);
        }
    }
}

void suite_logconcave(Report& rep, const VarietyModel& vm, DetRng& base,
                      const SuiteParams& p) {
    std::vector<Rat> grid;
    for (int e = -10; e <= 10; ++e) grid.push_back(rat_pow(Rat(2), e));
    for (int s = 0; s < p.samples; ++s) {
        DetRng rng = base.child();
        Correspondence f = random_effective(rng, vm, p, 1);
        std::vector<Rat> degs = degree_sequence(f, vm);
        auto t0 = Clock::now();
        CheckRecord rec;
        rec.check_id = "logconcave";
        rec.sample = s;
        rec.inputs = corr_key(f);
        try {
            LogConcaveBounds lb = log_concave_bounds(degs);
            for (size_t i = 0; i < lb.bounds.size(); ++i)
                rec.certified_values.push_back(
                    {"bound_sq_" + std::to_string(i), rat_string(lb.bounds[i].square)});
            std::vector<Rat> b;
            for (const SqrtVal& sv : lb.bounds)
                b.push_back(sqrt_enclosure(sv.square, Rat(1, 1000000)).lo);
            ReductionVerdict rv = reduction_oracle(lb.a, b, grid);
            rec.verdict =
                (rv.premise_ok && rv.conclusion_ok && rv.implication_holds()) ? "pass"
                                                                             : "fail";
        } catch (const InputError& e) {
            rec.verdict = "fail";
            rec.certified_values = {{"violation", e.what()}};
        }
        rec.runtime_ms = ms_since(t0);
        rep.records.push_back(rec);
    }
    if (vm.n() >= 2) {
        auto t0 = Clock::now();
        Correspondence two_graphs =
            corr_add(graph(multiplication_map(1, vm.spec), vm),
                     graph(multiplication_map(2, vm.spec), vm), vm);
        std::vector<Rat> degs = degree_sequence(two_graphs, vm);
        CheckRecord rec;
        rec.check_id = "logconcave_control";
        rec.sample = p.samples;
        rec.inputs = corr_key(two_graphs);
        rec.expected_fail = true;
        try {
            log_concave_bounds(degs);
            rec.verdict = "pass";
        } catch (const InputError& e) {
            rec.verdict = "fail";
            rec.certified_values = {{"violation", e.what()}};
        }
        for (size_t i = 0; i < degs.size(); ++i)
            rec.ratios.push_back({"deg_" + std::to_string(i), rat_string(degs[i])});
        rec.runtime_ms = ms_since(t0);
        rep.records.push_back(rec);
    }
}

void suite_gr_identity(Report& rep, const VarietyModel& vm, DetRng& base,
                       const SuiteParams& p) {
    const std::vector<Rat> rs = {Rat(1, 2), Rat(2), Rat(3, 5)};
    int n = vm.n();
    for (int s = 0; s < p.samples; ++s) {
        DetRng rng = base.child();
        Correspondence f = random_effective(rng, vm, p);
        GradedAction act = graded_action(f, vm);
        std::vector<Rat> degs = degree_sequence(act, vm);
        std::string in = corr_key(f);
        for (const Rat& r : rs) {
            auto t0 = Clock::now();
            GradedAction ga = apply_Gr(f, r, vm);
            bool ok = true;
            for (int i = 0; i <= 2 * n; ++i)
                ok = ok && ga.mats[(size_t)i] == act.mats[(size_t)i].scaled(rat_pow(r, i));
            Rat td = total_degree(compose(make_Gr(r, vm), f, vm), vm);
            Rat expected = 0;
            for (int j = 0; j <= n; ++j)
                expected += Rat(binomial(n, j)) * rat_pow(r, 2 * j) * degs[(size_t)j];
            ok = ok && td == expected;
            CheckRecord rec;
            rec.check_id = "gr_identity";
            rec.sample = s;
            rec.inputs = in + " r=" + rat_string(r);
            rec.verdict = ok ? "pass" : "fail";
            rec.certified_values = {{"total_degree", rat_string(td)}};
            rec.runtime_ms = ms_since(t0);
            rep.records.push_back(rec);
        }
    }
}

void suite_trace_bounds(Report& rep, const VarietyModel& vm, DetRng& base,
                        const SuiteParams& p) {
    int n = vm.n();
    for (int s = 0; s < p.samples; ++s) {
        DetRng rng = base.child();
        Correspondence f = random_effective(rng, vm, p);
        GradedAction act = graded_action(f, vm);
        auto t0 = Clock::now();
        std::vector<Rat> even1(n + 1, 0), even2(n + 1, 0), odd1(n, 0), odd2(n, 0);
        GradedAction acc = act;
        for (int m = 1; m <= 30; ++m) {
            if (m > 1) acc = action_compose_pullback(acc, act);
            TraceRatios tr = trace_bound_ratios(acc, vm);
            for (int k = 0; k <= n; ++k) {
                if (m <= 15) even1[(size_t)k] = std::max(even1[(size_t)k], tr.even[(size_t)k]);
                if (m >= 15) even2[(size_t)k] = std::max(even2[(size_t)k], tr.even[(size_t)k]);
            }
            for (int k = 0; k < n; ++k) {
                if (m <= 15) odd1[(size_t)k] = std::max(odd1[(size_t)k], tr.odd_sq[(size_t)k]);
                if (m >= 15) odd2[(size_t)k] = std::max(odd2[(size_t)k], tr.odd_sq[(size_t)k]);
            }
        }
        bool ok = true;
        CheckRecord rec;
        for (int k = 0; k <= n; ++k) {
            ok = ok && even2[(size_t)k] <= 10 * even1[(size_t)k];
            rec.ratios.push_back({"even_" + std::to_string(k) + "_late",
                                  dec(even2[(size_t)k])});
        }
        for (int k = 0; k < n; ++k) {
            ok = ok && odd2[(size_t)k] <= 100 * odd1[(size_t)k];
            rec.ratios.push_back({"odd_sq_" + std::to_string(k) + "_late",
                                  dec(odd2[(size_t)k])});
        }
        rec.check_id = "trace_bounds";
        rec.sample = s;
        rec.inputs = corr_key(f);
        rec.verdict = ok ? "pass" : "fail";
        rec.runtime_ms = ms_since(t0);
        rep.records.push_back(rec);
    }
}

void suite_boundedness(Report& rep, const VarietyModel& vm, DetRng& base,
                       const SuiteParams& p) {
    int n = vm.n();
    Rat sup = 0;
    for (int s = 0; s < p.samples; ++s) {
        DetRng rng = base.child();
        Correspondence f = random_effective(rng, vm, p);
        Correspondence g = random_effective(rng, vm, p);
        auto t0 = Clock::now();
        std::vector<Rat> df = degree_sequence(f, vm), dg = degree_sequence(g, vm);
        Rat denom = 0;
        for (int i = 0; i <= n; ++i) denom += df[(size_t)i] * dg[(size_t)(n - i)];
        CheckRecord rec;
        rec.check_id = "boundedness";
        rec.sample = s;
        rec.inputs = corr_key(f) + " . " + corr_key(g);
        if (denom == 0) {
            rec.verdict = "fail";
            rec.certified_values = {{"denominator", "0"}};
        } else {
            Rat ratio = rat_abs(intersect(f, g, vm)) / denom;
            sup = std::max(sup, ratio);
            rec.verdict = "pass";
            rec.ratios = {{"ratio", dec(ratio)}};
        }
        rec.runtime_ms = ms_since(t0);
        rep.records.push_back(rec);
    }
    CheckRecord rec;
    rec.check_id = "boundedness_supremum";
    rec.sample = p.samples;
    rec.verdict = "pass";
    rec.ratios = {{"supremum", dec(sup)}};
    rep.records.push_back(rec);
}

void suite_lieberman(Report& rep, const VarietyModel& vm, DetRng& base,
                     const SuiteParams& p) {
    int n = vm.n();
    for (int s = 0; s < p.samples; ++s) {
        DetRng rng = base.child();
        EndMatrix phi = random_endo(rng, vm.spec, p.entry_bound, true);
        EndMatrix psi = random_endo(rng, vm.spec, p.entry_bound, true);
        Correspondence f = random_effective(rng, vm, p);
        Correspondence g = random_effective(rng, vm, p);
        auto t0 = Clock::now();
        GradedAction actf = graded_action(f, vm);
        GradedAction actL = graded_action(lieberman_pushforward(phi, psi, f, vm), vm);
        Mat Mphi = realize_pullback(phi, vm.spec);
        Mat Mpsi = realize_pullback(psi, vm.spec);
        bool ok = true;
        for (int i = 0; i <= 2 * n; ++i) {
            Mat expected = pushforward_matrix(Mphi, i) * actf.mats[(size_t)i] *
                           exterior_power_matrix(Mpsi, i);
            ok = ok && actL.mats[(size_t)i] == expected;
        }
        GradedAction actg = graded_action(g, vm);
        GradedAction actgf = graded_action(compose(g, f, vm), vm);
        for (int i = 0; i <= 2 * n; ++i)
            ok = ok && actgf.mats[(size_t)i] ==
                           actf.mats[(size_t)i] * actg.mats[(size_t)i];
        CheckRecord rec;
        rec.check_id = "lieberman";
        rec.sample = s;
        rec.inputs = endo_key(phi) + " . " + endo_key(psi) + " . " + corr_key(f);
        rec.verdict = ok ? "pass" : "fail";
        rec.runtime_ms = ms_since(t0);
        rep.records.push_back(rec);
    }
}

void suite_castelnuovo_severi(Report& rep, const VarietyModel& vm, DetRng& base,
                              const SuiteParams& p) {
    if (vm.n() != 1)
        throw InputError("castelnuovo_severi suite requires a one-dimensional model");
    for (int s = 0; s < p.samples; ++s) {
        DetRng rng = base.child();
        Correspondence c = random_effective(rng, vm, p);
        auto t0 = Clock::now();
        Rat lhs = intersect(c, c, vm);
        std::vector<Rat> degs = degree_sequence(c, vm);
        Rat rhs = 2 * degs[0] * degs[1];
        CheckRecord rec;
        rec.check_id = "castelnuovo_severi";
        rec.sample = s;
        rec.inputs = corr_key(c);
        rec.verdict = lhs <= rhs ? "pass" : "fail";
        rec.certified_values = {{"bound", rat_string(rhs)},
                                {"self_intersection", rat_string(lhs)}};
        rec.runtime_ms = ms_since(t0);
        rep.records.push_back(rec);
    }
}

void suite_norm_ratios(Report& rep, const VarietyModel& vm, DetRng& base,
                       const SuiteParams& p) {
    for (int s = 0; s < p.samples; ++s) {
        DetRng rng = base.child();
        Correspondence f = random_effective(rng, vm, p);
        std::string in = corr_key(f);
        for (int k = 0; k <= vm.n(); ++k) {
            auto t0 = Clock::now();
            NormRatios nr = norm_comparison_ratios(f, k, vm);
            CheckRecord rec;
            rec.check_id = "norm_ratios";
            rec.sample = s;
            rec.k = k;
            rec.inputs = in;
            rec.verdict = nr.degenerate ? "fail" : "pass";
            rec.ratios = {{"even", dec(nr.even)}};
            if (nr.odd_sq) rec.ratios.push_back({"odd_sq", dec(*nr.odd_sq)});
            rec.runtime_ms = ms_since(t0);
            rep.records.push_back(rec);
        }
    }
}

}  // namespace

const std::vector<std::string>& suite_ids() {
    static const std::vector<std::string> ids = {
        "ddc",         "gwrh",       "semisimple",  "dinh",
        "logconcave",  "gr_identity", "trace_bounds", "boundedness",
        "lieberman",   "castelnuovo_severi",          "norm_ratios"};
    return ids;
}

EndMatrix random_endo(DetRng& rng, const AbelianSpec& spec, int entry_bound,
                      bool require_isogeny) {
    for (int attempt = 0; attempt < 256; ++attempt) {
        EndMatrix f = zero_endo(spec);
        for (size_t b = 0; b < spec.factors.size(); ++b) {
            int m = spec.factors[b].multiplicity;
            bool cm = !spec.factors[b].order.is_Z;
            for (int r = 0; r < m; ++r)
                for (int c = 0; c < m; ++c) {
                    OrderElem e;
                    e.u = rng.int_in(-entry_bound, entry_bound);
                    e.v = cm ? rng.int_in(-entry_bound, entry_bound) : 0;
                    f.blocks[b][(size_t)r][(size_t)c] = e;
                }
        }
        if (!require_isogeny || isogeny_degree(f, spec) != 0) return f;
    }
    throw InputError("sampling: no isogeny found within the attempt budget");
}

EndMatrix random_polarized_endo(DetRng& rng, const AbelianSpec& spec, int entry_bound,
                                Rat* q_out) {
    long u = (long)rng.int_in(1, std::max(1, entry_bound));
    EndMatrix f = zero_endo(spec);
    for (size_t b = 0; b < spec.factors.size(); ++b) {
        const Factor& fac = spec.factors[b];
        int m = fac.multiplicity;
        std::vector<int> perm(m);
        std::iota(perm.begin(), perm.end(), 0);
        for (int j = m - 1; j > 0; --j)
            std::swap(perm[(size_t)j], perm[(size_t)rng.int_in(0, j)]);
        bool gaussian = !fac.order.is_Z && fac.order.t == 0 && fac.order.d == 1;
        for (int j = 0; j < m; ++j) {
            long sign = rng.coin() ? 1 : -1;
            bool use_w = gaussian && rng.coin();
            f.blocks[b][(size_t)perm[(size_t)j]][(size_t)j] =
                use_w ? OrderElem{0, sign * u} : OrderElem{sign * u, 0};
        }
    }
    if (q_out) *q_out = Rat(u) * Rat(u);
    return f;
}

Correspondence random_effective(DetRng& rng, const VarietyModel& vm,
                                const SuiteParams& params, int terms_override) {
    int nterms = terms_override > 0 ? terms_override
                                    : 1 + (int)rng.int_in(0, params.max_terms - 1);
    Correspondence acc;
    for (int t = 0; t < nterms; ++t) {
        int len = 1 + (int)rng.int_in(0, params.word_len - 1);
        Correspondence w;
        for (int j = 0; j < len; ++j) {
            EndMatrix e = random_endo(rng, vm.spec, params.entry_bound, true);
            Correspondence a = rng.coin() ? graph(e, vm) : transpose_graph(e, vm);
            w = j == 0 ? a : compose(w, a, vm);
        }
        w = corr_scale(rng.pick(params.coeff_set), w, vm);
        acc = t == 0 ? w : corr_add(acc, w, vm);
    }
    return acc;
}

Report run_suite(const VarietyConfig& cfg, const std::string& suite_id, uint64_t seed,
                 const SuiteParams& params, bool allow_large) {
    bool known = false;
    for (const std::string& id : suite_ids()) known = known || id == suite_id;
    if (!known) throw InputError("unknown suite: " + suite_id);
    if (params.samples < 0) throw InputError("parameter out of range: samples");
    if (params.entry_bound < 1) throw InputError("parameter out of range: entry_bound");
    if (params.word_len < 1) throw InputError("parameter out of range: word_len");
    if (params.max_terms < 1) throw InputError("parameter out of range: max_terms");
    if (params.m_max < 4 || params.m_max > 1000)
        throw InputError("parameter out of range: m_max");
    if (params.coeff_set.empty()) throw InputError("parameter out of range: coeff_set");
    for (const Rat& q : params.coeff_set)
        if (q <= 0) throw InputError("parameter out of range: coeff_set");
    if (params.tol <= 0) throw InputError("parameter out of range: tol");

    VarietyModel vm = make_variety(cfg.spec, allow_large);
    Report rep;
    rep.config_digest = config_digest(cfg);
    rep.suite = suite_id;
    rep.seed = seed;
    rep.samples = params.samples;
    rep.generated_at = utc_now();

    DetRng base(seed);
    if (suite_id == "ddc") suite_ddc(rep, vm, base, params);
    else if (suite_id == "gwrh") suite_gwrh(rep, vm, base, params);
    else if (suite_id == "semisimple") suite_semisimple(rep, vm, base, params);
    else if (suite_id == "dinh") suite_dinh(rep, vm, base, params);
    else if (suite_id == "logconcave") suite_logconcave(rep, vm, base, params);
    else if (suite_id == "gr_identity") suite_gr_identity(rep, vm, base, params);
    else if (suite_id == "trace_bounds") suite_trace_bounds(rep, vm, base, params);
    else if (suite_id == "boundedness") suite_boundedness(rep, vm, base, params);
    else if (suite_id == "lieberman") suite_lieberman(rep, vm, base, params);
    else if (suite_id == "castelnuovo_severi") suite_castelnuovo_severi(rep, vm, base, params);
    else suite_norm_ratios(rep, vm, base, params);
    return rep;
}

}  // namespace av
