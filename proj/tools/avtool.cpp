#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "av/config.hpp"
#include "av/errors.hpp"
#include "av/expr.hpp"
#include "av/report.hpp"
#include "av/suites.hpp"

namespace {

using namespace av;

std::string order_text(const EndOrder& o) {
    if (o.is_Z) return "Z";
    return "Z[w], w^2 = " + std::to_string(o.t) + "w - " + std::to_string(o.d);
}

int do_describe(const std::string& cfg_path, bool allow_large) {
    VarietyConfig cfg = load_config(cfg_path);
    VarietyModel vm = make_variety(cfg.spec, allow_large);
    int n = vm.n();
    std::cout << "factors:\n";
    for (const Factor& f : cfg.spec.factors)
        std::cout << "  " << f.curve_id << " x " << f.multiplicity << ", order "
                  << order_text(f.order) << "\n";
    std::cout << "dimension n = " << n << ", cohomology rank " << vm.cohom.rank
              << "\n";
    std::cout << "betti:";
    for (int i = 0; i <= 2 * n; ++i) std::cout << " " << vm.cohom.betti(i);
    std::cout << "\n";
    if (n <= 4) {
        std::cout << "divisor generators: " << divisor_generators(vm).size() << "\n";
        std::cout << "lattice dimensions:";
        for (int k = 0; k <= n; ++k) std::cout << " " << build_Nk(vm, k).dimension;
        std::cout << "\n";
    }
    std::cout << "endomorphisms:";
    for (const auto& [name, e] : cfg.endomorphisms) {
        (void)e;
        std::cout << " " << name;
    }
    std::cout << "\ncorrespondences:";
    for (const auto& [name, expr] : cfg.correspondences) {
        (void)expr;
        std::cout << " " << name;
    }
    std::cout << "\n";
    return kExitOk;
}

int do_degrees(const std::string& cfg_path, const std::string& corr_text, int kopt,
               bool allow_large) {
    VarietyConfig cfg = load_config(cfg_path);
    VarietyModel vm = make_variety(cfg.spec, allow_large);
    Correspondence c = eval_corr_expr(corr_text, cfg, vm);
    int n = vm.n();
    std::vector<Rat> degs = degree_sequence(c, vm);
    if (kopt >= 0) {
        if (kopt > n) throw InputError("--k out of range 0.." + std::to_string(n));
        std::cout << "deg_" << kopt << " = " << rat_string(degs[(size_t)kopt]) << "\n";
        return kExitOk;
    }
    for (int k = 0; k <= n; ++k)
        std::cout << "deg_" << k << " = " << rat_string(degs[(size_t)k]) << "\n";
    std::cout << "total_degree = " << rat_string(total_degree(c, vm)) << "\n";
    std::cout << "lefschetz = " << rat_string(lefschetz_number(c, vm)) << "\n";
    return kExitOk;
}

int do_spectra(const std::string& cfg_path, const std::string& corr_text,
               const std::string& tol_text, bool allow_large) {
    VarietyConfig cfg = load_config(cfg_path);
    VarietyModel vm = make_variety(cfg.spec, allow_large);
    Correspondence c = eval_corr_expr(corr_text, cfg, vm);
    Rat tol = parse_rational(tol_text);
    if (tol <= 0) throw InputError("--tol must be positive");
    GradedAction act = graded_action(c, vm);
    int n = vm.n();
    for (int i = 0; i <= 2 * n; ++i) {
        SpectralReport rep = spectral_report(act.mats[(size_t)i], tol);
        std::cout << "chi_" << i << " in " << format_interval(rep.radius, 9)
                  << "  semisimple: " << (rep.semisimple ? "yes" : "no") << "\n";
    }
    if (c.terms.size() == 1 && c.terms[0].coeff == 1 &&
        c.terms[0].word.atoms.size() == 1 &&
        c.terms[0].word.atoms[0].kind == AtomKind::Graph) {
        std::optional<Rat> q = is_polarized(c.terms[0].word.atoms[0].endo, vm.spec, vm.cohom);
        if (q) {
            std::cout << "polarization multiplier q = " << rat_string(*q) << "\n";
            for (int i = 0; i <= 2 * n; ++i) {
                WeilVerdict w = weil_check(act.mats[(size_t)i], *q, i, tol);
                std::cout << "weil weight " << i << ": "
                          << (w.pass() ? "pass" : "fail") << "\n";
            }
        }
    }
    for (int k = 0; k <= n; ++k) {
        NumericalLattice lat = build_Nk(vm, k);
        LambdaNumerical ln = lambda_numerical(act, lat, vm, tol);
        GrowthEstimate lg = lambda_growth(act, k, 40, vm, tol);
        std::cout << "lambda_" << k << " in " << format_interval(ln.value, 9)
                  << "  growth " << format_interval(lg.dominant_modulus, 9)
                  << (lg.stabilized ? "" : "  [" + lg.diagnostic + "]") << "\n";
        for (const std::string& e : ln.saturation_events)
            std::cout << "  saturation: " << e << "\n";
    }
    return kExitOk;
}

void print_summary(const Report& rep) {
    int fails = 0, inconclusive = 0, expected = 0;
    for (const CheckRecord& r : rep.records) {
        if (r.verdict == "fail" && !r.expected_fail) ++fails;
        if (r.verdict == "fail" && r.expected_fail) ++expected;
        if (r.verdict == "inconclusive") ++inconclusive;
    }
    std::cout << "suite " << rep.suite << ": " << rep.records.size() << " records, "
              << fails << " unexpected fails, " << expected << " expected fails, "
              << inconclusive << " inconclusive\n";
}

int do_check(const std::string& cfg_path, const std::string& suite, uint64_t seed,
             int samples, bool allow_large) {
    VarietyConfig cfg = load_config(cfg_path);
    SuiteParams params;
    params.samples = samples;
    Report rep = run_suite(cfg, suite, seed, params, allow_large);
    for (const CheckRecord& r : rep.records) {
        std::cout << r.check_id << " s=" << r.sample;
        if (r.k >= 0) std::cout << " k=" << r.k;
        std::cout << " " << r.verdict << (r.expected_fail ? " (expected-fail)" : "")
                  << "\n";
    }
    print_summary(rep);
    return worst_exit_code(rep);
}

int do_report(const std::string& cfg_path, const std::string& suite, uint64_t seed,
              int samples, const std::string& format, const std::string& out_path,
              bool allow_large) {
    VarietyConfig cfg = load_config(cfg_path);
    SuiteParams params;
    params.samples = samples;
    Report rep = run_suite(cfg, suite, seed, params, allow_large);
    std::string bytes = emit(rep, format);
    if (out_path == "-") {
        std::cout << bytes;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw InputError("cannot write " + out_path);
        out << bytes;
    }
    return worst_exit_code(rep);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact correspondence dynamics on products of elliptic curves"};
    app.require_subcommand(1);
    bool allow_large = false;
    app.add_flag("--allow-large-n", allow_large, "lift the n <= 4 size guard");

    std::string cfg_path, corr_text, suite, tol_text = "1/1000000000";
    std::string format = "json", out_path = "-";
    int kopt = -1, samples = 100;
    uint64_t seed = 42;

    CLI::App* cmd_describe = app.add_subcommand("describe", "model and lattice summary");
    cmd_describe->add_option("config", cfg_path, "config file")->required();

    CLI::App* cmd_degrees = app.add_subcommand("degrees", "degree sequence of a correspondence");
    cmd_degrees->add_option("config", cfg_path, "config file")->required();
    cmd_degrees->add_option("corr", corr_text, "name or expression")->required();
    cmd_degrees->add_option("--k", kopt, "only this codimension");

    CLI::App* cmd_spectra = app.add_subcommand("spectra", "certified spectral data");
    cmd_spectra->add_option("config", cfg_path, "config file")->required();
    cmd_spectra->add_option("corr", corr_text, "name or expression")->required();
    cmd_spectra->add_option("--tol", tol_text, "certification tolerance (rational)");

    CLI::App* cmd_check = app.add_subcommand("check", "run one stress-suite");
    cmd_check->add_option("config", cfg_path, "config file")->required();
    cmd_check->add_option("--suite", suite, "suite id")->required();
    cmd_check->add_option("--seed", seed, "sample stream seed");
    cmd_check->add_option("--samples", samples, "sample count");

    CLI::App* cmd_report = app.add_subcommand("report", "run a suite and emit a report");
    cmd_report->add_option("config", cfg_path, "config file")->required();
    cmd_report->add_option("--suite", suite, "suite id")->required();
    cmd_report->add_option("--seed", seed, "sample stream seed");
    cmd_report->add_option("--samples", samples, "sample count");
    cmd_report->add_option("--format", format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd_report->add_option("--out", out_path, "output path, - for stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? av::kExitOk : av::kExitInputError;
    }

    try {
        if (cmd_describe->parsed()) return do_describe(cfg_path, allow_large);
        if (cmd_degrees->parsed()) return do_degrees(cfg_path, corr_text, kopt, allow_large);
        if (cmd_spectra->parsed())
            return do_spectra(cfg_path, corr_text, tol_text, allow_large);
        if (cmd_check->parsed())
            return do_check(cfg_path, suite, seed, samples, allow_large);
        if (cmd_report->parsed())
            return do_report(cfg_path, suite, seed, samples, format, out_path, allow_large);
    } catch (const av::InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return av::kExitInputError;
    } catch (const av::PrecisionError& e) {
        std::cerr << "precision error: " << e.what() << "\n";
        return av::kExitPrecisionError;
    }
    return av::kExitOk;
}
