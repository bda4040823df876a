#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "av/config.hpp"
#include "av/report.hpp"
#include "av/rng.hpp"
#include "av/spectral.hpp"

namespace av {

/// Knobs for the randomized stress-suites. Samples are drawn from a seeded
/// stream; identical (config, suite, seed, params) give identical reports
/// up to timing fields.
struct SuiteParams {
    int samples = 100;
    int entry_bound = 3;  // |u|, |v| of random order elements
    int word_len = 2;     // atoms per word
    int max_terms = 2;    // words per correspondence
    int m_max = 40;       // iterate horizon for growth sequences
    std::vector<Rat> coeff_set = {Rat(1), Rat(1, 2), Rat(2), Rat(3)};
    Rat tol = Rat(1, 1000000);  // interval agreement tolerance
};

const std::vector<std::string>& suite_ids();

Report run_suite(const VarietyConfig& cfg, const std::string& suite_id, uint64_t seed,
                 const SuiteParams& params, bool allow_large = false);

/// Random bounded endomorphism; with require_isogeny the draw is rejected
/// until the realization is invertible (deterministic attempt counter).
EndMatrix random_endo(DetRng& rng, const AbelianSpec& spec, int entry_bound,
                      bool require_isogeny);

/// Random monomial endomorphism with a common entry norm, so the pullback
/// scales the polarization form by a single rational q (returned).
EndMatrix random_polarized_endo(DetRng& rng, const AbelianSpec& spec, int entry_bound,
                                Rat* q_out);

/// Nonnegative combination of random graph and transposed-graph words.
Correspondence random_effective(DetRng& rng, const VarietyModel& vm,
                                const SuiteParams& params, int terms_override = 0);

}  // namespace av
