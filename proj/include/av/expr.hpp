#pragma once

#include <string>

#include "av/config.hpp"
#include "av/correspondence.hpp"

namespace av {

/// Correspondence expression language:
///   expr   := term ('+' term)*
///   term   := [rational '*'] factor
///   factor := graph(F) | transpose(F) | compose(A, B) | power(A, m)
///           | (expr) | name
/// F names an endomorphism from the config; a bare name refers to a named
/// correspondence. transpose also accepts a correspondence argument.

/// Parses every named correspondence, resolves references, and rejects
/// cyclic definitions. Throws InputError; no model is needed.
void check_corr_references(const VarietyConfig& cfg);

/// Evaluates an expression (or a bare correspondence name) against the
/// config's named entries, producing a canonical correspondence.
Correspondence eval_corr_expr(const std::string& text, const VarietyConfig& cfg,
                              const VarietyModel& vm);

}  // namespace av
