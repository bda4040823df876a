#pragma once

#include <map>
#include <string>

#include "av/abelian.hpp"

namespace av {

/// Parsed model description: the factor list plus named endomorphisms and
/// named correspondence expressions. Names are shared between the CLI and
/// the expression language.
struct VarietyConfig {
    AbelianSpec spec;
    std::map<std::string, EndMatrix> endomorphisms;
    std::map<std::string, std::string> correspondences;
    std::string source_text;
};

/// Parses and validates the versioned JSON config format. All problems are
/// collected and thrown as one InputError, with line:column positions for
/// syntax errors and config paths for semantic ones.
VarietyConfig parse_config(const std::string& text);

VarietyConfig load_config(const std::string& path);

/// Hex digest of the exact config bytes, quoted in reports.
std::string config_digest(const VarietyConfig& cfg);

}  // namespace av
