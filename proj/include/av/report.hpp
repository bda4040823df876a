#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "av/rational.hpp"

namespace av {

inline constexpr const char* kToolVersion = "1.0.0";

/// One verdict row. sample and k are -1 when the check is not per-sample or
/// not graded. Expected-fail rows are controls; they do not affect the exit
/// code unless they unexpectedly pass.
struct CheckRecord {
    std::string check_id;
    int sample = -1;
    int k = -1;
    std::string inputs;
    std::string verdict = "pass";  // pass | fail | inconclusive
    bool expected_fail = false;
    std::vector<std::pair<std::string, std::string>> certified_values;
    std::vector<std::pair<std::string, std::string>> ratios;
    std::vector<std::string> saturation_events;
    long long runtime_ms = 0;
};

struct Report {
    std::string tool_version = kToolVersion;
    std::string config_digest;
    std::string suite;
    uint64_t seed = 0;
    int samples = 0;
    std::string generated_at;  // wall-clock stamp, excluded from determinism
    std::vector<CheckRecord> records;
};

/// "[lo,hi]" with outward-rounded fixed-point decimals.
std::string format_interval(const Interval& iv, int frac_digits = 12);

/// Sorted-key JSON document.
std::string emit_json(const Report& r);
/// Header plus one row per record, i.e. one row per (check, sample, k).
std::string emit_csv(const Report& r);
std::string emit(const Report& r, const std::string& format);

/// Zeroes runtime_ms and blanks generated_at so reruns compare byte-equal.
std::string strip_timing_json(const std::string& report_json);
std::string strip_timing_csv(const std::string& report_csv);

/// kExitOk unless some record failed unexpectedly or an expected-fail
/// control passed.
int worst_exit_code(const Report& r);

/// Validates a report document against the shipped JSON schema subset
/// (type, required, properties, additionalProperties, items, enum,
/// pattern, minimum).
bool validate_report_json(const std::string& report_json, const std::string& schema_json,
                          std::string* why);

}  // namespace av
