#include "av/report.hpp"

#include <regex>
#include <sstream>

#include <json.hpp>

#include "av/errors.hpp"

namespace av {

using nlohmann::json;

std::string format_interval(const Interval& iv, int frac_digits) {
    return "[" + rat_decimal(iv.lo, frac_digits, -1) + "," +
           rat_decimal(iv.hi, frac_digits, +1) + "]";
}

namespace {

json record_to_json(const CheckRecord& rec) {
    json j;
    j["check_id"] = rec.check_id;
    j["sample"] = rec.sample;
    j["k"] = rec.k;
    j["inputs"] = rec.inputs;
    j["verdict"] = rec.verdict;
    j["expected_fail"] = rec.expected_fail;
    json vals = json::object();
    for (const auto& [k, v] : rec.certified_values) vals[k] = v;
    j["certified_values"] = vals;
    json rats = json::object();
    for (const auto& [k, v] : rec.ratios) rats[k] = v;
    j["ratios"] = rats;
    j["saturation_events"] = rec.saturation_events;
    j["runtime_ms"] = rec.runtime_ms;
    return j;
}

std::string csv_quote(const std::string& s) {
    bool need = s.find_first_of(",\"\n") != std::string::npos;
    if (!need) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        out += c;
    }
    out += "\"";
    return out;
}

std::string join_pairs(const std::vector<std::pair<std::string, std::string>>& ps) {
    std::string out;
    for (const auto& [k, v] : ps) {
        if (!out.empty()) out += ";";
        out += k + "=" + v;
    }
    return out;
}

std::string join_list(const std::vector<std::string>& xs) {
    std::string out;
    for (const std::string& x : xs) {
        if (!out.empty()) out += ";";
        out += x;
    }
    return out;
}

}  // namespace

std::string emit_json(const Report& r) {
    json j;
    j["tool_version"] = r.tool_version;
    j["config_digest"] = r.config_digest;
    j["suite"] = r.suite;
    j["seed"] = r.seed;
    j["samples"] = r.samples;
    j["generated_at"] = r.generated_at;
    j["records"] = json::array();
    for (const CheckRecord& rec : r.records) j["records"].push_back(record_to_json(rec));
    return j.dump(2) + "\n";
}

std::string emit_csv(const Report& r) {
    std::ostringstream out;
    out << "check_id,sample,k,verdict,expected_fail,inputs,certified_values,"
           "ratios,saturation_events,runtime_ms\n";
    for (const CheckRecord& rec : r.records) {
        out << csv_quote(rec.check_id) << "," << rec.sample << "," << rec.k << ","
            << rec.verdict << "," << (rec.expected_fail ? "true" : "false") << ","
            << csv_quote(rec.inputs) << "," << csv_quote(join_pairs(rec.certified_values))
            << "," << csv_quote(join_pairs(rec.ratios)) << ","
            << csv_quote(join_list(rec.saturation_events)) << "," << rec.runtime_ms
            << "\n";
    }
    return out.str();
}

std::string emit(const Report& r, const std::string& format) {
    if (format == "json") return emit_json(r);
    if (format == "csv") return emit_csv(r);
    throw InputError("unknown report format: " + format);
}

std::string strip_timing_json(const std::string& report_json) {
    json j = json::parse(report_json);
    j["generated_at"] = "";
    if (j.contains("records"))
        for (json& rec : j["records"]) rec["runtime_ms"] = 0;
    return j.dump(2) + "\n";
}

std::string strip_timing_csv(const std::string& report_csv) {
    std::istringstream in(report_csv);
    std::ostringstream out;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (!first) {
            size_t comma = line.rfind(',');
            if (comma != std::string::npos) line = line.substr(0, comma + 1) + "0";
        }
        first = false;
        out << line << "\n";
    }
    return out.str();
}

int worst_exit_code(const Report& r) {
    for (const CheckRecord& rec : r.records) {
        if (rec.verdict == "fail" && !rec.expected_fail) return kExitCheckFailed;
        if (rec.verdict == "pass" && rec.expected_fail) return kExitCheckFailed;
    }
    return kExitOk;
}

namespace {

bool type_matches(const json& inst, const std::string& t) {
    if (t == "object") return inst.is_object();
    if (t == "array") return inst.is_array();
    if (t == "string") return inst.is_string();
    if (t == "integer") return inst.is_number_integer();
    if (t == "number") return inst.is_number();
    if (t == "boolean") return inst.is_boolean();
    if (t == "null") return inst.is_null();
    return false;
}

bool check_schema(const json& inst, const json& sch, const std::string& path,
                  std::string* why) {
    auto reject = [&](const std::string& msg) {
        if (why) *why = path + ": " + msg;
        return false;
    };
    if (sch.is_boolean()) return sch.get<bool>() ? true : reject("schema forbids value");
    if (!sch.is_object()) return reject("unsupported schema node");

    if (sch.contains("type")) {
        const json& t = sch["type"];
        bool ok = false;
        if (t.is_string()) ok = type_matches(inst, t.get<std::string>());
        else if (t.is_array())
            for (const json& one : t) ok = ok || type_matches(inst, one.get<std::string>());
        if (!ok) return reject("type mismatch, expected " + t.dump());
    }
    if (sch.contains("enum")) {
        bool ok = false;
        for (const json& e : sch["enum"]) ok = ok || e == inst;
        if (!ok) return reject("value not in enum " + sch["enum"].dump());
    }
    if (sch.contains("pattern") && inst.is_string()) {
        std::regex re(sch["pattern"].get<std::string>());
        if (!std::regex_search(inst.get<std::string>(), re))
            return reject("pattern mismatch " + sch["pattern"].dump());
    }
    if (sch.contains("minimum") && inst.is_number()) {
        if (inst.get<double>() < sch["minimum"].get<double>())
            return reject("below minimum");
    }
    if (inst.is_object()) {
        if (sch.contains("required"))
            for (const json& r : sch["required"])
                if (!inst.contains(r.get<std::string>()))
                    return reject("missing required field " + r.dump());
        const json* props = sch.contains("properties") ? &sch["properties"] : nullptr;
        for (auto it = inst.begin(); it != inst.end(); ++it) {
            const std::string& key = it.key();
            if (props && props->contains(key)) {
                if (!check_schema(it.value(), (*props)[key], path + "." + key, why))
                    return false;
            } else if (sch.contains("additionalProperties")) {
                if (!check_schema(it.value(), sch["additionalProperties"],
                                  path + "." + key, why))
                    return false;
            }
        }
    }
    if (inst.is_array() && sch.contains("items")) {
        for (size_t i = 0; i < inst.size(); ++i)
            if (!check_schema(inst[i], sch["items"], path + "[" + std::to_string(i) + "]",
                              why))
                return false;
    }
    return true;
}

}  // namespace

bool validate_report_json(const std::string& report_json, const std::string& schema_json,
                          std::string* why) {
    json inst, sch;
    try {
        inst = json::parse(report_json);
        sch = json::parse(schema_json);
    } catch (const json::parse_error& e) {
        if (why) *why = e.what();
        return false;
    }
    return check_schema(inst, sch, "$", why);
}

}  // namespace av
