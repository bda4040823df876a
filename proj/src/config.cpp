#include "av/config.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "av/errors.hpp"
#include "av/expr.hpp"
#include "av/sha256.hpp"

namespace av {

using nlohmann::json;

namespace {

std::string line_col(const std::string& text, size_t byte) {
    size_t line = 1, col = 1;
    for (size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return std::to_string(line) + ":" + std::to_string(col);
}

bool valid_name(const std::string& s) {
    if (s.empty()) return false;
    if (!std::isalpha((unsigned char)s[0]) && s[0] != '_') return false;
    for (char c : s)
        if (!std::isalnum((unsigned char)c) && c != '_') return false;
    for (const char* kw : {"graph", "transpose", "compose", "power"})
        if (s == kw) return false;
    return true;
}

struct Errors {
    std::vector<std::string> items;

    void add(const std::string& path, const std::string& msg) {
        items.push_back(path + ": " + msg);
    }
    void raise_if_any() const {
        if (items.empty()) return;
        std::string joined = "config invalid:";
        for (const std::string& e : items) joined += "\n  " + e;
        throw InputError(joined);
    }
};

bool get_long(const json& j, long& out) {
    if (!j.is_number_integer()) return false;
    out = (long)j.get<long long>();
    return true;
}

EndOrder parse_order(const json& j, const std::string& path, Errors& errs) {
    EndOrder o;
    if (j.is_string()) {
        if (j.get<std::string>() != "Z")
            errs.add(path, "order string must be \"Z\"");
        return o;
    }
    if (!j.is_object()) {
        errs.add(path, "order must be \"Z\" or an object {t, d}");
        return o;
    }
    o.is_Z = false;
    if (!j.contains("t") || !get_long(j["t"], o.t))
        errs.add(path + ".t", "integer required");
    if (!j.contains("d") || !get_long(j["d"], o.d))
        errs.add(path + ".d", "integer required");
    for (auto it = j.begin(); it != j.end(); ++it)
        if (it.key() != "t" && it.key() != "d")
            errs.add(path + "." + it.key(), "unknown field");
    try {
        validate_order(o);
    } catch (const InputError& e) {
        errs.add(path, e.what());
    }
    return o;
}

EndMatrix parse_endo(const json& j, const AbelianSpec& spec, const std::string& path,
                     Errors& errs) {
    EndMatrix f = zero_endo(spec);
    if (!j.is_array() || j.size() != spec.factors.size()) {
        errs.add(path, "expected one block per factor (" +
                           std::to_string(spec.factors.size()) + ")");
        return f;
    }
    for (size_t b = 0; b < j.size(); ++b) {
        int m = spec.factors[b].multiplicity;
        const json& blk = j[b];
        std::string bp = path + "[" + std::to_string(b) + "]";
        if (!blk.is_array() || (int)blk.size() != m) {
            errs.add(bp, "expected " + std::to_string(m) + " rows");
            continue;
        }
        for (int r = 0; r < m; ++r) {
            const json& row = blk[r];
            std::string rp = bp + "[" + std::to_string(r) + "]";
            if (!row.is_array() || (int)row.size() != m) {
                errs.add(rp, "expected " + std::to_string(m) + " entries");
                continue;
            }
            for (int c = 0; c < m; ++c) {
                const json& e = row[c];
                std::string ep = rp + "[" + std::to_string(c) + "]";
                long u = 0, v = 0;
                if (!e.is_array() || e.size() != 2 || !get_long(e[0], u) ||
                    !get_long(e[1], v)) {
                    errs.add(ep, "malformed entry, expected [u, v] integers");
                    continue;
                }
                if (spec.factors[b].order.is_Z && v != 0)
                    errs.add(ep, "v must be 0 on a factor with order Z");
                f.blocks[b][r][c] = OrderElem{Int(u), Int(v)};
            }
        }
    }
    return f;
}

}  // namespace

VarietyConfig parse_config(const std::string& text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError("config invalid:\n  " + line_col(text, e.byte) +
                         ": " + std::string(e.what()));
    }

    Errors errs;
    VarietyConfig cfg;
    cfg.source_text = text;

    if (!root.is_object()) {
        errs.add("$", "top level must be an object");
        errs.raise_if_any();
    }
    if (!root.contains("version") || !root["version"].is_number_integer() ||
        root["version"].get<long long>() != 1)
        errs.add("version", "this tool reads config format version 1");

    static const char* known[] = {"version", "factors", "endomorphisms", "correspondences"};
    for (auto it = root.begin(); it != root.end(); ++it) {
        bool ok = false;
        for (const char* k : known) ok = ok || it.key() == k;
        if (!ok) errs.add(it.key(), "unknown field");
    }

    if (!root.contains("factors") || !root["factors"].is_array() ||
        root["factors"].empty()) {
        errs.add("factors", "non-empty array required");
        errs.raise_if_any();
    }
    const json& jf = root["factors"];
    for (size_t i = 0; i < jf.size(); ++i) {
        std::string fp = "factors[" + std::to_string(i) + "]";
        const json& e = jf[i];
        if (!e.is_object()) {
            errs.add(fp, "object required");
            continue;
        }
        Factor f;
        if (!e.contains("curve") || !e["curve"].is_string() ||
            e["curve"].get<std::string>().empty())
            errs.add(fp + ".curve", "non-empty string required");
        else
            f.curve_id = e["curve"].get<std::string>();
        long mult = 1;
        if (e.contains("multiplicity") && !get_long(e["multiplicity"], mult))
            errs.add(fp + ".multiplicity", "integer required");
        if (mult < 1 || mult > 1000000)
            errs.add(fp + ".multiplicity", "positive integer required");
        else
            f.multiplicity = (int)mult;
        if (e.contains("order")) f.order = parse_order(e["order"], fp + ".order", errs);
        for (auto it = e.begin(); it != e.end(); ++it)
            if (it.key() != "curve" && it.key() != "multiplicity" && it.key() != "order")
                errs.add(fp + "." + it.key(), "unknown field");
        cfg.spec.factors.push_back(f);
    }
    errs.raise_if_any();
    try {
        validate_spec(cfg.spec);
    } catch (const InputError& e) {
        errs.add("factors", e.what());
        errs.raise_if_any();
    }

    if (root.contains("endomorphisms")) {
        const json& je = root["endomorphisms"];
        if (!je.is_object())
            errs.add("endomorphisms", "object of name -> blocks required");
        else
            for (auto it = je.begin(); it != je.end(); ++it) {
                std::string ep = "endomorphisms." + it.key();
                if (!valid_name(it.key())) {
                    errs.add(ep, "name must be an identifier other than a reserved word");
                    continue;
                }
                cfg.endomorphisms[it.key()] =
                    parse_endo(it.value(), cfg.spec, ep, errs);
            }
    }

    if (root.contains("correspondences")) {
        const json& jc = root["correspondences"];
        if (!jc.is_object())
            errs.add("correspondences", "object of name -> expression required");
        else
            for (auto it = jc.begin(); it != jc.end(); ++it) {
                std::string cp = "correspondences." + it.key();
                if (!valid_name(it.key())) {
                    errs.add(cp, "name must be an identifier other than a reserved word");
                    continue;
                }
                if (cfg.endomorphisms.count(it.key())) {
                    errs.add(cp, "name already used for an endomorphism");
                    continue;
                }
                if (!it.value().is_string()) {
                    errs.add(cp, "expression string required");
                    continue;
                }
                cfg.correspondences[it.key()] = it.value().get<std::string>();
            }
    }
    errs.raise_if_any();

    check_corr_references(cfg);
    return cfg;
}

VarietyConfig load_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read config file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

std::string config_digest(const VarietyConfig& cfg) {
    return sha256_hex(cfg.source_text);
}

}  // namespace av
