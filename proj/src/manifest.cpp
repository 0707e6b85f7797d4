#include "gbx/manifest.hpp"

#include <algorithm>
#include <utility>

#include <json.hpp>

namespace gbx {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& what) { throw config_error("constants manifest: " + what); }

std::string require_string(const json& obj, const std::string& key, const std::string& where) {
    auto it = obj.find(key);
    if (it == obj.end() || !it->is_string()) fail(where + ": missing string field '" + key + "'");
    return it->get<std::string>();
}

std::vector<std::string> optional_string_list(const json& obj, const std::string& key,
                                              const std::string& where) {
    auto it = obj.find(key);
    if (it == obj.end()) return {};
    if (!it->is_array()) fail(where + ": field '" + key + "' must be an array of strings");
    std::vector<std::string> out;
    for (const auto& item : *it) {
        if (!item.is_string()) fail(where + ": field '" + key + "' must be an array of strings");
        out.push_back(item.get<std::string>());
    }
    return out;
}

} // namespace

Manifest Manifest::parse(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        fail(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) fail("top level must be an object");

    Manifest m;
    if (auto it = doc.find("version"); it != doc.end()) {
        if (!it->is_number_integer()) fail("'version' must be an integer");
        m.version_ = it->get<int>();
    }

    if (auto it = doc.find("constants"); it != doc.end()) {
        if (!it->is_object()) fail("'constants' must be an object");
        for (const auto& [key, entry] : it->items()) {
            const std::string where = "constant '" + key + "'";
            if (!entry.is_object()) fail(where + ": entry must be an object");
            ManifestConstant c;
            c.key = key;
            c.text = require_string(entry, "value", where);
            c.anchor = require_string(entry, "anchor", where);
            c.flags = optional_string_list(entry, "flags", where);
            try {
                c.value = real50(c.text);
            } catch (const std::exception&) {
                fail(where + ": value '" + c.text + "' is not a decimal number");
            }
            m.constants_.emplace(key, std::move(c));
        }
    }

    if (auto it = doc.find("formulas"); it != doc.end()) {
        if (!it->is_object()) fail("'formulas' must be an object");
        for (const auto& [key, entry] : it->items()) {
            const std::string where = "formula '" + key + "'";
            if (!entry.is_object()) fail(where + ": entry must be an object");
            ManifestFormula f;
            f.key = key;
            f.text = require_string(entry, "expr", where);
            f.anchor = require_string(entry, "anchor", where);
            f.flags = optional_string_list(entry, "flags", where);
            f.args = optional_string_list(entry, "args", where);
            try {
                f.expr = Expr::parse(f.text);
            } catch (const format_error& e) {
                fail(where + ": " + e.what());
            }
            // The declared argument list must agree exactly with the free
            // variables of the expression; a mismatch means the table and the
            // formula drifted apart.
            std::vector<std::string> declared = f.args;
            std::sort(declared.begin(), declared.end());
            const std::vector<std::string> actual = f.expr.variables();
            if (declared != actual) {
                std::string want;
                for (const auto& v : actual) want += (want.empty() ? "" : ", ") + v;
                fail(where + ": declared args do not match expression variables (" + want + ")");
            }
            m.formulas_.emplace(key, std::move(f));
        }
    }

    return m;
}

const Manifest& Manifest::embedded() {
    static const Manifest instance = parse(detail::embedded_manifest_json());
    return instance;
}

bool Manifest::has_constant(const std::string& key) const { return constants_.count(key) != 0; }
bool Manifest::has_formula(const std::string& key) const { return formulas_.count(key) != 0; }

const ManifestConstant& Manifest::constant(const std::string& key) const {
    auto it = constants_.find(key);
    if (it == constants_.end()) fail("no constant named '" + key + "'");
    return it->second;
}

const ManifestFormula& Manifest::formula(const std::string& key) const {
    auto it = formulas_.find(key);
    if (it == formulas_.end()) fail("no formula named '" + key + "'");
    return it->second;
}

real50 Manifest::value(const std::string& key) const { return constant(key).value; }

real50 Manifest::eval(const std::string& key, const ExprEnv& env) const {
    return formula(key).expr.eval(env);
}

std::vector<std::string> Manifest::constant_keys() const {
    std::vector<std::string> out;
    out.reserve(constants_.size());
    for (const auto& [key, value] : constants_) out.push_back(key);
    return out;
}

std::vector<std::string> Manifest::formula_keys() const {
    std::vector<std::string> out;
    out.reserve(formulas_.size());
    for (const auto& [key, value] : formulas_) out.push_back(key);
    return out;
}

} // namespace gbx
