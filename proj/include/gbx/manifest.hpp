#pragma once

#include <map>
#include <string>
#include <vector>

#include "gbx/errors.hpp"
#include "gbx/expr.hpp"
#include "gbx/real50.hpp"

namespace gbx {

// One named numeric constant: the decimal text is authoritative, the value is
// that text parsed at 50-digit precision.  The anchor names the published
// statement the number was lifted from.
struct ManifestConstant {
    std::string key;
    std::string text;
    std::string anchor;
    std::vector<std::string> flags;
    real50 value;
};

// One named formula: a parsed expression plus the exact argument list it
// expects.  The declared args must match the expression's free variables,
// which is checked when the manifest loads.
struct ManifestFormula {
    std::string key;
    std::string text;
    std::string anchor;
    std::vector<std::string> flags;
    std::vector<std::string> args;
    Expr expr;
};

// The constants-and-formulas table backing the bound evaluators.  Every
// packaged coefficient and every transcribed formula lives here exactly once
// so the numbers can be audited against their sources without reading code.
//
// parse throws config_error on malformed JSON, on a formula that fails to
// parse, or on a declared argument list that disagrees with the formula's
// free variables.  Lookup of a missing key also throws config_error: a
// missing entry is a build defect, not a caller mistake.
class Manifest {
  public:
    static Manifest parse(const std::string& json_text);

    // The table compiled into the library.  Parsed once, then shared.
    static const Manifest& embedded();

    bool has_constant(const std::string& key) const;
    bool has_formula(const std::string& key) const;

    const ManifestConstant& constant(const std::string& key) const;
    const ManifestFormula& formula(const std::string& key) const;

    // Shorthand for constant(key).value.
    real50 value(const std::string& key) const;

    // Evaluates formula(key) under env.  env must bind exactly the declared
    // args; a missing binding surfaces as domain_error from the expression.
    real50 eval(const std::string& key, const ExprEnv& env) const;

    std::vector<std::string> constant_keys() const;
    std::vector<std::string> formula_keys() const;

    int version() const { return version_; }

  private:
    int version_ = 0;
    std::map<std::string, ManifestConstant> constants_;
    std::map<std::string, ManifestFormula> formulas_;
};

namespace detail {
// Raw JSON text baked in at configure time from share/constants_manifest.json.
const char* embedded_manifest_json();
}

} // namespace gbx
