// Tests for the formula interpreter and the embedded constants manifest.
//
// The interpreter backs the table path of every tabulated bound, so the
// grammar corners (precedence, right-associative powers, exponent
// backtracking, full-precision literals) and the error contract
// (format_error at parse, domain_error at eval) are pinned down here.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <string>
#include <vector>

#include "gbx/arith.hpp"
#include "gbx/errors.hpp"
#include "gbx/expr.hpp"
#include "gbx/manifest.hpp"

using gbx::Expr;
using gbx::ExprEnv;
using gbx::Manifest;
using gbx::real50;

namespace {

real50 ev(const std::string& text, const ExprEnv& env = {}) {
    return Expr::parse(text).eval(env);
}

bool close(const real50& a, const real50& b, const real50& rel) {
    if (a == b) return true;
    return abs(a - b) <= rel * (abs(a) + abs(b));
}

} // namespace

TEST_CASE("arithmetic precedence and associativity") {
    CHECK(ev("2+3*4") == 14);
    CHECK(ev("(2+3)*4") == 20);
    CHECK(ev("2-3-4") == -5);
    CHECK(ev("24/4/2") == 3);
    CHECK(ev("2^3^2") == 512);   // right-associative
    CHECK(ev("-2^2") == -4);     // negation binds looser than the power
    CHECK(ev("(-2)^2") == 4);
    CHECK(ev("2^-3") == real50(1) / 8);
    CHECK(ev("2*-3") == -6);
    CHECK(ev(" 1 + 2 ") == 3);
}

TEST_CASE("numeric literals keep full precision") {
    // 0.1 is not a binary fraction; the literal must go through the decimal
    // string constructor, not a double.
    CHECK(ev("0.1") == real50("0.1"));
    CHECK(ev("0.1") != real50(0.1));
    CHECK(ev("53.989") == real50("53.989"));
    CHECK(ev("2e3") == 2000);
    CHECK(ev("2E-3") == real50("0.002"));
    CHECK(ev("1.5e2") == 150);
    CHECK(ev(".5") == real50("0.5"));
    CHECK(ev("7.") == 7);
}

TEST_CASE("builtin constants and functions") {
    CHECK(ev("pi") == gbx::r50::pi());
    CHECK(ev("e") == gbx::r50::e());
    CHECK(abs(ev("log(e)") - 1) < real50("1e-48"));
    CHECK(close(ev("loglog(exp(e))"), 1, real50("1e-48")));
    CHECK(ev("sqrt(16)") == 4);
    CHECK(ev("abs(-3)") == 3);
    CHECK(ev("min(2,3)") == 2);
    CHECK(ev("max(2,3)") == 3);
    CHECK(ev("min(3,max(1,2))") == 2);
    CHECK(close(ev("exp(log(7))"), 7, real50("1e-48")));
}

TEST_CASE("a number followed by a bare e is not an exponent") {
    // "2e3" is a literal, but in "2*e" the e is the base of the natural
    // logarithm; "2e" alone leaves a dangling identifier.
    CHECK(ev("2*e") == 2 * gbx::r50::e());
    CHECK(ev("2e+3") == 2000);
    CHECK_THROWS_AS(Expr::parse("2e"), gbx::format_error);
}

TEST_CASE("variables come from the environment") {
    ExprEnv env{{"q", real50(7)}, {"x0", real50(100)}};
    CHECK(ev("q^2+1", env) == 50);
    CHECK(close(ev("log(x0)/log(10)", env), 2, real50("1e-45")));
    // pi and e are builtins and must not be shadowed by the list of free
    // variables.
    Expr f = Expr::parse("pi*q+e*x0+loglog(x0)");
    CHECK(f.variables() == std::vector<std::string>{"q", "x0"});
    Expr sorted = Expr::parse("zz+aa+mm");
    CHECK(sorted.variables() == std::vector<std::string>{"aa", "mm", "zz"});
    CHECK(Expr::parse("1+2").variables().empty());
}

TEST_CASE("parse failures are format errors with a position") {
    for (const char* bad : {"", "2+", "(2", "2)", "2 3", "2..5", ".",
                            "log 2", "a,b", "^2", "2e", "#"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(Expr::parse(bad), gbx::format_error);
    }
    try {
        Expr::parse("1+*2");
        FAIL("expected format_error");
    } catch (const gbx::format_error& e) {
        CHECK(std::string(e.what()).find("position") != std::string::npos);
    }
}

TEST_CASE("evaluation failures are domain errors") {
    CHECK_THROWS_AS(ev("1/0"), gbx::domain_error);
    CHECK_THROWS_AS(ev("log(0)"), gbx::domain_error);
    CHECK_THROWS_AS(ev("log(-1)"), gbx::domain_error);
    CHECK_THROWS_AS(ev("loglog(1)"), gbx::domain_error);
    CHECK_THROWS_AS(ev("sqrt(-1)"), gbx::domain_error);
    CHECK_THROWS_AS(ev("(-2)^0.5"), gbx::domain_error);
    CHECK_THROWS_AS(ev("0^-1"), gbx::domain_error);
    CHECK_THROWS_AS(ev("x"), gbx::domain_error);          // unbound variable
    CHECK_THROWS_AS(ev("min(1,2,3)"), gbx::domain_error); // wrong arity
    CHECK_THROWS_AS(ev("min(2)"), gbx::domain_error);     // arity checked at eval
    CHECK_THROWS_AS(ev("sin(1)"), gbx::domain_error);     // unknown function
    CHECK_THROWS_AS(Expr().eval({}), gbx::domain_error);  // default-constructed
}

TEST_CASE("min and max arities are two") {
    CHECK_THROWS_AS(ev("max(1)"), gbx::domain_error);
    CHECK(ev("max(1,max(2,3))") == 3);
}

TEST_CASE("text round-trips") {
    const std::string text = "2*q + log(x0)";
    CHECK(Expr::parse(text).text() == text);
}

TEST_CASE("embedded manifest loads and exposes both tables") {
    const Manifest& m = Manifest::embedded();
    CHECK(m.version() == 1);
    CHECK(m.has_constant("zeta.c2"));
    CHECK(m.has_formula("f1"));
    CHECK_FALSE(m.has_constant("no.such.key"));
    CHECK(m.value("zeta.c2") == real50("53.989"));
    CHECK(m.value("shared.d11") == real50("1.03883"));
    CHECK(m.value("math.twin_prime_c2") ==
          real50("0.660161815846869573927812110014"));

    // Key lists are sorted and complete enough to cover both contexts.
    auto ck = m.constant_keys();
    auto fk = m.formula_keys();
    CHECK(std::is_sorted(ck.begin(), ck.end()));
    CHECK(std::is_sorted(fk.begin(), fk.end()));
    CHECK(ck.size() >= 25);
    CHECK(fk.size() >= 50);

    // Declared arguments equal the free variables of the expression.
    for (const auto& key : fk) {
        const auto& f = m.formula(key);
        auto declared = f.args;
        std::sort(declared.begin(), declared.end());
        CHECK(f.expr.variables() == declared);
    }
    // Every anchor is non-empty: a tabulated value without a source note is
    // useless for review.
    for (const auto& key : ck) CHECK_FALSE(m.constant(key).anchor.empty());
    for (const auto& key : fk) CHECK_FALSE(m.formula(key).anchor.empty());
}

TEST_CASE("manifest formula evaluation") {
    const Manifest& m = Manifest::embedded();
    // f1 = pi^2 d5^2 (2 x0 + 1) / (2 log 2) with d5 = 1/(2 pi).
    real50 x0 = 2 * gbx::r50::pi() * gbx::r50::e() + 1;
    real50 d5 = 1 / (2 * gbx::r50::pi());
    real50 direct = gbx::r50::pi() * gbx::r50::pi() * d5 * d5 * (2 * x0 + 1) /
                    (2 * gbx::r50::log2());
    CHECK(close(m.eval("f1", {{"d5", d5}, {"x0", x0}}), direct, real50("1e-48")));
    CHECK_THROWS_AS(m.eval("f1", {{"d5", d5}}), gbx::domain_error);
    CHECK_THROWS_AS(m.value("no.such.key"), gbx::config_error);
    CHECK_THROWS_AS(m.formula("no.such.key"), gbx::config_error);
}

TEST_CASE("manifest rejects malformed documents") {
    CHECK_THROWS_AS(Manifest::parse("not json"), gbx::config_error);
    CHECK_THROWS_AS(Manifest::parse("[1,2]"), gbx::config_error);
    // An empty object is a valid, empty manifest.
    Manifest empty = Manifest::parse("{}");
    CHECK(empty.constant_keys().empty());
    CHECK_FALSE(empty.has_formula("f1"));
    // Declared args must match the expression's free variables exactly.
    CHECK_THROWS_AS(
        Manifest::parse(R"({"version":1,"constants":{},
          "formulas":{"f":{"expr":"a+b","args":["a"],"anchor":"x"}}})"),
        gbx::config_error);
    CHECK_THROWS_AS(
        Manifest::parse(R"({"version":1,"constants":{},
          "formulas":{"f":{"expr":"a","args":["a","b"],"anchor":"x"}}})"),
        gbx::config_error);
    // Unparseable constant value.
    CHECK_THROWS_AS(
        Manifest::parse(R"({"version":1,
          "constants":{"c":{"value":"12x","anchor":"x"}},"formulas":{}})"),
        gbx::config_error);
    // Syntax error inside a formula body.
    CHECK_THROWS_AS(
        Manifest::parse(R"({"version":1,"constants":{},
          "formulas":{"f":{"expr":"a+","args":["a"],"anchor":"x"}}})"),
        gbx::config_error);
    // Minimal well-formed document round-trips.
    Manifest ok = Manifest::parse(
        R"({"version":1,
            "constants":{"c":{"value":"2.5","anchor":"src"}},
            "formulas":{"f":{"expr":"c*2","args":["c"],"anchor":"src"}}})");
    CHECK(ok.value("c") == real50("2.5"));
    CHECK(ok.eval("f", {{"c", ok.value("c")}}) == 5);
}
