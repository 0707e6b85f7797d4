// Tests for the explicit-constant evaluators: assumption tables, the f
// blocks, Lambert-W thresholds, theorem reproductions, propositions, and
// the zero-region catalogue.
//
// Two independent transcriptions of every formula exist: the hand-written
// C++ path and the expression strings in the embedded manifest.  The grid
// tests drive both over wide parameter ranges and require 1e-25 relative
// agreement, so a slip in either transcription shows up as a mismatch.
// On top of that, 40-digit values recomputed externally with mpmath are
// frozen here and pin both paths to a third, out-of-repo evaluation.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>
#include <string>
#include <vector>

#include "gbx/arith.hpp"
#include "gbx/bounds.hpp"
#include "gbx/errors.hpp"
#include "gbx/manifest.hpp"

using gbx::AssumptionConstants;
using gbx::BoundBreakdown;
using gbx::CharClass;
using gbx::ExprEnv;
using gbx::FFunction;
using gbx::Manifest;
using gbx::PropositionArgs;
using gbx::real50;
using gbx::RegionArgs;
using gbx::ZeroRegion;

namespace {

bool close(const real50& a, const real50& b, const real50& rel) {
    if (a == b) return true;
    return abs(a - b) <= rel * (abs(a) + abs(b)) / 2;
}

const real50 kTight("1e-38");  // frozen 40-digit oracle comparisons
const real50 kDual("1e-25");   // hand path vs manifest path

std::vector<real50> logspace(const real50& lo, const real50& hi, int n) {
    // Endpoints are returned exactly; exp(log(lo)) can round below lo and
    // trip a >= hypothesis.
    std::vector<real50> out;
    real50 la = log(lo), lb = log(hi);
    for (int i = 0; i < n; ++i) {
        if (i == 0) out.push_back(lo);
        else if (i == n - 1) out.push_back(hi);
        else out.push_back(exp(la + (lb - la) * i / (n - 1)));
    }
    return out;
}

real50 phi_of(const AssumptionConstants& k) {
    return k.phi_value != 0 ? k.phi_value : real50(gbx::euler_phi(k.q));
}

// Evaluates an f block through the manifest expressions alone, injecting
// the lower blocks as environment variables exactly as the table declares
// them.  No shared code with f_function.
real50 manifest_f(FFunction which, const AssumptionConstants& k, const real50& t_slot) {
    const Manifest& m = Manifest::embedded();
    ExprEnv env{{"q", real50(k.q)},   {"x0", k.x0},     {"T1", t_slot},
                {"d1", k.d1},         {"d2", k.d2},     {"d3", k.d3},
                {"d4", k.d4},         {"d5", k.d5},     {"d6", k.d6},
                {"d7", k.d7},         {"d8", k.d8},     {"d9", k.d9},
                {"d10", k.d10},       {"d11", k.d11},   {"cq3", k.c_q3},
                {"cq4", k.c_q4},      {"phiq", phi_of(k)}};
    env["f1"] = m.eval("f1", env);
    env["f2"] = m.eval("f2", env);
    env["f3"] = m.eval("f3", env);
    switch (which) {
        case FFunction::f1: return env["f1"];
        case FFunction::f2: return env["f2"];
        case FFunction::f3: return env["f3"];
        default: break;
    }
    env["f4"] = m.eval("f4", env);
    env["f5"] = m.eval("f5", env);
    env["f6"] = m.eval("f6", env);
    env["f4z"] = m.eval("f4z", env);
    env["f5z"] = m.eval("f5z", env);
    env["f6z"] = m.eval("f6z", env);
    switch (which) {
        case FFunction::f4: return env["f4"];
        case FFunction::f5: return env["f5"];
        case FFunction::f6: return env["f6"];
        case FFunction::f7: return m.eval("f7", env);
        case FFunction::f8: return m.eval("f8", env);
        case FFunction::f4_zeta: return env["f4z"];
        case FFunction::f5_zeta: return env["f5z"];
        case FFunction::f6_zeta: return env["f6z"];
        case FFunction::f7_zeta: return m.eval("f7z", env);
        default: throw gbx::domain_error("unhandled block");
    }
}

void check_sum_consistency(const BoundBreakdown& b) {
    real50 sum = 0;
    for (const auto& [label, value] : b.components) sum += value;
    CHECK(close(sum, b.total, real50("1e-45")));
}

bool has_note(const BoundBreakdown& b, const std::string& needle) {
    for (const auto& n : b.notes)
        if (n.find(needle) != std::string::npos) return true;
    return false;
}

const std::vector<FFunction> kAllBlocks = {
    FFunction::f1,      FFunction::f2,      FFunction::f3,      FFunction::f4,
    FFunction::f5,      FFunction::f6,      FFunction::f7,      FFunction::f8,
    FFunction::f4_zeta, FFunction::f5_zeta, FFunction::f6_zeta, FFunction::f7_zeta};

} // namespace

// ---------------------------------------------------------------------------
// Assumption tables

TEST_CASE("zeta assumption constants match the tabulated values") {
    AssumptionConstants k = gbx::zeta_constants();
    CHECK(k.q == 1);
    CHECK(k.c1 == 0);
    CHECK(k.c2 == real50("53.989"));
    CHECK(k.t0 == 400000);
    CHECK(close(k.t1, 2 * gbx::r50::pi() * gbx::r50::e() + 1, kTight));
    CHECK(k.x0 == k.t1);
    // d1 = 2((5/4)^(1 + 1/log 2) + 1), frozen externally.
    CHECK(close(k.d1, real50("5.4494638968853977978422404923270818848934"), kTight));
    CHECK(k.d2 == real50("34.544"));
    CHECK(k.d3 == real50("8.022"));
    CHECK(k.d4 == real50("18.249"));
    CHECK(close(k.d5, 1 / (2 * gbx::r50::pi()), kTight));
    CHECK(k.d6 == 0);
    CHECK(k.d7 == real50("2.058"));
    CHECK(k.d8 == real50("0.04621"));
    CHECK(k.d9 == real50("3.523"));
    CHECK(k.d10 == real50("6.879"));
    CHECK(k.d11 == real50("1.03883"));
    CHECK(k.phi_value == 1);
}

TEST_CASE("progression assumption constants depend on the conductor") {
    AssumptionConstants k = gbx::general_q_constants(400001);
    CHECK(k.c1 == real50("10.5"));
    CHECK(k.c2 == real50("61.5"));
    CHECK(close(k.x0, exp(gbx::r50::e()), kTight));
    CHECK(k.t1 == k.x0);
    real50 q(400001);
    CHECK(close(k.c_q3, 100 / (sqrt(q) * log(q) * log(q)), kTight));
    CHECK(close(k.c_q4, real50("0.055") * sqrt(q) * log(q), kTight));
    CHECK(close(k.d3, log(q) + real50("8.022"), kTight));
    CHECK(close(k.d4, real50("0.195") * sqrt(q) + real50("147.735"), kTight));
    CHECK(close(k.d6, real50("4.434") * log(q), kTight));
    CHECK(k.d7 == real50("0.430"));
    CHECK(close(k.d8, real50("1735.58100006944505167394666173562762405691"), kTight));
    CHECK(k.d9 == real50("1.325"));
    CHECK(k.d10 == real50("0.364"));
    CHECK(k.phi_value == 0); // exact Euler phi applies

    AssumptionConstants p = gbx::general_q_constants(400001, true);
    CHECK(p.phi_value == gbx::phi1_star(400001));
    CHECK(p.d8 < k.d8); // averaging over primitive characters shrinks d8
    CHECK_THROWS_AS(gbx::general_q_constants(2), gbx::domain_error);
}

// ---------------------------------------------------------------------------
// f blocks: frozen external values, then hand path vs manifest path

TEST_CASE("zeta-context f blocks match frozen 40-digit recomputations") {
    AssumptionConstants k = gbx::zeta_constants();
    auto at = [&](FFunction which, const real50& slot) {
        return gbx::f_function(which, k, slot);
    };
    CHECK(close(at(FFunction::f1, k.t1),
                real50("6.70112674711382226625380779716407216763133"), kTight));
    CHECK(close(at(FFunction::f2, k.t1),
                real50("184502.390386985059982779840173157781503393"), kTight));
    CHECK(close(at(FFunction::f3, k.t1),
                real50("3941.44115592095563027438877275175093113441"), kTight));
    CHECK(close(at(FFunction::f4_zeta, k.t1),
                real50("1410445.55111215947187435817785410494811111"), kTight));
    CHECK(close(at(FFunction::f5_zeta, k.t1),
                real50("1823.66881795292726122469163138812591184856"), kTight));
    CHECK(close(at(FFunction::f6_zeta, k.t1),
                real50("95.1947920084510909848465118644170598139502"), kTight));
    CHECK(close(at(FFunction::f7_zeta, k.t1),
                real50("6434030.16714564575175987037643896466143457"), kTight));
    CHECK(close(at(FFunction::f7_zeta, k.t0),
                real50("106476379085.813597885913457205789170146193"), kTight));
}

TEST_CASE("progression-context f blocks match frozen 40-digit recomputations") {
    AssumptionConstants k = gbx::general_q_constants(400001);
    auto at = [&](FFunction which) { return gbx::f_function(which, k, k.t1); };
    CHECK(close(at(FFunction::f1),
                real50("5.64608162613937075282705257503898435444347"), kTight));
    CHECK(close(at(FFunction::f2),
                real50("1984931.3622844161985722995886741436070702"), kTight));
    CHECK(close(at(FFunction::f3),
                real50("424.290744264978967910638794987343064033157"), kTight));
    CHECK(close(at(FFunction::f4),
                real50("17602102.3518520480394820275775616049757181"), kTight));
    CHECK(close(at(FFunction::f5),
                real50("9389.61224198739589658760582812822331396137"), kTight));
    CHECK(close(at(FFunction::f6),
                real50("933.318913102365502275442910004027346141949"), kTight));
}

TEST_CASE("conductor-uniform primitive blocks match frozen recomputations") {
    // phi1*(q) replaced by its proven lower bound q/R(q) everywhere.
    AssumptionConstants k = gbx::general_q_constants(400001, true);
    real50 ratio = Manifest::embedded().eval(
        "region.phi_ratio", {{"C0", gbx::r50::euler_c0()},
                             {"C2", gbx::r50::twin_prime_c2()},
                             {"q", real50(400001)}});
    CHECK(close(ratio, real50("46.3166839378570329081020486060138416051447"), kTight));
    k.phi_value = real50(400001) / ratio;
    CHECK(close(k.phi_value, real50("8636.21844207759429505942472771063920878511"), kTight));
    k.d8 = Manifest::embedded().eval("general.d8_primitive",
                                     {{"q", real50(400001)}, {"phi1star", k.phi_value}});
    CHECK(close(k.d8, real50("683.481030493105847398497543732327772962608"), kTight));
    CHECK(close(gbx::f_function(FFunction::f7, k, k.t1),
                real50("74465218.5113365114352988803850859653860682"), kTight));
    CHECK(close(gbx::f_function(FFunction::f8, k, k.t1),
                real50("27394227.6088149181950944819037603259953536"), kTight));
}

TEST_CASE("hand path and manifest path agree on a zeta-context grid") {
    AssumptionConstants base = gbx::zeta_constants();
    const auto pivots = logspace(real50("15.2"), real50("1e6"), 25);
    const std::vector<real50> slots = {base.t1, real50(37), real50(400000),
                                       real50("1e9")};
    for (FFunction which : kAllBlocks) {
        for (const real50& x0 : pivots) {
            for (const real50& slot : slots) {
                AssumptionConstants k = base;
                k.x0 = x0;
                CAPTURE(gbx::to_string(which));
                CHECK(close(gbx::f_function(which, k, slot), manifest_f(which, k, slot),
                            kDual));
            }
        }
    }
}

TEST_CASE("hand path and manifest path agree on a progression-context grid") {
    const std::uint64_t conductors[] = {3, 4, 57, 105, 400001, 1000003};
    const auto pivots = logspace(real50("15.2"), real50("1e5"), 4);
    for (std::uint64_t q : conductors) {
        for (bool primitive : {false, true}) {
            AssumptionConstants base = gbx::general_q_constants(q, primitive);
            for (FFunction which : kAllBlocks) {
                for (const real50& x0 : pivots) {
                    for (const real50& slot : {base.t1, real50(400000)}) {
                        AssumptionConstants k = base;
                        k.x0 = x0;
                        CAPTURE(q);
                        CAPTURE(gbx::to_string(which));
                        CHECK(close(gbx::f_function(which, k, slot),
                                    manifest_f(which, k, slot), kDual));
                    }
                }
            }
        }
    }
}

TEST_CASE("f block name map round-trips") {
    for (FFunction which : kAllBlocks) {
        CHECK(gbx::f_function_from_name(gbx::to_string(which)) == which);
    }
    CHECK_THROWS_AS(gbx::f_function_from_name("f99"), gbx::domain_error);
}

TEST_CASE("f1 grows with the pivot and f3 grows with the height slot") {
    AssumptionConstants k = gbx::zeta_constants();
    AssumptionConstants k2 = k;
    k2.x0 = 2 * k.x0;
    CHECK(gbx::f_function(FFunction::f1, k2, k.t1) >
          gbx::f_function(FFunction::f1, k, k.t1));
    CHECK(gbx::f_function(FFunction::f3, k, real50(800000)) >
          gbx::f_function(FFunction::f3, k, real50(400000)));
}

// ---------------------------------------------------------------------------
// Lambert W

TEST_CASE("lambert w reproduces frozen reference points") {
    using gbx::lambert_w;
    CHECK(lambert_w(0, 0) == 0);
    CHECK(close(lambert_w(0, 1),
                real50("0.567143290409783872999968662210355549753816"), kTight));
    CHECK(close(lambert_w(0, real50("-0.1")),
                real50("-0.111832559158962964833569456820265842272645"), kTight));
    CHECK(close(lambert_w(-1, real50("-0.1")),
                real50("-3.5771520639572972184093919635119948804018"), kTight));
    const real50 neg_inv_e = -exp(real50(-1));
    CHECK(close(lambert_w(0, neg_inv_e), real50(-1), real50("1e-20")));
    CHECK(close(lambert_w(-1, neg_inv_e), real50(-1), real50("1e-20")));
}

TEST_CASE("lambert w satisfies w e^w = y on both branches") {
    using gbx::lambert_w;
    for (const real50& y : logspace(real50("1e-30"), real50("1e30"), 40)) {
        real50 w = lambert_w(0, y);
        CHECK(close(w * exp(w), y, real50("1e-45")));
    }
    // Branch -1 lives on (-1/e, 0).
    for (const real50& m : logspace(real50("1e-12"), real50("0.36"), 40)) {
        real50 y = -m;
        real50 w = lambert_w(-1, y);
        CHECK(w <= -1);
        CHECK(close(w * exp(w), y, real50("1e-45")));
    }
}

TEST_CASE("lambert w rejects out-of-domain arguments") {
    using gbx::lambert_w;
    CHECK_THROWS_AS(lambert_w(0, real50("-0.5")), gbx::domain_error);  // below -1/e
    CHECK_THROWS_AS(lambert_w(-1, real50("0.1")), gbx::domain_error);  // y >= 0
    CHECK_THROWS_AS(lambert_w(1, real50(1)), gbx::domain_error);       // no such branch
}

// ---------------------------------------------------------------------------
// Zero-free width and the critical exponent

TEST_CASE("eta matches a frozen value and decreases in height") {
    AssumptionConstants z = gbx::zeta_constants();
    // 1 / (53.989 (log t)^(2/3) (loglog t)^(1/3)) at log t = 1e6.
    CHECK(close(gbx::eta_q_log(real50("1e6"), z),
                real50("7.71920195802120530501529650023438785740059e-7"), kTight));
    AssumptionConstants g = gbx::general_q_constants(400001);
    CHECK(close(gbx::eta_q_log(real50(37), g),
                real50("8.45244210056663708462783196555849965528589e-4"), kTight));
    real50 prev = gbx::eta_q_log(real50(3), z);
    for (const real50& lt : logspace(real50(4), real50("1e12"), 30)) {
        real50 cur = gbx::eta_q_log(lt, z);
        CHECK(cur < prev);
        prev = cur;
    }
    CHECK(close(gbx::eta_q(exp(real50(37)), g), gbx::eta_q_log(real50(37), g),
                real50("1e-45")));
    CHECK_THROWS_AS(gbx::eta_q_log(real50(2), z), gbx::domain_error);
}

TEST_CASE("b star clamps between the zero-free edge and b_q") {
    AssumptionConstants z = gbx::zeta_constants();
    real50 lx("1e6");
    CHECK(close(gbx::b_star_log(lx, z), 1 - gbx::eta_q_log(lx, z), real50("1e-45")));
    CHECK(gbx::b_star_log(lx, z, real50("0.5")) == real50("0.5"));
    CHECK(gbx::b_star_log(lx, z) < 1);
    CHECK_THROWS_AS(gbx::b_star_log(lx, z, real50("0.4")), gbx::domain_error);
    CHECK_THROWS_AS(gbx::b_star_log(lx, z, real50("1.1")), gbx::domain_error);
}

// ---------------------------------------------------------------------------
// Thresholds

TEST_CASE("log x thresholds solve the fixed point and match the headline sizes") {
    using gbx::ThresholdKind;
    auto z = gbx::threshold(ThresholdKind::first_moment_zeta_log_x);
    CHECK(close(z.value, real50("16934249299093.3342756244285034111624893158"), kTight));
    CHECK(z.w_branch == -1);
    CHECK(z.residual < real50("1e-20"));
    real50 approx_z = Manifest::embedded().value("threshold.thm1_approx");
    CHECK(abs(z.value - approx_z) / approx_z < real50("0.03"));

    auto g = gbx::threshold(ThresholdKind::first_moment_progression_log_x);
    CHECK(close(g.value, real50("66603180430625.661119608124279794440500801"), kTight));
    CHECK(g.residual < real50("1e-20"));
    real50 approx_g = Manifest::embedded().value("threshold.thm3_approx");
    CHECK(abs(g.value - approx_g) / approx_g < real50("0.03"));

    auto s2 = gbx::threshold(ThresholdKind::second_moment_zeta_log_x);
    CHECK(s2.value == 1000000);
    CHECK(s2.residual == 0);
    auto s4 = gbx::threshold(ThresholdKind::second_moment_progression_log_x);
    CHECK(s4.value == 100000000);
    CHECK(s4.residual == 0);
}

TEST_CASE("zero-free crossover height") {
    auto r = gbx::threshold(gbx::ThresholdKind::zero_free_x, 1000003);
    CHECK(close(r.value, real50("1.66055637924125978781439921811872955642136e26"), kTight));
    CHECK(r.w_branch == 0);
    CHECK(r.residual < real50("1e-20"));
    CHECK_THROWS_AS(gbx::threshold(gbx::ThresholdKind::zero_free_x), gbx::domain_error);
    CHECK_THROWS_AS(gbx::threshold(gbx::ThresholdKind::zero_free_x, 2), gbx::domain_error);
}

TEST_CASE("threshold name map round-trips") {
    using gbx::ThresholdKind;
    for (ThresholdKind kind :
         {ThresholdKind::first_moment_zeta_log_x, ThresholdKind::first_moment_progression_log_x,
          ThresholdKind::second_moment_zeta_log_x,
          ThresholdKind::second_moment_progression_log_x, ThresholdKind::zero_free_x}) {
        CHECK(gbx::threshold_from_name(gbx::to_string(kind)) == kind);
    }
    CHECK_THROWS_AS(gbx::threshold_from_name("nope"), gbx::domain_error);
}

// ---------------------------------------------------------------------------
// Theorems

TEST_CASE("theorem coefficients stay below the packaged constants") {
    using gbx::Theorem;
    for (Theorem which : {Theorem::thm1, Theorem::thm2, Theorem::thm3, Theorem::thm4}) {
        BoundBreakdown b = gbx::theorem_bound(which);
        CAPTURE(gbx::to_string(which));
        CHECK(b.hypotheses_met);
        CHECK(b.has_packaged);
        CHECK(b.total <= b.packaged);
        CHECK(b.total >= b.packaged / 2); // the recomputation is not vacuously small
        check_sum_consistency(b);
    }
}

TEST_CASE("theorem totals match frozen recomputations at pinned log x") {
    using gbx::Theorem;
    CHECK(close(gbx::theorem_bound(Theorem::thm1, real50("2e13")).total,
                real50("6.79354706881533062353609538515759098957956"), kTight));
    CHECK(close(gbx::theorem_bound(Theorem::thm2, real50("1e6")).total,
                real50("13.1351569142594680180136781736030368290659"), kTight));
    CHECK(close(gbx::theorem_bound(Theorem::thm3, real50("6.7e13")).total,
                real50("5.80436521618869603607501688233426858027212"), kTight));
    CHECK(close(gbx::theorem_bound(Theorem::thm4, real50("1e8")).total,
                real50("6.39073381125273586718004137888984400830415"), kTight));
}

TEST_CASE("theorem coefficient is decreasing in the conductor") {
    real50 at_min = gbx::theorem_bound(gbx::Theorem::thm3, 0, 400001).total;
    real50 later = gbx::theorem_bound(gbx::Theorem::thm3, 0, 500009).total;
    CHECK(later < at_min);
}

TEST_CASE("theorem below its threshold is reported, not hidden") {
    BoundBreakdown b = gbx::theorem_bound(gbx::Theorem::thm1, real50("1e6"));
    CHECK_FALSE(b.hypotheses_met);
    CHECK(has_note(b, "below the stated threshold"));
    CHECK_THROWS_AS(gbx::theorem_bound(gbx::Theorem::thm1, real50("0.5")),
                    gbx::domain_error);
}

TEST_CASE("theorem name map round-trips") {
    using gbx::Theorem;
    for (Theorem which : {Theorem::thm1, Theorem::thm2, Theorem::thm3, Theorem::thm4})
        CHECK(gbx::theorem_from_name(gbx::to_string(which)) == which);
    CHECK_THROWS_AS(gbx::theorem_from_name("thm5"), gbx::domain_error);
}

// ---------------------------------------------------------------------------
// Propositions

TEST_CASE("first-moment bound over zeta splits into the stated three terms") {
    PropositionArgs args;
    args.log_x = real50("2e13");
    BoundBreakdown b = gbx::proposition_bound(gbx::Proposition::first_moment_zeta, args);
    CHECK(b.hypotheses_met);
    CHECK(b.components.size() == 3);
    check_sum_consistency(b);
    // x^(B*+1) with log x = 2e13 overflows the float range; the breakdown
    // must say so rather than silently saturate.
    CHECK(b.total == std::numeric_limits<real50>::infinity());
    CHECK(has_note(b, "exceeds the floating-point range"));

    args.log_x = real50("1e6");
    BoundBreakdown small = gbx::proposition_bound(gbx::Proposition::first_moment_zeta, args);
    CHECK_FALSE(small.hypotheses_met); // below the Lambert-W threshold
    CHECK(small.total < std::numeric_limits<real50>::infinity());
    CHECK(small.total > 0);
}

TEST_CASE("first-moment bound over progressions honours its three modes") {
    PropositionArgs args;
    args.log_x = real50("1e14");
    args.q = 105;
    BoundBreakdown literal =
        gbx::proposition_bound(gbx::Proposition::first_moment_progression, args);
    CHECK(literal.components.size() == 3);
    CHECK(literal.hypotheses_met);

    args.mode = gbx::PropositionMode::small_conductor;
    BoundBreakdown simple =
        gbx::proposition_bound(gbx::Proposition::first_moment_progression, args);
    CHECK(simple.components.size() == 1);
    CHECK(has_note(simple, "small-conductor"));

    args.mode = gbx::PropositionMode::primitive;
    BoundBreakdown prim =
        gbx::proposition_bound(gbx::Proposition::first_moment_progression, args);
    CHECK(prim.components.size() == 3);
    CHECK(has_note(prim, "primitive"));

    args.mode = gbx::PropositionMode::literal;
    args.q = 4; // q < 83 violates the stated hypothesis
    BoundBreakdown low = gbx::proposition_bound(gbx::Proposition::first_moment_progression, args);
    CHECK_FALSE(low.hypotheses_met);
    CHECK(has_note(low, "q >= 83"));
}

TEST_CASE("second-moment bounds carry the (log x)^5 and (log x)^4 pair") {
    PropositionArgs args;
    args.log_x = real50(40);
    BoundBreakdown z = gbx::proposition_bound(gbx::Proposition::second_moment_zeta, args);
    CHECK(z.hypotheses_met);
    CHECK(z.components.size() == 2);
    check_sum_consistency(z);
    // The two components differ exactly by f7z(T0) / (f1 log x).
    AssumptionConstants k = gbx::zeta_constants();
    real50 expect = gbx::f_function(FFunction::f7_zeta, k, k.t0) /
                    (gbx::f_function(FFunction::f1, k, k.t0) * args.log_x);
    CHECK(close(z.components[1].second / z.components[0].second, expect, real50("1e-40")));

    args.q = 105;
    BoundBreakdown g = gbx::proposition_bound(gbx::Proposition::second_moment_progression, args);
    CHECK(g.components.size() == 2);
    check_sum_consistency(g);
}

TEST_CASE("average-comparison bound uses the divisor count") {
    PropositionArgs args;
    args.log_x = real50(40);
    args.q = 83;
    BoundBreakdown b = gbx::proposition_bound(gbx::Proposition::average_comparison, args);
    CHECK(b.hypotheses_met);
    CHECK(b.components.size() == 2);
    check_sum_consistency(b);
    // q = 83 is prime: the first term carries d(q) = 2 over phi(q) = 82.
    AssumptionConstants k = gbx::general_q_constants(83);
    real50 bs = gbx::b_star_log(args.log_x, k);
    real50 expect = 2 * k.d8 * 2 / real50(82) * exp((bs + 1) * args.log_x);
    CHECK(close(b.components[0].second, expect, real50("1e-40")));
}

TEST_CASE("proposition totals grow with log x while finite") {
    PropositionArgs lo, hi;
    lo.log_x = real50(40);
    hi.log_x = real50(41);
    for (auto which : {gbx::Proposition::second_moment_zeta,
                       gbx::Proposition::first_moment_zeta}) {
        CHECK(gbx::proposition_bound(which, lo).total <
              gbx::proposition_bound(which, hi).total);
    }
}

TEST_CASE("proposition name map round-trips") {
    using gbx::Proposition;
    for (Proposition which :
         {Proposition::first_moment_zeta, Proposition::first_moment_progression,
          Proposition::second_moment_zeta, Proposition::second_moment_progression,
          Proposition::average_comparison})
        CHECK(gbx::proposition_from_name(gbx::to_string(which)) == which);
    CHECK_THROWS_AS(gbx::proposition_from_name("zeroth-moment"), gbx::domain_error);
}

// ---------------------------------------------------------------------------
// Zero-region catalogue

namespace {

real50 region_total(ZeroRegion which, const RegionArgs& args) {
    return gbx::zero_region_bound(which, args).total;
}

// Shared environment for the manifest region formulas; extra bindings are
// ignored by the evaluator.
ExprEnv region_env(const RegionArgs& a) {
    return {{"q", real50(a.q)}, {"t", a.t},  {"u", a.u},
            {"x", a.x},         {"n", a.x},  {"C0", gbx::r50::euler_c0()},
            {"C2", gbx::r50::twin_prime_c2()}};
}

real50 m_eval(const std::string& key, const ExprEnv& env) {
    return Manifest::embedded().eval(key, env);
}

} // namespace

TEST_CASE("zero-free denominators match the manifest") {
    for (const real50& t : logspace(real50(3), real50("1e12"), 50)) {
        RegionArgs a;
        a.t = t;
        CHECK(close(region_total(ZeroRegion::zeta_zero_free, a),
                    m_eval("region.zeta_zero_free", region_env(a)), kDual));
    }
    for (std::uint64_t q : {3ull, 101ull, 400001ull}) {
        for (const real50& t : logspace(real50(10), real50("1e10"), 17)) {
            RegionArgs a;
            a.q = q;
            a.t = t;
            CHECK(close(region_total(ZeroRegion::l_zero_free, a),
                        m_eval("region.l_zero_free", region_env(a)), kDual));
        }
    }
    for (std::uint64_t q : {3ull, 11ull, 1000003ull}) {
        for (double t : {0.0, 0.5, 7.0, 1e8}) {
            RegionArgs a;
            a.q = q;
            a.t = real50(t);
            CHECK(close(region_total(ZeroRegion::l_zero_free_uniform, a),
                        m_eval("region.l_zero_free_uniform", region_env(a)), kDual));
        }
    }
    RegionArgs bad;
    bad.t = real50(2);
    CHECK_THROWS_AS(region_total(ZeroRegion::zeta_zero_free, bad), gbx::domain_error);
}

TEST_CASE("real-zero bounds and verified heights") {
    for (std::uint64_t q : {400001ull, 1000000ull, 1000003ull}) {
        RegionArgs a;
        a.q = q;
        a.chi = CharClass::real_odd;
        CHECK(close(region_total(ZeroRegion::siegel_bound, a),
                    m_eval("region.siegel_odd", region_env(a)), kDual));
        a.chi = CharClass::real_even;
        CHECK(close(region_total(ZeroRegion::siegel_bound, a),
                    m_eval("region.siegel_even", region_env(a)), kDual));
        CHECK(region_total(ZeroRegion::siegel_bound, a) < 1);
    }
    // The bound tightens toward 1 as q grows.
    RegionArgs a1, a2;
    a1.q = 500000;
    a2.q = 50000000;
    a1.chi = a2.chi = CharClass::real_odd;
    CHECK(region_total(ZeroRegion::siegel_bound, a1) <
          region_total(ZeroRegion::siegel_bound, a2));
    RegionArgs small;
    small.q = 399999;
    small.chi = CharClass::real_odd;
    CHECK_THROWS_AS(region_total(ZeroRegion::siegel_bound, small), gbx::domain_error);

    for (std::uint64_t q : {3ull, 5ull, 1000ull, 399999ull, 400000ull}) {
        RegionArgs h;
        h.q = q;
        h.chi = CharClass::parity_even;
        CHECK(close(region_total(ZeroRegion::grh_verified_height, h),
                    m_eval("region.grh_height_even", region_env(h)), kDual));
        h.chi = CharClass::parity_odd;
        CHECK(close(region_total(ZeroRegion::grh_verified_height, h),
                    m_eval("region.grh_height_odd", region_env(h)), kDual));
        h.chi = CharClass::any;
        CHECK(region_total(ZeroRegion::grh_verified_height, h) == real50("293.75"));
    }
    RegionArgs h3;
    h3.q = 3;
    h3.chi = CharClass::parity_even;
    CHECK(close(region_total(ZeroRegion::grh_verified_height, h3),
                real50("33333333.3333333333333333333333333333333333"), kTight));
    RegionArgs hp;
    hp.q = 1;
    hp.chi = CharClass::principal;
    CHECK(region_total(ZeroRegion::grh_verified_height, hp) == real50("3e12"));
    // Minimum over the odd table at q = 4e5 equals the uniform height.
    RegionArgs edge;
    edge.q = 400000;
    edge.chi = CharClass::parity_odd;
    CHECK(region_total(ZeroRegion::grh_verified_height, edge) == real50("293.75"));
}

TEST_CASE("log-derivative gap selects the stated conductor ranges") {
    auto gap = [](std::uint64_t q, CharClass chi) {
        RegionArgs a;
        a.q = q;
        a.chi = chi;
        return gbx::zero_region_bound(ZeroRegion::log_derivative_gap, a);
    };
    RegionArgs e;
    e.q = 500000;
    CHECK(close(gap(500000, CharClass::non_real).total,
                m_eval("region.logder_nonreal", region_env(e)), kDual));
    // Below e^24 - 2 (about 2.65e10) the small-range constants apply.
    for (std::uint64_t q : {400001ull, 1000000000ull, 26489122127ull}) {
        RegionArgs a;
        a.q = q;
        CHECK(close(gap(q, CharClass::real_odd).total,
                    m_eval("region.logder_real_odd_small", region_env(a)), kDual));
        CHECK(close(gap(q, CharClass::real_even).total,
                    m_eval("region.logder_real_even_small", region_env(a)), kDual));
    }
    // Above it, the middle range; e^(92 pi) - 2 is beyond any 64-bit q.
    for (std::uint64_t q : {26489122132ull, 1000000000000ull, 5000000000000000000ull}) {
        RegionArgs a;
        a.q = q;
        CHECK(close(gap(q, CharClass::real_odd).total,
                    m_eval("region.logder_real_odd_mid", region_env(a)), kDual));
        CHECK(close(gap(q, CharClass::real_even).total,
                    m_eval("region.logder_real_even_mid", region_env(a)), kDual));
    }
    CHECK_THROWS_AS(gap(400000, CharClass::non_real), gbx::domain_error);
    CHECK_THROWS_AS(gap(500000, CharClass::any), gbx::domain_error);

    RegionArgs mx;
    mx.q = 500000;
    CHECK(close(region_total(ZeroRegion::log_derivative_gap_max, mx),
                m_eval("region.logder_max", region_env(mx)), kDual));
    // The combined corollary dominates each individual case.
    CHECK(region_total(ZeroRegion::log_derivative_gap_max, mx) >=
          gap(500000, CharClass::real_even).total);
}

TEST_CASE("zero-count boxes match the manifest and the stated conventions") {
    // Conductor box: the smaller of the two published radii wins.
    for (std::uint64_t q : {2ull, 3ull, 1000000ull}) {
        for (const real50& t : logspace(real50(1), real50("1e18"), 13)) {
            RegionArgs a;
            a.q = q;
            a.t = t;
            real50 va = m_eval("region.count_box_a", region_env(a));
            real50 vb = m_eval("region.count_box_b", region_env(a));
            CHECK(close(region_total(ZeroRegion::count_box_conductor, a),
                        va < vb ? va : vb, kDual));
        }
    }
    // Primitive box: main term with the chi(-1)/4 shift plus the l radius.
    for (std::uint64_t q : {3ull, 5ull, 1009ull}) {
        for (const real50& t : logspace(real50(10), real50("1e8"), 9)) {
            for (CharClass chi : {CharClass::parity_even, CharClass::parity_odd}) {
                RegionArgs a;
                a.q = q;
                a.t = t;
                a.chi = chi;
                ExprEnv env = region_env(a);
                env["chi_sign"] = chi == CharClass::parity_even ? 1 : -1;
                env["l"] = log(real50(q) * (t + 2) / (2 * gbx::r50::pi()));
                real50 expect = m_eval("region.count_box_primitive_main", env) +
                                m_eval("region.count_box_primitive_radius", env);
                CHECK(close(region_total(ZeroRegion::count_box_primitive, a), expect,
                            kDual));
            }
        }
    }
    // Small l forces an empty box.
    RegionArgs empty;
    empty.q = 3;
    empty.t = real50(5);
    empty.chi = CharClass::parity_odd;
    CHECK(region_total(ZeroRegion::count_box_primitive, empty) == 0);
    // Parity matters: even and odd differ by exactly 1/2 in the main term.
    RegionArgs pe, po;
    pe.q = po.q = 5;
    pe.t = po.t = real50(1000);
    pe.chi = CharClass::parity_even;
    po.chi = CharClass::parity_odd;
    CHECK(close(region_total(ZeroRegion::count_box_primitive, po) -
                    region_total(ZeroRegion::count_box_primitive, pe),
                real50("0.5"), real50("1e-40")));

    // Principal box at t = 100: frozen main and radius; N(100) = 58 when
    // both signs are counted.
    RegionArgs t100;
    t100.t = real50(100);
    BoundBreakdown pb = gbx::zero_region_bound(ZeroRegion::count_box_principal, t100);
    CHECK(close(pb.components[0].second,
                real50("58.004687174650695976176316629932052415967"), kTight));
    CHECK(close(pb.components[1].second,
                real50("5.56507359121703221796075260092229504371113"), kTight));
    for (const real50& t : logspace(real50(3), real50("1e10"), 21)) {
        RegionArgs a;
        a.t = t;
        real50 expect = m_eval("region.count_box_principal_main", region_env(a)) +
                        m_eval("region.count_box_principal_radius", region_env(a));
        CHECK(close(region_total(ZeroRegion::count_box_principal, a), expect, kDual));
    }
    RegionArgs below_e;
    below_e.t = real50(2);
    CHECK_THROWS_AS(region_total(ZeroRegion::count_box_principal, below_e),
                    gbx::domain_error);

    // Corollary forms; the zeta variant needs t >= 2 pi e + 1.
    for (const real50& t : logspace(real50(16), real50("1e9"), 9)) {
        RegionArgs a;
        a.q = 400001;
        a.t = t;
        CHECK(close(region_total(ZeroRegion::count_box_coroll_q, a),
                    m_eval("region.count_box_coroll_q", region_env(a)), kDual));
        RegionArgs z;
        z.t = t + 3;
        CHECK(close(region_total(ZeroRegion::count_box_coroll_zeta, z),
                    m_eval("region.count_box_coroll_zeta", region_env(z)), kDual));
    }
}

TEST_CASE("unit-interval counts match the manifest") {
    RegionArgs frozen;
    frozen.t = real50(1000);
    CHECK(close(region_total(ZeroRegion::interval_count_principal, frozen),
                real50("14.3047413430061139314424228880232221384166"), kTight));
    for (const real50& t : logspace(real50(9), real50("1e9"), 17)) {
        RegionArgs a;
        a.q = 101;
        a.t = t;
        CHECK(close(region_total(ZeroRegion::interval_count_primitive, a),
                    m_eval("region.interval_primitive", region_env(a)), kDual));
        RegionArgs z;
        z.t = t;
        CHECK(close(region_total(ZeroRegion::interval_count_principal, z),
                    m_eval("region.interval_principal", region_env(z)), kDual));
        RegionArgs cz;
        cz.t = t + 10; // stay above 2 pi e + 1
        CHECK(close(region_total(ZeroRegion::interval_count_coroll_zeta, cz),
                    m_eval("region.interval_coroll_zeta", region_env(cz)), kDual));
        RegionArgs cq;
        cq.q = 400001;
        cq.t = t + 10;
        CHECK(close(region_total(ZeroRegion::interval_count_coroll_q, cq),
                    m_eval("region.interval_coroll_q", region_env(cq)), kDual));
    }
    RegionArgs low;
    low.q = 101;
    low.t = real50(5);
    CHECK_THROWS_AS(region_total(ZeroRegion::interval_count_primitive, low),
                    gbx::domain_error);
}

TEST_CASE("sums of reciprocal zeros match the manifest across conductor ranges") {
    RegionArgs frozen;
    frozen.t = real50(10000);
    CHECK(close(region_total(ZeroRegion::sum_inv_rho_principal, frozen),
                real50("4.32529143536654003481146791976218445342952"), kTight));
    for (const real50& t : logspace(real50(35), real50("1e9"), 13)) {
        RegionArgs a;
        a.t = t;
        CHECK(close(region_total(ZeroRegion::sum_inv_rho_principal, a),
                    m_eval("region.sum_inv_rho_principal", region_env(a)), kDual));
    }
    // Small-conductor form: base plus the two tail cases, split at q = 12.
    for (std::uint64_t q : {3ull, 11ull, 12ull, 1000ull, 400000ull}) {
        RegionArgs a;
        a.q = q;
        a.t = real50(50000);
        real50 tail = q <= 11 ? m_eval("region.sum_inv_rho_small_q_tail_low", region_env(a))
                              : m_eval("region.sum_inv_rho_small_q_tail_high", region_env(a));
        CHECK(close(region_total(ZeroRegion::sum_inv_rho_small_q, a),
                    m_eval("region.sum_inv_rho_small_q_base", region_env(a)) + tail,
                    kDual));
    }
    // Large-conductor form, with and without the exceptional zero.
    for (std::uint64_t q : {400001ull, 10000019ull}) {
        RegionArgs a;
        a.q = q;
        a.t = real50("1e7");
        real50 base = m_eval("region.sum_inv_rho_large_q", region_env(a));
        CHECK(close(region_total(ZeroRegion::sum_inv_rho_large_q, a), base, kDual));
        a.chi = CharClass::real_odd;
        CHECK(close(region_total(ZeroRegion::sum_inv_rho_large_q, a),
                    base + m_eval("region.siegel_add_odd", region_env(a)), kDual));
        a.chi = CharClass::real_even;
        CHECK(close(region_total(ZeroRegion::sum_inv_rho_large_q, a),
                    base + m_eval("region.siegel_add_even", region_env(a)), kDual));
    }
    // Conductor-free variant needs t >= q.
    RegionArgs nc;
    nc.q = 400001;
    nc.t = real50("1e7");
    CHECK(close(region_total(ZeroRegion::sum_inv_rho_no_conductor, nc),
                m_eval("region.sum_inv_rho_no_chi", region_env(nc)), kDual));
    nc.t = real50(1000);
    CHECK_THROWS_AS(region_total(ZeroRegion::sum_inv_rho_no_conductor, nc),
                    gbx::domain_error);
}

TEST_CASE("squared-reciprocal sums and their tails") {
    RegionArgs total;
    CHECK(region_total(ZeroRegion::sum_inv_gamma_sq_total, total) == real50("0.023105"));
    for (const real50& t : logspace(real50(18), real50("1e12"), 25)) {
        RegionArgs a;
        a.t = t;
        CHECK(close(region_total(ZeroRegion::sum_inv_gamma_sq_tail, a),
                    m_eval("region.rho2_tail", region_env(a)), kDual));
        RegionArgs b;
        b.q = 101;
        b.t = t;
        CHECK(close(region_total(ZeroRegion::sum_inv_rho_sq_tail, b),
                    m_eval("region.rho_sq_tail", region_env(b)), kDual));
    }
    // rho-rho1 sums: three conductor ranges with their boundaries.
    auto rr = [](std::uint64_t q, CharClass chi = CharClass::any) {
        RegionArgs a;
        a.q = q;
        a.chi = chi;
        return region_total(ZeroRegion::sum_inv_rho_rho1, a);
    };
    RegionArgs e9, e10;
    e9.q = 9;
    e10.q = 10;
    CHECK(close(rr(9), m_eval("region.rho_rho1_small", region_env(e9)), kDual));
    CHECK(close(rr(9), real50("5.07131877213858012821469848361747595990971"), kTight));
    CHECK(close(rr(10), m_eval("region.rho_rho1_mid", region_env(e10)), kDual));
    CHECK(close(rr(10), real50("7.20668496378135498336407846342775045568283"), kTight));
    RegionArgs big;
    big.q = 500000;
    CHECK(close(rr(500000), m_eval("region.rho_rho1_large", region_env(big)), kDual));
    CHECK(close(rr(500000, CharClass::real_even),
                m_eval("region.rho_rho1_large", region_env(big)) +
                    m_eval("region.siegel_add_even", region_env(big)),
                kDual));
    // General tail variant.
    for (const real50& t : logspace(real50(16), real50("1e8"), 9)) {
        RegionArgs a;
        a.q = 400001;
        a.t = t;
        CHECK(close(region_total(ZeroRegion::sum_inv_rho_rho_general, a),
                    m_eval("region.sum_rho_rho_gen", region_env(a)), kDual));
    }
}

TEST_CASE("explicit-formula error terms match the manifest") {
    RegionArgs frozen;
    frozen.q = 1;
    frozen.t = real50(400000);
    frozen.u = real50(1000);
    CHECK(close(region_total(ZeroRegion::psi_error_principal, frozen),
                real50("291.590308284707091216164522510771123641983"), kTight));
    for (std::uint64_t q : {1ull, 7ull, 1000ull}) {
        for (double u : {2.0, 1e3, 1e5, 1.2e6}) {
            RegionArgs a;
            a.q = q;
            a.t = real50(400000);
            a.u = real50(u);
            CHECK(close(region_total(ZeroRegion::psi_error_principal, a),
                        m_eval("region.psi_principal", region_env(a)), kDual));
        }
    }
    for (std::uint64_t q : {400001ull, 2000003ull}) {
        RegionArgs a;
        a.q = q;
        a.t = real50("1e7");
        a.u = real50("1e6");
        CHECK(close(region_total(ZeroRegion::psi_error_primitive, a),
                    m_eval("region.psi_primitive", region_env(a)), kDual));
        CHECK(close(region_total(ZeroRegion::psi_error_imprimitive, a),
                    m_eval("region.psi_imprimitive", region_env(a)), kDual));
        // The induced-character form can only be larger.
        CHECK(region_total(ZeroRegion::psi_error_imprimitive, a) >
              region_total(ZeroRegion::psi_error_primitive, a));
    }
    RegionArgs bad = frozen;
    bad.u = real50("1.3e6"); // beyond 3T
    CHECK_THROWS_AS(region_total(ZeroRegion::psi_error_principal, bad),
                    gbx::domain_error);
    bad.u = real50(1);
    CHECK_THROWS_AS(region_total(ZeroRegion::psi_error_principal, bad),
                    gbx::domain_error);
}

TEST_CASE("constant-term bound B(chi) covers all four cases") {
    RegionArgs small;
    small.q = 1009;
    CHECK(close(region_total(ZeroRegion::b_chi_bound, small),
                m_eval("region.bchi_small", region_env(small)), kDual));
    RegionArgs big;
    big.q = 500000;
    big.chi = CharClass::non_real;
    CHECK(close(region_total(ZeroRegion::b_chi_bound, big),
                m_eval("region.bchi_nonreal", region_env(big)), kDual));
    big.chi = CharClass::real_odd;
    CHECK(close(region_total(ZeroRegion::b_chi_bound, big),
                m_eval("region.bchi_real_odd", region_env(big)), kDual));
    big.chi = CharClass::real_even;
    CHECK(close(region_total(ZeroRegion::b_chi_bound, big),
                m_eval("region.bchi_real_even", region_env(big)), kDual));
    big.chi = CharClass::any;
    CHECK_THROWS_AS(region_total(ZeroRegion::b_chi_bound, big), gbx::domain_error);
}

TEST_CASE("twin-prime product bound dominates the true product") {
    RegionArgs frozen;
    frozen.x = real50(286);
    CHECK(close(region_total(ZeroRegion::twin_product, frozen),
                real50("39.6406848438658799166492240383746195164016"), kTight));
    // True products recomputed externally over the primes.
    CHECK(region_total(ZeroRegion::twin_product, frozen) >
          real50("39.5786655187488399671351516214843746155759"));
    RegionArgs k;
    k.x = real50(1000);
    CHECK(close(region_total(ZeroRegion::twin_product, k),
                real50("58.5302991184811706887556808291270515108118"), kTight));
    CHECK(region_total(ZeroRegion::twin_product, k) >
          real50("57.7612962632069079655516200750158968287287"));
    for (const real50& x : logspace(real50(286), real50("1e9"), 17)) {
        RegionArgs a;
        a.x = x;
        CHECK(close(region_total(ZeroRegion::twin_product, a),
                    m_eval("region.twin_product", region_env(a)), kDual));
    }
    RegionArgs low;
    low.x = real50(285);
    CHECK_THROWS_AS(region_total(ZeroRegion::twin_product, low), gbx::domain_error);
}

TEST_CASE("conductor ratio bound dominates q over phi-star") {
    for (std::uint64_t q : {3ull, 4ull, 9ull, 105ull, 9240ull, 400001ull}) {
        RegionArgs a;
        a.q = q;
        real50 bound = region_total(ZeroRegion::phi_ratio, a);
        CHECK(close(bound, m_eval("region.phi_ratio", region_env(a)), kDual));
        CHECK(bound >= real50(q) / real50(gbx::phi_star(q)));
        CHECK(bound >= real50(q) / real50(gbx::phi1_star(q)));
    }
    RegionArgs bad;
    bad.q = 6;
    CHECK_THROWS_AS(region_total(ZeroRegion::phi_ratio, bad), gbx::domain_error);
}

TEST_CASE("divisor bound dominates log d(n) for highly composite n") {
    RegionArgs frozen;
    frozen.x = real50("963761198400");
    CHECK(close(region_total(ZeroRegion::divisor_log, frozen),
                real50("8.866365149466201505058339453358831781526"), kTight));
    for (std::uint64_t n : {12ull, 360ull, 720720ull, 963761198400ull}) {
        RegionArgs a;
        a.x = real50(n);
        real50 bound = region_total(ZeroRegion::divisor_log, a);
        CHECK(close(bound, m_eval("region.divisor_log", region_env(a)), kDual));
        CHECK(log(real50(gbx::divisor_count(n))) <= bound);
    }
    RegionArgs bad;
    bad.x = real50(2);
    CHECK_THROWS_AS(region_total(ZeroRegion::divisor_log, bad), gbx::domain_error);
}

TEST_CASE("region breakdowns are additive and the name map round-trips") {
    RegionArgs a;
    a.q = 400001;
    a.t = real50("1e7");
    a.u = real50("1e6");
    a.chi = CharClass::real_odd;
    for (ZeroRegion which : {ZeroRegion::sum_inv_rho_large_q, ZeroRegion::psi_error_primitive,
                             ZeroRegion::count_box_coroll_q}) {
        check_sum_consistency(gbx::zero_region_bound(which, a));
    }
    for (int i = 0; i <= static_cast<int>(ZeroRegion::divisor_log); ++i) {
        auto which = static_cast<ZeroRegion>(i);
        CHECK(gbx::zero_region_from_name(gbx::to_string(which)) == which);
    }
    CHECK_THROWS_AS(gbx::zero_region_from_name("no-such-bound"), gbx::domain_error);
    for (CharClass c : {CharClass::any, CharClass::principal, CharClass::primitive,
                        CharClass::non_real, CharClass::real_odd, CharClass::real_even,
                        CharClass::parity_even, CharClass::parity_odd}) {
        CHECK(gbx::char_class_from_name(gbx::to_string(c)) == c);
    }
    CHECK_THROWS_AS(gbx::char_class_from_name("imaginary"), gbx::domain_error);
}
