#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "gbx/errors.hpp"
#include "gbx/real50.hpp"

namespace gbx {

// Which instantiation of the assumption table is in force: the Riemann zeta
// function (principal character, conductor 1) or a Dirichlet L-function of
// conductor q > 4e5.
enum class BoundContext { zeta, general_q };

// The constants c_i, c_{q,i}, d_1..d_11 together with the pivot points
// T0, T1, x0.  A context factory fills every field from the manifest; callers
// may then override individual entries (the f-functions are plain formulas in
// these values).  primitive_variant selects the averaged d8 that divides its
// first term by phi1*(q).
struct AssumptionConstants {
    BoundContext context = BoundContext::zeta;
    std::uint64_t q = 1;
    bool primitive_variant = false;
    real50 c1, c2, c_q3, c_q4;
    real50 t0, t1, x0;
    real50 d1, d2, d3, d4, d5, d6, d7, d8, d9, d10, d11;
    // Denominator used where the formulas divide by a totient: 0 means
    // phi(q) computed exactly; the primitive variant installs phi1*(q); the
    // conductor-uniform theorem path installs a proven lower bound instead.
    real50 phi_value = 0;
};

// Conductor-1 table: c1 = 0, x0 = T1 = 2 pi e + 1.
AssumptionConstants zeta_constants();

// Conductor-q table; q >= 3 required (the entries involve loglog q and the
// table itself is stated for q > 4e5, which is not enforced here so the
// formulas stay explorable).  primitive_variant = true installs the averaged
// d8 with the exact phi1*(q).
AssumptionConstants general_q_constants(std::uint64_t q, bool primitive_variant = false);

// Lambert W on branches 0 and -1, solved by Halley iteration from a seeded
// start until the step is below 1e-40 relative.  Branch 0 needs y >= -1/e,
// branch -1 needs -1/e <= y < 0; both give W(-1/e) = -1; anything else
// throws domain_error.
real50 lambert_w(int branch, const real50& y);

// Zero-free-region width eta_q at height t: 1/(c1 log q + c2 (log
// t)^(2/3) (loglog t)^(1/3)).  Requires t >= e^e.  The _log variants take
// log t directly so heights far beyond floating-point range stay usable.
real50 eta_q(const real50& t, const AssumptionConstants& k);
real50 eta_q_log(const real50& log_t, const AssumptionConstants& k);

// B*(x) = min{b_q, 1 - eta_q(x)}: the effective zero-real-part exponent.
// b_q is 1 unconditionally and 1/2 under GRH; any value in [1/2, 1] is
// accepted.  Requires x >= e^e (log x >= e for the _log variant).
real50 b_star(const real50& x, const AssumptionConstants& k, const real50& b_q = 1);
real50 b_star_log(const real50& log_x, const AssumptionConstants& k, const real50& b_q = 1);

// The coefficient blocks f1..f8 and their conductor-1 variants.  t_slot is
// the height argument carried by f3, f4, f5, f7, f8 (T1 in the table
// statements; some propositions instantiate it at T0 instead).  f1, f2, f6
// ignore t_slot.  f8 additionally accepts c for signature fidelity; the value
// never enters the formula.
enum class FFunction { f1, f2, f3, f4, f5, f6, f7, f8, f4_zeta, f5_zeta, f6_zeta, f7_zeta };

real50 f_function(FFunction which, const AssumptionConstants& k, const real50& t_slot,
                  const real50& f8_c = 0);

FFunction f_function_from_name(const std::string& name);
std::string to_string(FFunction which);

// One evaluated bound: the total, an additive decomposition of it, and an
// echo of the inputs.  total equals the sum of component values exactly
// (modulo rounding); alternatives that do not add (the branches of a min,
// rejected piecewise cases) are reported in notes instead.
struct BoundBreakdown {
    real50 total = 0;
    std::vector<std::pair<std::string, real50>> components;

    real50 packaged = 0;        // headline coefficient when one exists, else 0
    bool has_packaged = false;

    // Inputs echo.
    real50 log_x = 0;
    std::uint64_t q = 0;
    real50 x0 = 0, t0 = 0, t1 = 0, b_q = 1;

    bool hypotheses_met = true;
    std::vector<std::string> notes;
};

// The four headline summatory bounds.  theorem_bound recomputes the packaged
// coefficient from the proposition formulas with the tabulated constants:
// total is the recomputed coefficient and packaged the stated one, so
// total <= packaged is the reproduction check.  log_x = 0 evaluates at the
// theorem's own threshold; q = 0 evaluates at the coefficient-extremal
// conductor 4e5 + 1 (thm3/thm4 only; thm1/thm2 are conductor 1).
// A log_x below the stated threshold clears hypotheses_met but still
// evaluates.
enum class Theorem { thm1, thm2, thm3, thm4 };

BoundBreakdown theorem_bound(Theorem which, const real50& log_x = 0, std::uint64_t q = 0);

Theorem theorem_from_name(const std::string& name);
std::string to_string(Theorem which);

// The proposition-level bounds, evaluated literally as stated: each additive
// term of the right-hand side becomes one component, including the powers of
// x.  Terms beyond floating-point range evaluate to infinity with a note.
//
//   first_moment_zeta      |S(x) - x^2/2|               coefficient * x^(B*+1)
//   first_moment_progression  congruence sum, three additive terms
//   second_moment_zeta     (log x)^5 / (log x)^4 pair, conductor 1
//   second_moment_progression same shape, conductor q
//   average_comparison     |sum G - sum J| style bound with divisor factor
//
// Mode selects the stated form (literal), the small-conductor simplification
// that drops the two auxiliary terms (valid for q <= log x), or the
// primitive-character refinement that replaces phi by phi1* and the
// 2 e^(2 C0) term by 82.366 ((loglog x)^2 / log x)^2.
enum class Proposition {
    first_moment_zeta,
    first_moment_progression,
    second_moment_zeta,
    second_moment_progression,
    average_comparison,
};

enum class PropositionMode { literal, small_conductor, primitive };

struct PropositionArgs {
    real50 log_x = 0;           // required, > 1
    std::uint64_t q = 1;        // conductor (ignored by the zeta forms)
    real50 b_q = 1;             // 1 unconditionally, 1/2 under GRH
    real50 x0 = 0;              // 0 = context default
    PropositionMode mode = PropositionMode::literal;
};

BoundBreakdown proposition_bound(Proposition which, const PropositionArgs& args);

Proposition proposition_from_name(const std::string& name);
std::string to_string(Proposition which);

// Threshold solutions.  The two Lambert-W thresholds solve
// L = 125 D^3 (log L)^4 for the smallest admissible log x; the second-moment
// floors are stated constants; zero_free_x solves 2 loglog x (log x)^2 =
// q^(3/2) log^6 q / 6150^3 for the height where the zero-free region clears
// the conductor term.  residual is the relative back-substitution error of
// the defining equation (0 for the stated constants).
enum class ThresholdKind {
    first_moment_zeta_log_x,        // ~1.7e13
    first_moment_progression_log_x, // ~6.7e13
    second_moment_zeta_log_x,       // 1e6, stated
    second_moment_progression_log_x,// 1e8, stated
    zero_free_x,                    // conductor-dependent height
};

struct ThresholdResult {
    ThresholdKind kind;
    real50 value;        // log x for the first four kinds, x for zero_free_x
    int w_branch = 0;    // Lambert branch used; 0 when no W enters
    real50 w_argument = 0;
    real50 residual = 0;
};

ThresholdResult threshold(ThresholdKind kind, std::uint64_t q = 0);

ThresholdKind threshold_from_name(const std::string& name);
std::string to_string(ThresholdKind which);

// Character classification for the piecewise zero bounds.  parity_even /
// parity_odd state only the value of chi(-1); the real_* classes state
// realness and parity together.
enum class CharClass {
    any,
    principal,
    primitive,
    non_real,
    real_odd,
    real_even,
    parity_even,
    parity_odd,
};

CharClass char_class_from_name(const std::string& name);
std::string to_string(CharClass which);

// The catalogue of zero-distribution bounds.  Each evaluator checks its
// stated hypotheses (throwing domain_error when violated) and returns an
// additive BoundBreakdown; piecewise selections record the chosen case in
// notes.
enum class ZeroRegion {
    zeta_zero_free,           // denominator at height t, t >= 3
    l_zero_free,              // conductor-q denominator, t >= 10, q >= 3
    l_zero_free_uniform,      // 9.646 log max{10, q, qt}
    siegel_bound,             // real-zero bound, parity class, q > 4e5
    grh_verified_height,      // primitive parity classes, principal, or any
    log_derivative_gap,       // seven-case piecewise, q > 4e5
    log_derivative_gap_max,   // combined corollary
    count_box_conductor,      // min of two radii, conductor > 1
    count_box_primitive,      // main +- radius, parity class required
    count_box_principal,      // main +- radius for zeta
    count_box_coroll_q,       // 0.364 t log(qt/2 pi e)
    count_box_coroll_zeta,    // 6.879 t log(t/2 pi e)
    interval_count_primitive,
    interval_count_principal,
    interval_count_coroll_q,
    interval_count_coroll_zeta,
    sum_inv_rho_principal,    // (1/4 pi) log^2(t/2 pi)
    sum_inv_rho_small_q,      // 3 <= q <= 4e5, with parity additions
    sum_inv_rho_large_q,      // q > 4e5, with parity additions
    sum_inv_rho_no_conductor, // t >= q > 4e5
    sum_inv_gamma_sq_tail,    // log t / (2 pi t)
    sum_inv_gamma_sq_total,   // 0.023105
    sum_inv_rho_sq_tail,      // primitive tail above height t
    sum_inv_rho_rho1,         // piecewise in q, with parity additions
    sum_inv_rho_rho_general,  // 0.430 log(qt/2 pi)/t
    psi_error_principal,      // explicit-formula error, principal
    psi_error_primitive,      // q > 4e5 primitive
    psi_error_imprimitive,    // induced non-principal
    b_chi_bound,              // constant-term bound, piecewise
    twin_product,             // prod p/(p-2) bound, x >= 286
    phi_ratio,                // q/phi*(q) bound, q >= 3, q != 2 mod 4
    divisor_log,              // log d(n) bound, n >= 3
};

struct RegionArgs {
    std::uint64_t q = 1;
    real50 t = 0;               // height / T / |Im s|
    real50 u = 0;               // explicit-formula evaluation point
    real50 x = 0;               // product bound argument or divisor n
    CharClass chi = CharClass::any;
};

BoundBreakdown zero_region_bound(ZeroRegion which, const RegionArgs& args);

ZeroRegion zero_region_from_name(const std::string& name);
std::string to_string(ZeroRegion which);

} // namespace gbx
