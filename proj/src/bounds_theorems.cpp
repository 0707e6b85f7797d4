#include "gbx/bounds.hpp"

#include <algorithm>

#include "gbx/arith.hpp"
#include "gbx/manifest.hpp"

namespace gbx {

namespace {

// exp() with the exponent range of real50 respected: arguments beyond it
// collapse to 0 or infinity and leave a note instead of tripping the backend.
real50 guarded_exp(const real50& a, std::vector<std::string>* notes, const std::string& label) {
    static const real50 cap("1.4e9"); // ~ln of the largest finite real50
    if (a > cap) {
        if (notes) notes->push_back(label + " exceeds the floating-point range; reported as inf");
        return std::numeric_limits<real50>::infinity();
    }
    if (a < -cap) return 0;
    return exp(a);
}

// Upper bound for q/phi1*(q), uniform in the conductor.
real50 phi1_ratio_bound(std::uint64_t q) {
    return Manifest::embedded().eval("region.phi_ratio",
                                     {{"C0", r50::euler_c0()},
                                      {"C2", r50::twin_prime_c2()},
                                      {"q", real50(q)}});
}

// Smallest admissible log x: the solution of L = 125 D^3 (log L)^4, reached
// through the -1 branch of W.
real50 log_x_threshold(const real50& d, int* branch, real50* argument) {
    real50 y = -1 / (4 * pow(real50(5), real50(3) / 4) * pow(d, real50(3) / 4));
    if (branch) *branch = -1;
    if (argument) *argument = y;
    return exp(-4 * lambert_w(-1, y));
}

real50 d_effective(const AssumptionConstants& k) {
    const real50 lg = log(k.x0);
    return real50("3.5") * k.c1 * pow(log(lg) / lg, real50(2) / 3) + k.c2;
}

void require_log_x(const real50& log_x) {
    if (!(log_x > 1)) throw domain_error("bounds: log x must exceed 1");
}

} // namespace

real50 eta_q_log(const real50& log_t, const AssumptionConstants& k) {
    if (!(log_t >= r50::e())) throw domain_error("eta_q: t must be >= e^e");
    real50 denom = k.c1 * log(real50(k.q)) +
                   k.c2 * pow(log_t, real50(2) / 3) * pow(log(log_t), real50(1) / 3);
    return 1 / denom;
}

real50 eta_q(const real50& t, const AssumptionConstants& k) {
    if (!(t > 1)) throw domain_error("eta_q: t must be >= e^e");
    return eta_q_log(log(t), k);
}

real50 b_star_log(const real50& log_x, const AssumptionConstants& k, const real50& b_q) {
    if (!(b_q >= real50(1) / 2 && b_q <= 1))
        throw domain_error("b_star: b_q must lie in [1/2, 1]");
    real50 zf = 1 - eta_q_log(log_x, k);
    return b_q < zf ? b_q : zf;
}

real50 b_star(const real50& x, const AssumptionConstants& k, const real50& b_q) {
    if (!(x > 1)) throw domain_error("b_star: x must be >= e^e");
    return b_star_log(log(x), k, b_q);
}

ThresholdResult threshold(ThresholdKind kind, std::uint64_t q) {
    const Manifest& m = Manifest::embedded();
    ThresholdResult r;
    r.kind = kind;
    switch (kind) {
        case ThresholdKind::first_moment_zeta_log_x: {
            real50 d = m.value("zeta.c2");
            r.value = log_x_threshold(d, &r.w_branch, &r.w_argument);
            real50 back = m.eval("threshold.backsub_log_x", {{"D", d}, {"L", r.value}});
            r.residual = abs(r.value - back) / r.value;
            return r;
        }
        case ThresholdKind::first_moment_progression_log_x: {
            real50 d = m.eval("threshold.D_general", {{"c1", m.value("general.c1")},
                                                      {"c2", m.value("general.c2")},
                                                      {"x0", m.eval("general.x0", {})}});
            r.value = log_x_threshold(d, &r.w_branch, &r.w_argument);
            real50 back = m.eval("threshold.backsub_log_x", {{"D", d}, {"L", r.value}});
            r.residual = abs(r.value - back) / r.value;
            return r;
        }
        case ThresholdKind::second_moment_zeta_log_x:
            r.value = m.value("threshold.thm2_log_x");
            return r;
        case ThresholdKind::second_moment_progression_log_x:
            r.value = m.value("threshold.thm4_log_x");
            return r;
        case ThresholdKind::zero_free_x: {
            if (q < 3) throw domain_error("threshold: zero-free-x needs q >= 3");
            real50 arg = m.eval("threshold.zero_free_arg", {{"q", real50(q)}});
            real50 w = lambert_w(0, arg);
            r.w_branch = 0;
            r.w_argument = arg;
            // x = exp(exp(w/2)); then 2 loglog x (log x)^2 = w e^w by design.
            real50 log_x = exp(w / 2);
            r.value = guarded_exp(log_x, nullptr, "x");
            r.residual = abs(w * exp(w) - arg) / arg;
            return r;
        }
    }
    throw domain_error("threshold: unknown kind");
}

BoundBreakdown theorem_bound(Theorem which, const real50& log_x, std::uint64_t q) {
    const Manifest& m = Manifest::embedded();
    BoundBreakdown out;
    out.has_packaged = true;

    if (which == Theorem::thm1 || which == Theorem::thm2) {
        AssumptionConstants k = zeta_constants();
        const bool first = which == Theorem::thm1;
        real50 thr = first ? threshold(ThresholdKind::first_moment_zeta_log_x).value
                           : threshold(ThresholdKind::second_moment_zeta_log_x).value;
        real50 lx = log_x == 0 ? thr : log_x;
        require_log_x(lx);
        out.packaged = m.value(first ? "packaged.thm1" : "packaged.thm2");
        out.log_x = lx;
        out.q = 1;
        out.x0 = k.x0;
        out.t0 = k.t0;
        out.t1 = k.t1;
        out.hypotheses_met = lx >= thr;
        if (!out.hypotheses_met)
            out.notes.push_back("log x is below the stated threshold; coefficient shown anyway");
        real50 f7z = f_function(FFunction::f7_zeta, k, k.t1);
        if (first) {
            out.components.emplace_back("f1", f_function(FFunction::f1, k, k.t1));
            out.components.emplace_back("2*d8", 2 * k.d8);
            out.components.emplace_back("f7z/log_x", f7z / lx);
            out.notes.push_back("bounds |S(x) - x^2/2| / x^(B*+1)");
        } else {
            out.components.emplace_back("f1", f_function(FFunction::f1, k, k.t1));
            out.components.emplace_back("f7z/log_x", f7z / lx);
            out.notes.push_back(
                "bounds |S(x) - x^2/2|^2-average coefficient of (log x)^5 x^(2B*); "
                "the f7z part carries (log x)^4 and is folded as f7z/log x");
        }
        out.notes.push_back(
            "f7z height slot instantiated at T1 = 2 pi e + 1; the literal statement carries T0");
    } else {
        std::uint64_t qq = q == 0 ? 400001 : q;
        AssumptionConstants k = general_q_constants(qq, true);
        // Conductor-uniform value: phi1*(q) replaced by its proven lower
        // bound q / R(q) everywhere it divides, including inside d8.
        real50 ratio = phi1_ratio_bound(qq);
        k.phi_value = real50(qq) / ratio;
        k.d8 = m.eval("general.d8_primitive",
                      {{"q", real50(qq)}, {"phi1star", k.phi_value}});
        const bool first = which == Theorem::thm3;
        real50 thr = first ? threshold(ThresholdKind::first_moment_progression_log_x).value
                           : threshold(ThresholdKind::second_moment_progression_log_x).value;
        real50 lx = log_x == 0 ? thr : log_x;
        require_log_x(lx);
        out.packaged = m.value(first ? "packaged.thm3" : "packaged.thm4");
        out.log_x = lx;
        out.q = qq;
        out.x0 = k.x0;
        out.t0 = k.t0;
        out.t1 = k.t1;
        out.hypotheses_met = lx >= thr && qq > 400000 && qq % 4 != 2;
        if (!(qq > 400000 && qq % 4 != 2))
            out.notes.push_back("stated for q > 4e5 with q != 2 mod 4");
        if (lx < thr)
            out.notes.push_back("log x is below the stated threshold; coefficient shown anyway");
        real50 f7 = f_function(FFunction::f7, k, k.t1);
        out.components.emplace_back("f1", f_function(FFunction::f1, k, k.t1));
        if (first) {
            out.components.emplace_back("2*d8/phi1*", 2 * k.d8 / k.phi_value);
            out.components.emplace_back("f7/log_x", f7 / lx);
            // The two auxiliary terms of the progression bound, folded into
            // the coefficient at the evaluation point.
            real50 llx = log(lx);
            real50 bs = b_star_log(lx, k);
            real50 absorbed = real50("25.096") * pow(llx * llx / lx, 2) +
                              real50("2.001") * lx *
                                  guarded_exp(-(1 + bs) / 2 * lx, &out.notes, "diagonal term");
            out.components.emplace_back("absorbed_aux_terms", absorbed);
            out.notes.push_back("bounds |S(x;q,a,b) - x^2/(2 phi1*(q)^2)| / x^(B_q*+1)");
        } else {
            out.components.emplace_back("f7/log_x", f7 / lx);
            out.notes.push_back(
                "coefficient of (log x)^5 x^(2B_q*); the f7 part carries (log x)^4 "
                "and is folded as f7/log x");
        }
        out.notes.push_back("f7 height slot instantiated at T1 = e^e");
        out.notes.push_back(
            "phi1*(q) replaced by the uniform lower bound q / (e^(2 C0)/C2 "
            "((loglog q)^2 + 2.8 + 1.96/(loglog q)^2)); decreasing in q, so q = 4e5+1 "
            "yields the uniform coefficient");
    }

    out.total = 0;
    for (const auto& [label, value] : out.components) out.total += value;
    return out;
}

BoundBreakdown proposition_bound(Proposition which, const PropositionArgs& args) {
    require_log_x(args.log_x);
    const real50 lx = args.log_x;
    BoundBreakdown out;
    out.log_x = lx;
    out.b_q = args.b_q;

    const bool zeta_form = which == Proposition::first_moment_zeta ||
                           which == Proposition::second_moment_zeta;
    AssumptionConstants k =
        zeta_form ? zeta_constants()
                  : general_q_constants(args.q, args.mode == PropositionMode::primitive);
    if (args.x0 != 0) k.x0 = args.x0;
    out.q = k.q;
    out.x0 = k.x0;
    out.t0 = k.t0;
    out.t1 = k.t1;

    const real50 bs = b_star_log(lx, k, args.b_q);
    auto xpow = [&](const real50& exponent) {
        return guarded_exp(exponent * lx, &out.notes, "x power");
    };
    auto hyp = [&](bool ok, const std::string& what) {
        if (!ok) {
            out.hypotheses_met = false;
            out.notes.push_back("hypothesis not met: " + what);
        }
    };

    switch (which) {
        case Proposition::first_moment_zeta: {
            hyp(lx >= log(std::max(real50(83), std::max(k.x0, k.t0))),
                "x >= max{83, x0, T0}");
            hyp(k.x0 >= std::max(exp(r50::e()), k.t1), "x0 >= max{e^e, T1}");
            hyp(lx >= log_x_threshold(k.c2, nullptr, nullptr),
                "log x above the Lambert-W threshold");
            real50 big_x = xpow(bs + 1);
            out.components.emplace_back("f1*x^(B*+1)",
                                        f_function(FFunction::f1, k, k.t0) * big_x);
            out.components.emplace_back("2*d8*x^(B*+1)", 2 * k.d8 * big_x);
            out.components.emplace_back(
                "f7z/log_x*x^(B*+1)", f_function(FFunction::f7_zeta, k, k.t0) / lx * big_x);
            out.notes.push_back("bounds |S(x) - x^2/2|");
            out.notes.push_back(
                "f7z height slot follows the literal statement (T0); the packaged "
                "headline constant instantiates it at T1");
            break;
        }
        case Proposition::first_moment_progression: {
            hyp(k.q >= 83, "q >= 83");
            hyp(lx >= log(std::max(std::max(k.x0, real50("4e15")),
                                   std::max(real50(k.q), k.t0))),
                "x >= max{x0, 4e15, q, T0}");
            hyp(lx >= log_x_threshold(d_effective(k), nullptr, nullptr),
                "log x above the Lambert-W threshold");
            real50 phi = k.phi_value != 0 ? k.phi_value : real50(euler_phi(k.q));
            real50 coeff = f_function(FFunction::f1, k, k.t0) + 2 * k.d8 / phi +
                           f_function(FFunction::f7, k, k.t0) / lx;
            if (coeff < 1) {
                coeff = 1;
                out.notes.push_back("coefficient below 1; clamped to the stated max{., 1}");
            }
            real50 big_x = xpow(bs + 1);
            out.components.emplace_back("max{f1+2*d8/phi+f7/log_x,1}*x^(B*+1)", coeff * big_x);
            const real50 llx = log(lx);
            if (args.mode == PropositionMode::small_conductor) {
                hyp(real50(k.q) <= lx, "q <= log x for the simplified form");
                out.notes.push_back("simplified small-conductor form: auxiliary terms dropped");
            } else if (args.mode == PropositionMode::primitive) {
                out.components.emplace_back(
                    "82.366*x^(B*+1)*((loglog x)^2/log x)^2",
                    real50("82.366") * big_x * pow(llx * llx / lx, 2));
                out.components.emplace_back(
                    "2.1*x^((1+B*)/2)*log_x", real50("2.1") * xpow((1 + bs) / 2) * lx);
                out.notes.push_back(
                    "primitive-character form: phi replaced by phi1*, squared-loglog "
                    "auxiliary term");
            } else {
                out.components.emplace_back(
                    "2*exp(2*C0)*x^(B*+1)*(loglog x/log x)^2",
                    2 * exp(2 * r50::euler_c0()) * big_x * pow(llx / lx, 2));
                out.components.emplace_back(
                    "2.1*x^((1+B*)/2)*log_x", real50("2.1") * xpow((1 + bs) / 2) * lx);
            }
            out.notes.push_back("bounds |S(x;q,a,b) - x^2/(2 phi(q)^2)| (phi1* in primitive form)");
            out.notes.push_back("f7 height slot follows the literal statement (T0)");
            break;
        }
        case Proposition::second_moment_zeta: {
            hyp(lx >= log(std::max(real50(83), std::max(k.x0, k.t0))),
                "x >= max{83, x0, T0} (precondition read as the max of the three)");
            real50 big_x = xpow(2 * bs);
            real50 lx5 = pow(lx, 5);
            out.components.emplace_back("f1*(log x)^5*x^(2B*)",
                                        f_function(FFunction::f1, k, k.t0) * lx5 * big_x);
            out.components.emplace_back(
                "f7z*(log x)^4*x^(2B*)",
                f_function(FFunction::f7_zeta, k, k.t0) * lx5 / lx * big_x);
            out.notes.push_back("bounds the x-average of |S - x^2/2|^2 per unit");
            out.notes.push_back("f7z height slot follows the literal statement (T0)");
            break;
        }
        case Proposition::second_moment_progression: {
            hyp(k.q >= 83, "q >= 83");
            hyp(lx >= log(std::max(real50(k.q), k.t0)), "x >= max{q, T0}");
            hyp(k.x0 >= exp(r50::e()), "x0 >= e^e");
            real50 big_x = xpow(2 * bs);
            real50 lx5 = pow(lx, 5);
            out.components.emplace_back("f1*(log x)^5*x^(2B*)",
                                        f_function(FFunction::f1, k, k.t1) * lx5 * big_x);
            out.components.emplace_back("f7*(log x)^4*x^(2B*)",
                                        f_function(FFunction::f7, k, k.t1) * lx5 / lx * big_x);
            out.notes.push_back("f7 height slot follows the literal statement (T1)");
            break;
        }
        case Proposition::average_comparison: {
            hyp(k.q >= 83, "q >= 83");
            hyp(lx >= log(std::max(std::max(real50(k.q), k.t0),
                                   std::max(k.x0, real50(572)))),
                "x >= max{q, T0, x0, 572}");
            real50 phi = k.phi_value != 0 ? k.phi_value : real50(euler_phi(k.q));
            real50 dq(divisor_count(k.q));
            out.components.emplace_back("2*d8*d(q)/phi*x^(B*+1)",
                                        2 * k.d8 * dq / phi * xpow(bs + 1));
            out.components.emplace_back(
                "f8*(log x)^5*x^(2B*)",
                f_function(FFunction::f8, k, k.t1) * pow(lx, 5) * xpow(2 * bs));
            out.notes.push_back("bounds |sum G(n) - sum J(n)| over n <= x in the progression");
            out.notes.push_back("f8 height slot follows the literal statement (T1)");
            break;
        }
    }

    out.total = 0;
    for (const auto& [label, value] : out.components) out.total += value;
    return out;
}

Theorem theorem_from_name(const std::string& name) {
    if (name == "thm1") return Theorem::thm1;
    if (name == "thm2") return Theorem::thm2;
    if (name == "thm3") return Theorem::thm3;
    if (name == "thm4") return Theorem::thm4;
    throw domain_error("unknown theorem '" + name + "'");
}

std::string to_string(Theorem which) {
    switch (which) {
        case Theorem::thm1: return "thm1";
        case Theorem::thm2: return "thm2";
        case Theorem::thm3: return "thm3";
        case Theorem::thm4: return "thm4";
    }
    return "?";
}

Proposition proposition_from_name(const std::string& name) {
    if (name == "first-moment-zeta") return Proposition::first_moment_zeta;
    if (name == "first-moment-progression") return Proposition::first_moment_progression;
    if (name == "second-moment-zeta") return Proposition::second_moment_zeta;
    if (name == "second-moment-progression") return Proposition::second_moment_progression;
    if (name == "average-comparison") return Proposition::average_comparison;
    throw domain_error("unknown proposition '" + name + "'");
}

std::string to_string(Proposition which) {
    switch (which) {
        case Proposition::first_moment_zeta: return "first-moment-zeta";
        case Proposition::first_moment_progression: return "first-moment-progression";
        case Proposition::second_moment_zeta: return "second-moment-zeta";
        case Proposition::second_moment_progression: return "second-moment-progression";
        case Proposition::average_comparison: return "average-comparison";
    }
    return "?";
}

ThresholdKind threshold_from_name(const std::string& name) {
    if (name == "first-moment-zeta-log-x") return ThresholdKind::first_moment_zeta_log_x;
    if (name == "first-moment-progression-log-x")
        return ThresholdKind::first_moment_progression_log_x;
    if (name == "second-moment-zeta-log-x") return ThresholdKind::second_moment_zeta_log_x;
    if (name == "second-moment-progression-log-x")
        return ThresholdKind::second_moment_progression_log_x;
    if (name == "zero-free-x") return ThresholdKind::zero_free_x;
    throw domain_error("unknown threshold '" + name + "'");
}

std::string to_string(ThresholdKind which) {
    switch (which) {
        case ThresholdKind::first_moment_zeta_log_x: return "first-moment-zeta-log-x";
        case ThresholdKind::first_moment_progression_log_x:
            return "first-moment-progression-log-x";
        case ThresholdKind::second_moment_zeta_log_x: return "second-moment-zeta-log-x";
        case ThresholdKind::second_moment_progression_log_x:
            return "second-moment-progression-log-x";
        case ThresholdKind::zero_free_x: return "zero-free-x";
    }
    return "?";
}

} // namespace gbx
