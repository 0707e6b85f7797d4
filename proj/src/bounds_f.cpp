#include "gbx/bounds.hpp"

#include "gbx/arith.hpp"

namespace gbx {

namespace {

// Shared shorthands; every block needs x0 > e so the loglog factors exist.
struct Pivot {
    real50 x0, lg, llg, sq; // x0, log x0, loglog x0, sqrt x0
};

Pivot pivot_of(const AssumptionConstants& k) {
    if (!(k.x0 > r50::e())) throw domain_error("f_function: x0 must exceed e");
    Pivot p;
    p.x0 = k.x0;
    p.lg = log(k.x0);
    p.llg = log(p.lg);
    p.sq = sqrt(k.x0);
    return p;
}

real50 phi_denominator(const AssumptionConstants& k) {
    if (k.phi_value != 0) return k.phi_value;
    return real50(euler_phi(k.q));
}

real50 f1_of(const AssumptionConstants& k) {
    const real50 pi = r50::pi();
    return pi * pi * k.d5 * k.d5 * (2 * k.x0 + 1) / (2 * r50::log2());
}

real50 f2_of(const AssumptionConstants& k) {
    const Pivot p = pivot_of(k);
    const real50 width = 4 + 1 / p.x0;
    real50 s = real50("1.2") * width * (1 + log(real50("1.2")) / p.llg) * k.d1;
    s += real50("1.2") * k.d2 / p.llg * width;
    s += k.d3 / p.llg * (2 + log(2 * (2 + 1 / p.x0)) / p.lg);
    s += 2 * k.d4 / p.llg;
    return r50::pi() * s * s;
}

real50 f3_of(const AssumptionConstants& k, const real50& t_slot) {
    if (!(t_slot > 0)) throw domain_error("f_function: the height slot must be positive");
    const Pivot p = pivot_of(k);
    const real50 pi = r50::pi();
    real50 shell = pow(2 + 1 / p.x0, 3) - 1;
    real50 inner = (4 + real50("11.9") / p.lg + real50("6.3") / (p.lg * p.lg) +
                    (p.lg + r50::log2()) / (p.x0 * p.lg * p.lg)) *
                   k.d9;
    inner += 2 / (p.lg * p.lg) * k.d10 * t_slot * log(real50(k.q) * t_slot / (2 * pi * r50::e()));
    return sqrt(real50(2)) * shell * (2 * k.d7 + k.d10) * inner;
}

real50 f4_of(const AssumptionConstants& k, const real50& t_slot) {
    const Pivot p = pivot_of(k);
    const real50 pi = r50::pi();
    const real50 dsum = k.d2 + k.d3 + k.d4 + k.c_q4 + 1;
    real50 left = k.d1 * p.llg / (p.sq * p.lg) + dsum / (p.sq * p.lg) + 2 * k.d5 +
                  (k.d6 + 1) / p.lg;
    real50 right = k.d1 * p.llg / p.sq + dsum / p.sq + k.d6 + 1;
    return (2 * p.x0 + 1) * left * (pi * pi / 2) * right +
           6 * pi * p.llg / p.lg * f2_of(k) + 3 * pi * pi * f3_of(k, t_slot);
}

real50 f5_of(const AssumptionConstants& k, const real50& t_slot) {
    const Pivot p = pivot_of(k);
    const real50 pi = r50::pi();
    real50 s = 2 * pi * pi *
               (p.llg / (p.lg * p.lg * sqrt(pi)) * sqrt(3 * f2_of(k)) +
                sqrt(3 * f3_of(k, t_slot) / (p.lg * p.lg * p.lg)));
    s += pi * pi / (2 * p.lg * p.lg * p.lg);
    s += 2 * (2 * p.x0 + 1) * pi * pi / (p.sq * p.lg) *
         ((k.d1 * p.llg + k.d2 + k.d3 + k.d4 + k.c_q4 + 1) / (p.sq * p.lg) + k.d5 +
          k.d6 / p.lg + 1 / (p.sq * p.lg * p.lg));
    return s;
}

real50 f6_of(const AssumptionConstants& k) {
    const Pivot p = pivot_of(k);
    return k.d1 + k.d2 / (2 * p.llg) + (k.d3 + k.d4 + k.c_q4 + 1) / p.llg +
           4 * k.d8 / (p.x0 * p.lg * p.llg) + k.d11 / (p.lg * p.llg);
}

real50 f7_of(const AssumptionConstants& k, const real50& t_slot) {
    const Pivot p = pivot_of(k);
    const real50 phi = phi_denominator(k);
    real50 s = real50("0.35") * p.x0 * f1_of(k);
    s += (real50("1.443") + real50("0.5") * p.x0 / p.lg) *
         (f4_of(k, t_slot) + 2 * f5_of(k, t_slot) / phi);
    s += p.llg / (phi * p.lg * p.lg * p.lg) *
         ((2 * k.c_q3 + real50("1.5")) / (phi * p.lg * p.llg) + 2 * f6_of(k));
    return s;
}

real50 f8_of(const AssumptionConstants& k, const real50& t_slot) {
    const Pivot p = pivot_of(k);
    const real50 phi = phi_denominator(k);
    const real50 lg4 = p.lg * p.lg * p.lg * p.lg;
    real50 s = (2 * p.llg * f6_of(k) / phi + k.d11 * log(real50(k.q)) / r50::log2() +
                real50("17.314") + real50("1.624") / p.lg) /
               lg4;
    s += (4 * k.c_q3 + 3) / (2 * lg4 * p.lg * phi);
    s += 1 / p.lg *
         (real50("0.35") * p.x0 * f1_of(k) +
          (real50("1.443") + real50("0.5") * p.x0 / p.lg) *
              (f4_of(k, t_slot) + f5_of(k, t_slot) / phi));
    s += f1_of(k);
    return s;
}

real50 f4_zeta_of(const AssumptionConstants& k, const real50& t_slot) {
    const Pivot p = pivot_of(k);
    const real50 pi = r50::pi();
    const real50 l2pi = log(2 * pi);
    const real50 dsum = k.d2 + k.d3 + k.d4;
    real50 left = k.d1 * p.llg / (p.sq * p.lg) + dsum / (p.sq * p.lg) + 2 * k.d5 +
                  k.d6 / p.lg + l2pi / (p.sq * p.lg * p.lg);
    real50 right = k.d1 * p.llg / p.sq + dsum / p.sq + k.d6 + l2pi / (p.sq * p.lg);
    return (2 * p.x0 + 1) * left * (pi * pi / 2) * right +
           6 * pi * p.llg / p.lg * f2_of(k) + 3 * pi * pi * f3_of(k, t_slot);
}

real50 f5_zeta_of(const AssumptionConstants& k, const real50& t_slot) {
    const Pivot p = pivot_of(k);
    const real50 pi = r50::pi();
    real50 s = 2 * pi * pi *
               (p.llg / (p.lg * p.lg * sqrt(pi)) * sqrt(3 * f2_of(k)) +
                sqrt(3 * f3_of(k, t_slot) / (p.lg * p.lg * p.lg)));
    s += pi * pi / (2 * p.lg * p.lg * p.lg);
    s += 2 * (2 * p.x0 + 1) * pi * pi / (p.sq * p.lg) *
         (k.d5 + k.d6 / p.lg + (k.d1 * p.llg + k.d2 + k.d3 + k.d4) / (p.sq * p.lg) +
          (log(2 * pi) + 1) / (p.sq * p.lg * p.lg));
    return s;
}

real50 f6_zeta_of(const AssumptionConstants& k) {
    const Pivot p = pivot_of(k);
    return 2 * k.d1 + (k.d2 + 2 * (k.d3 + k.d4)) / p.llg +
           8 * k.d8 / (p.x0 * p.lg * p.llg) +
           (2 * k.d11 + 2 * log(2 * r50::pi()) + real50("1.5")) / (p.lg * p.llg);
}

real50 f7_zeta_of(const AssumptionConstants& k, const real50& t_slot) {
    const Pivot p = pivot_of(k);
    real50 s = real50("0.35") * p.x0 * f1_of(k);
    // 1.433, not the 1.443 of the progression case: this block bounds the
    // principal-character moment, where the sharper prefactor holds.
    s += (real50("1.433") + real50("0.5") * p.x0 / p.lg) *
         (f4_zeta_of(k, t_slot) + f5_zeta_of(k, t_slot));
    s += p.llg / (p.lg * p.lg * p.lg) *
         (real50("1.5") / (p.lg * p.llg) + 2 * f6_zeta_of(k));
    return s;
}

} // namespace

real50 f_function(FFunction which, const AssumptionConstants& k, const real50& t_slot,
                  const real50& /*f8_c: accepted, never enters the formula*/) {
    switch (which) {
        case FFunction::f1: return f1_of(k);
        case FFunction::f2: return f2_of(k);
        case FFunction::f3: return f3_of(k, t_slot);
        case FFunction::f4: return f4_of(k, t_slot);
        case FFunction::f5: return f5_of(k, t_slot);
        case FFunction::f6: return f6_of(k);
        case FFunction::f7: return f7_of(k, t_slot);
        case FFunction::f8: return f8_of(k, t_slot);
        case FFunction::f4_zeta: return f4_zeta_of(k, t_slot);
        case FFunction::f5_zeta: return f5_zeta_of(k, t_slot);
        case FFunction::f6_zeta: return f6_zeta_of(k);
        case FFunction::f7_zeta: return f7_zeta_of(k, t_slot);
    }
    throw domain_error("f_function: unknown selector");
}

FFunction f_function_from_name(const std::string& name) {
    if (name == "f1") return FFunction::f1;
    if (name == "f2") return FFunction::f2;
    if (name == "f3") return FFunction::f3;
    if (name == "f4") return FFunction::f4;
    if (name == "f5") return FFunction::f5;
    if (name == "f6") return FFunction::f6;
    if (name == "f7") return FFunction::f7;
    if (name == "f8") return FFunction::f8;
    if (name == "f4z") return FFunction::f4_zeta;
    if (name == "f5z") return FFunction::f5_zeta;
    if (name == "f6z") return FFunction::f6_zeta;
    if (name == "f7z") return FFunction::f7_zeta;
    throw domain_error("unknown f-function '" + name + "'");
}

std::string to_string(FFunction which) {
    switch (which) {
        case FFunction::f1: return "f1";
        case FFunction::f2: return "f2";
        case FFunction::f3: return "f3";
        case FFunction::f4: return "f4";
        case FFunction::f5: return "f5";
        case FFunction::f6: return "f6";
        case FFunction::f7: return "f7";
        case FFunction::f8: return "f8";
        case FFunction::f4_zeta: return "f4z";
        case FFunction::f5_zeta: return "f5z";
        case FFunction::f6_zeta: return "f6z";
        case FFunction::f7_zeta: return "f7z";
    }
    return "?";
}

} // namespace gbx
