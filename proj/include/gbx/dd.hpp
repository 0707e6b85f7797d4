#pragma once

// Minimal double-double helpers. Only what the trig argument reduction for
// zero sums needs: error-free products/sums and a mod-2pi reduction of
// gamma * log(u) carried out in roughly 32 digits before the final cos/sin.

#include <cmath>

namespace gbx {

struct dd {
    double hi = 0.0;
    double lo = 0.0;
};

inline dd two_sum(double a, double b) {
    double s = a + b;
    double bb = s - a;
    double err = (a - (s - bb)) + (b - bb);
    return {s, err};
}

inline dd two_prod(double a, double b) {
    double p = a * b;
    double err = std::fma(a, b, -p);
    return {p, err};
}

// Splits a value known to higher precision into hi + lo doubles.
// Callers produce these from 50-digit computations (see zeros.cpp).
inline dd dd_make(double hi, double lo) { return {hi, lo}; }

// 2*pi to double-double precision: hi is 2*pi rounded to double, lo the remainder.
inline dd dd_two_pi() { return {6.283185307179586476925286766559005768, 2.4492935982947063554771314663125649589e-16}; }

// Reduces gamma * logu (logu given as double-double) modulo 2*pi into
// (-pi, pi]. gamma up to ~3e12 and logu up to ~60 keep every intermediate
// below the precision cliff: the product is formed with an error-free
// multiply, the nearest multiple of 2*pi is removed with its own error-free
// multiply, and the residual is accumulated in double-double.
inline double dd_reduce_two_pi(double gamma, dd logu) {
    const dd tp = dd_two_pi();
    dd p = two_prod(gamma, logu.hi);
    double e = p.lo + gamma * logu.lo;
    double k = std::nearbyint(p.hi / tp.hi);
    dd q = two_prod(k, tp.hi);
    double r = (p.hi - q.hi) - q.lo;
    r += e;
    r -= k * tp.lo;
    // One more wrap in case p.hi/2pi rounded to a neighbouring integer.
    if (r > tp.hi * 0.5) r -= tp.hi;
    if (r < -tp.hi * 0.5) r += tp.hi;
    return r;
}

} // namespace gbx
