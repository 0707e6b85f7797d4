#pragma once

#include <cstdint>
#include <vector>

// Hardy Z evaluation and the Gram-block zero scan behind the zero-table
// generator. Long double carries every large trig argument (theta and t log n
// both reach ~7e6 near the top of the generated range; 64-bit mantissas keep
// the reduced phases good to ~1e-11).

namespace zz {

// Riemann-Siegel theta by its asymptotic expansion through the t^-5 term;
// absolute error below ~3e-12 for t >= 9.
long double theta(long double t);
long double theta_deriv(long double t);

// Hardy Z(t): Riemann-Siegel main sum plus six tabulated remainder terms for
// t >= kZSwitch, Euler-Maclaurin below. Absolute accuracy ~1e-10 on [9, 3e6].
inline constexpr double kZSwitch = 4000.0;
double hardy_z(double t);

// The two evaluation paths individually, for cross-checks on the band where
// both are accurate (roughly [3600, 5000]).
namespace detail {
double z_riemann_siegel(double t);
double z_euler_maclaurin(double t);
} // namespace detail

// Gram point g_n: theta(g_n) = n pi, defined for n >= -1. A nonzero hint
// seeds Newton (callers scanning consecutive n pass the previous point).
double gram_point(long long n, double hint = 0.0);

// Scans Gram blocks upward from g_{-1} until at least `want` zeros are
// located, refines each bracket, and appends the ordinates to `out` in
// ascending order. Returns the certified coverage: every zero with
// 0 < gamma <= certified_height is in `out` (blocks are only closed at Gram
// points where the sign pattern confirms the count; Rosser's rule holds far
// beyond the heights reachable here).
struct ScanResult {
    long long last_closed_gram = -1;
    double certified_height = 0.0;
};
ScanResult scan_zeros(std::uint64_t want, std::vector<double>& out);

} // namespace zz
