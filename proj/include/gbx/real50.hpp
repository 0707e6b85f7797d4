#pragma once

// 50-decimal-digit software floats used by every bound formula. Keeping the
// alias in one place so the precision choice is a single knob.

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace gbx {

using real50 = boost::multiprecision::cpp_bin_float_50;

namespace r50 {

real50 pi();
real50 e();
real50 log2();          // log 2
real50 euler_c0();      // Euler-Mascheroni constant
real50 twin_prime_c2(); // prod_{p>2} (1 - 1/(p-1)^2), no factor 2

// log log x; x > 1 required.
real50 loglog(const real50& x);

// String rendering with a fixed significant-digit count, deterministic across runs.
std::string to_string(const real50& v, int digits);

} // namespace r50
} // namespace gbx
