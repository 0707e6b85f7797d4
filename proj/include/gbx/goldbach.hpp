#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "gbx/characters.hpp"
#include "gbx/sieve.hpp"

namespace gbx {

// G over 0..limit inclusive; G[0..3] are zero. method records which convolution
// path produced the table ("direct" or "fft").
struct GoldbachTable {
    std::uint64_t limit = 0;
    std::string method;
    std::vector<double> G;
};

// Result of a summatory evaluation. Real-path sums leave value.imag() == 0.
// coprime_classes is only meaningful for the congruence path: it records
// whether both residue classes were coprime to the modulus. Sums over
// non-coprime classes are still well defined (they see at most the prime
// powers dividing q), so that case is reported here instead of throwing.
struct SummatoryResult {
    std::uint64_t x = 0;
    std::complex<double> value{0.0, 0.0};
    std::string method;
    bool coprime_classes = true;
};

// G(n) = sum over l + m = n of Lambda(l) * Lambda(m), computed by the direct
// loop over l. Requires n <= sieve.limit().
double goldbach_G(std::uint64_t n, const SieveTable& sieve);

// Number of ordered prime pairs (p1, p2) with p1 + p2 = n.
std::uint64_t goldbach_g(std::uint64_t n, const SieveTable& sieve);

// G(n) for every n <= limit. method "direct" is quadratic in limit and meant
// for cross-checking; "fft" squares the Lambda spectrum (real transform of
// length >= 2*limit+1, so no circular aliasing reaches n <= limit) and is the
// path for large tables. The fft path refuses limit > 2^26.
GoldbachTable goldbach_all(std::uint64_t limit, const SieveTable& sieve,
                           const std::string& method = "fft");

// S(x) = sum_{n<=x} G(n), evaluated as sum_{l<=x-1} Lambda(l) * psi(x-l).
// Linear in x; this is the primary path.
SummatoryResult summatory_S(std::uint64_t x, const SieveTable& sieve);

// S(x) by the defining double sum. Quadratic; oracle for the prefix path.
double summatory_S_direct(std::uint64_t x, const SieveTable& sieve);

// S(x; q, a, b) = sum over l + m <= x, l = a, m = b (mod q) of
// Lambda(l) * Lambda(m). Requires 1 <= a, b <= q; a == q means the zero class.
SummatoryResult summatory_S_congruence(std::uint64_t x, std::uint64_t q, std::uint64_t a,
                                       std::uint64_t b, const SieveTable& sieve);

// S(x; chi1, chi2) = sum_{l<=x-1} chi1(l) Lambda(l) psi(x-l, chi2). Both
// characters must share one modulus. Real and imaginary parts accumulate with
// compensated summation in index order.
SummatoryResult summatory_S_characters(std::uint64_t x, const DirichletCharacter& chi1,
                                       const DirichletCharacter& chi2, const SieveTable& sieve);

// psi(x, chi) = sum_{n<=x} chi(n) Lambda(n).
std::complex<double> psi_chi(double x, const DirichletCharacter& chi, const SieveTable& sieve);

// sum_{n<=x, n = c (mod q)} (G(n) - J(n)) where J is the quadratic main term
// from hardy_littlewood_J. G comes from the fft table, J from factoring each n.
// c is reduced mod q, so c = 0 and c = q name the same class.
double G_minus_J_sum(std::uint64_t x, std::uint64_t q, std::uint64_t c, const SieveTable& sieve);

} // namespace gbx
