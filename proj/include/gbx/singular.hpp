#pragma once

#include <complex>
#include <cstdint>

#include "gbx/characters.hpp"

namespace gbx {

// Character-weighted local density for congruence Goldbach averages:
//   mu(q*) chi*(c) / (phi(q) phi(q*)) * prod_{p | q, p not dividing q*c} (p-2)/(p-1)
// with q* the conductor of chi and chi* its inducing primitive character.
// Satisfies sum_{a=1..q, (a(c-a),q)=1} chi(a) = phi(q)^2 * value, which is the
// identity the tests enforce.
std::complex<double> singular_series(std::uint64_t q, std::uint64_t c,
                                     const DirichletCharacter& chi);

// Principal-character case; real-valued: (1/phi(q)) prod_{p|q, p∤c}(p-2)/(p-1).
double singular_series_principal(std::uint64_t q, std::uint64_t c);

// Predicted average order of G(n) spread over all n:
//   J(n) = n C2 prod_{p|n, p>2}(p-1)/(p-2),  n >= 1.
// Summed over all n <= x this is x^2/2 + O(x log^2 x); the classical main term
// concentrated on even n is twice this (next function).
double hardy_littlewood_J(std::uint64_t n);

// Density-weighted main term on even n: 2 J(n) for even n, 0 for odd n.
// Summed over even n <= x this is x^2/2 + O(x log^2 x).
double hardy_littlewood_even_main(std::uint64_t n);

} // namespace gbx
