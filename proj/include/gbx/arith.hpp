#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gbx/real50.hpp"

namespace gbx {

// Prime factorization with ascending primes, any 64-bit n >= 1. Trial division
// against a cached prime list, then Miller-Rabin plus Brent's rho for survivors.
struct Factorization {
    std::uint64_t n = 1;
    std::vector<std::pair<std::uint64_t, int>> factors; // (p, exponent), p ascending
};

Factorization factorize(std::uint64_t n);

// Deterministic Miller-Rabin over the 12-prime base set (exact for 64-bit inputs).
bool is_prime_u64(std::uint64_t n);

std::uint64_t euler_phi(std::uint64_t n);
std::uint64_t euler_phi(const Factorization& f);
int moebius(std::uint64_t n);
int moebius(const Factorization& f);
std::uint64_t divisor_count(std::uint64_t n);
std::uint64_t radical(std::uint64_t n);
bool coprime(std::uint64_t a, std::uint64_t b);
std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);

// Primes up to limit (simple sieve; used by factorize, products over primes,
// and the Euler-product cross-check).
std::vector<std::uint32_t> primes_up_to(std::uint32_t limit);

// Count of primitive characters mod q: multiplicative with
// phi_star(p) = p-2, phi_star(p^a) = (p-1)^2 p^(a-2) for a >= 2; phi_star(1) = 1.
// Zero exactly when q == 2 (mod 4).
std::uint64_t phi_star(std::uint64_t q);

// Primitive-or-principal count: phi_star(q) + 1 for q > 1, and 1 for q = 1
// (the character mod 1 is both).
std::uint64_t phi1_star(std::uint64_t q);

// Shared mathematical constants. C2 is the bare product over odd primes of
// (1 - 1/(p-1)^2); the factor 2 that usually rides along in singular series
// is applied at use sites, never stored here.
struct MathConstants {
    real50 pi;
    real50 e;
    real50 log2;
    real50 euler_c0;
    real50 twin_prime_c2;

    static const MathConstants& get();
};

// Cross-checks the C2 literal against a truncated Euler product over p <= plimit
// with a rigorous tail bound; throws domain_error on disagreement.
// Returns the truncated product.
real50 validate_twin_prime_c2(std::uint32_t plimit = 100000);

} // namespace gbx
