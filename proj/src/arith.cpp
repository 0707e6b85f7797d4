#include "gbx/arith.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <sstream>

#include <boost/math/constants/constants.hpp>

#include "gbx/errors.hpp"

namespace gbx {

std::vector<std::uint32_t> primes_up_to(std::uint32_t limit) {
    std::vector<std::uint32_t> out;
    if (limit < 2) return out;
    std::vector<bool> comp(limit + 1, false);
    for (std::uint64_t p = 2; p * p <= limit; ++p)
        if (!comp[p])
            for (std::uint64_t m = p * p; m <= limit; m += p) comp[m] = true;
    for (std::uint32_t n = 2; n <= limit; ++n)
        if (!comp[n]) out.push_back(n);
    return out;
}

namespace {

const std::vector<std::uint32_t>& trial_primes() {
    static const std::vector<std::uint32_t> ps = primes_up_to(100000);
    return ps;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return std::uint64_t((unsigned __int128)(a)*b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

std::uint64_t pollard_brent(std::uint64_t n) {
    // n odd composite, no factor at or below the trial bound
    for (std::uint64_t c = 1;; ++c) {
        std::uint64_t x = 2, y = 2, ys = 2, d = 1, q = 1, r = 1;
        while (d == 1) {
            x = y;
            for (std::uint64_t i = 0; i < r; ++i) y = (mulmod(y, y, n) + c) % n;
            for (std::uint64_t k = 0; k < r && d == 1; k += 128) {
                ys = y;
                std::uint64_t lim = std::min<std::uint64_t>(128, r - k);
                for (std::uint64_t i = 0; i < lim; ++i) {
                    y = (mulmod(y, y, n) + c) % n;
                    q = mulmod(q, x > y ? x - y : y - x, n);
                }
                d = gcd_u64(q, n);
            }
            r <<= 1;
        }
        if (d == n) {
            // gcd batching overshot; replay one step at a time from the last checkpoint
            d = 1;
            while (d == 1) {
                ys = (mulmod(ys, ys, n) + c) % n;
                d = gcd_u64(x > ys ? x - ys : ys - x, n);
            }
        }
        if (d != n) return d;
    }
}

void split_into_primes(std::uint64_t m, std::vector<std::uint64_t>& out) {
    if (m == 1) return;
    if (is_prime_u64(m)) {
        out.push_back(m);
        return;
    }
    std::uint64_t d = pollard_brent(m);
    split_into_primes(d, out);
    split_into_primes(m / d, out);
}

} // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37})
        if (n % p == 0) return n == p;
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    // this base set decides primality for every n below 3.3e24, so for all of uint64
    for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s && witness; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) witness = false;
        }
        if (witness) return false;
    }
    return true;
}

Factorization factorize(std::uint64_t n) {
    if (n < 1) throw domain_error("factorize: n must be >= 1");
    Factorization f;
    f.n = n;
    std::uint64_t m = n;
    for (std::uint32_t p : trial_primes()) {
        if (std::uint64_t(p) * p > m) break;
        if (m % p == 0) {
            int e = 0;
            while (m % p == 0) { m /= p; ++e; }
            f.factors.emplace_back(p, e);
        }
    }
    if (m > 1) {
        const std::uint64_t lim = trial_primes().back();
        if (m <= lim * lim || is_prime_u64(m)) {
            // below lim^2 the trial loop only stops with a prime survivor
            f.factors.emplace_back(m, 1);
        } else {
            std::vector<std::uint64_t> ps;
            split_into_primes(m, ps);
            std::sort(ps.begin(), ps.end());
            for (std::size_t i = 0; i < ps.size();) {
                std::size_t j = i;
                while (j < ps.size() && ps[j] == ps[i]) ++j;
                f.factors.emplace_back(ps[i], int(j - i));
                i = j;
            }
        }
    }
    return f;
}

std::uint64_t euler_phi(const Factorization& f) {
    std::uint64_t r = 1;
    for (auto [p, e] : f.factors) {
        r *= p - 1;
        for (int i = 1; i < e; ++i) r *= p;
    }
    return r;
}

std::uint64_t euler_phi(std::uint64_t n) { return euler_phi(factorize(n)); }

int moebius(const Factorization& f) {
    for (auto [p, e] : f.factors)
        if (e > 1) return 0;
    return f.factors.size() % 2 == 0 ? 1 : -1;
}

int moebius(std::uint64_t n) { return moebius(factorize(n)); }

std::uint64_t divisor_count(std::uint64_t n) {
    std::uint64_t d = 1;
    for (auto [p, e] : factorize(n).factors) d *= std::uint64_t(e) + 1;
    return d;
}

std::uint64_t radical(std::uint64_t n) {
    std::uint64_t r = 1;
    for (auto [p, e] : factorize(n).factors) r *= p;
    return r;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
    while (b) { a %= b; std::swap(a, b); }
    return a;
}

bool coprime(std::uint64_t a, std::uint64_t b) { return gcd_u64(a, b) == 1; }

std::uint64_t phi_star(std::uint64_t q) {
    if (q == 0) throw domain_error("phi_star: q must be >= 1");
    std::uint64_t r = 1;
    for (auto [p, e] : factorize(q).factors) {
        if (e == 1) {
            if (p == 2) return 0; // q == 2 (mod 4): no primitive character exists
            r *= p - 2;
        } else {
            std::uint64_t t = (p - 1) * (p - 1);
            for (int i = 2; i < e; ++i) t *= p;
            r *= t;
        }
    }
    return r;
}

std::uint64_t phi1_star(std::uint64_t q) {
    if (q == 0) throw domain_error("phi1_star: q must be >= 1");
    if (q == 1) return 1;
    return phi_star(q) + 1;
}

namespace r50 {

real50 pi() { return boost::math::constants::pi<real50>(); }
real50 e() { return boost::math::constants::e<real50>(); }
real50 log2() { return boost::math::constants::ln_two<real50>(); }
real50 euler_c0() { return boost::math::constants::euler<real50>(); }

real50 twin_prime_c2() {
    // 30 digits; anything past that is not asserted anywhere.
    static const real50 v("0.660161815846869573927812110014");
    return v;
}

real50 loglog(const real50& x) {
    if (x <= 1) throw domain_error("loglog: x must be > 1");
    return log(log(x));
}

std::string to_string(const real50& v, int digits) {
    std::ostringstream os;
    os.precision(digits);
    os << v;
    return os.str();
}

} // namespace r50

const MathConstants& MathConstants::get() {
    static const MathConstants c = [] {
        MathConstants m;
        m.pi = r50::pi();
        m.e = r50::e();
        m.log2 = r50::log2();
        m.euler_c0 = r50::euler_c0();
        m.twin_prime_c2 = r50::twin_prime_c2();
        return m;
    }();
    return c;
}

real50 validate_twin_prime_c2(std::uint32_t plimit) {
    if (plimit < 3) throw domain_error("validate_twin_prime_c2: plimit too small");
    real50 prod = 1;
    for (std::uint32_t p : primes_up_to(plimit)) {
        if (p == 2) continue;
        real50 pm1 = real50(p) - 1;
        prod *= 1 - 1 / (pm1 * pm1);
    }
    // -log of the tail factor is below sum_{n > plimit} 1/(n-1)^2 < 1/(plimit-1),
    // so the true value sits in [prod * exp(-1/(plimit-1)), prod].
    real50 tail = 1 / real50(plimit - 1);
    real50 lo = prod * exp(-tail);
    real50 c2 = r50::twin_prime_c2();
    if (!(c2 <= prod && c2 >= lo))
        throw domain_error("twin prime constant literal fails the Euler-product bracket");
    return prod;
}

} // namespace gbx
