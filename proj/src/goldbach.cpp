#include "gbx/goldbach.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numeric>

#include <fftw3.h>

#include "gbx/errors.hpp"
#include "gbx/singular.hpp"

namespace gbx {

namespace {

constexpr std::uint64_t kFftLimitCap = 1ull << 26;

// fftw plan creation and destruction are not thread-safe; execution is.
std::mutex g_fftw_mu;

void require_in_sieve(std::uint64_t n, const SieveTable& sieve, const char* what) {
    if (n > sieve.limit())
        throw coverage_error(std::string(what) + ": argument " + std::to_string(n) +
                             " exceeds sieve limit " + std::to_string(sieve.limit()));
}

// n is prime iff Lambda(n) = log n; proper prime powers store log p < log n.
// exp of the stored log lands within 1e-6 of p, far inside the 0.5 window.
bool sieve_prime(std::uint64_t n, const SieveTable& sieve) {
    double l = sieve.lambda()[n];
    return l > 0.0 && std::abs(std::exp(l) - double(n)) < 0.5;
}

} // namespace

double goldbach_G(std::uint64_t n, const SieveTable& sieve) {
    require_in_sieve(n, sieve, "goldbach_G");
    const auto& lam = sieve.lambda();
    NeumaierSum s;
    for (std::uint64_t l = 1; l < n; ++l)
        if (lam[l] != 0.0) s.add(lam[l] * lam[n - l]);
    return s.value();
}

std::uint64_t goldbach_g(std::uint64_t n, const SieveTable& sieve) {
    require_in_sieve(n, sieve, "goldbach_g");
    std::uint64_t count = 0;
    for (std::uint64_t p = 2; p < n; ++p)
        if (sieve_prime(p, sieve) && sieve_prime(n - p, sieve)) ++count;
    return count;
}

GoldbachTable goldbach_all(std::uint64_t limit, const SieveTable& sieve,
                           const std::string& method) {
    // cap first: the refusal should not depend on how large the sieve happens to be
    if (method == "fft" && limit > kFftLimitCap)
        throw resource_error("goldbach_all: fft path supports limit <= 2^26, got " +
                             std::to_string(limit));
    require_in_sieve(limit, sieve, "goldbach_all");
    GoldbachTable t;
    t.limit = limit;
    t.method = method;
    t.G.assign(limit + 1, 0.0);
    const auto& lam = sieve.lambda();
    if (method == "direct") {
        for (std::uint64_t n = 4; n <= limit; ++n) {
            NeumaierSum s;
            for (std::uint64_t l = 1; l < n; ++l)
                if (lam[l] != 0.0) s.add(lam[l] * lam[n - l]);
            t.G[n] = s.value();
        }
    } else if (method == "fft") {
        if (limit < 4) return t;
        std::size_t n_fft = 1;
        while (n_fft < 2 * (limit + 1)) n_fft <<= 1;
        std::vector<double> buf(n_fft, 0.0);
        for (std::uint64_t l = 0; l <= limit; ++l) buf[l] = lam[l];
        std::vector<std::complex<double>> spec(n_fft / 2 + 1);
        fftw_plan fwd, bwd;
        {
            std::lock_guard<std::mutex> lk(g_fftw_mu);
            fwd = fftw_plan_dft_r2c_1d(int(n_fft), buf.data(),
                                       reinterpret_cast<fftw_complex*>(spec.data()),
                                       FFTW_ESTIMATE);
            bwd = fftw_plan_dft_c2r_1d(int(n_fft),
                                       reinterpret_cast<fftw_complex*>(spec.data()), buf.data(),
                                       FFTW_ESTIMATE);
        }
        fftw_execute(fwd);
        for (auto& z : spec) z *= z;
        fftw_execute(bwd);
        {
            std::lock_guard<std::mutex> lk(g_fftw_mu);
            fftw_destroy_plan(fwd);
            fftw_destroy_plan(bwd);
        }
        const double scale = 1.0 / double(n_fft);
        for (std::uint64_t n = 4; n <= limit; ++n) t.G[n] = buf[n] * scale;
    } else {
        throw domain_error("goldbach_all: unknown method '" + method + "'");
    }
    return t;
}

SummatoryResult summatory_S(std::uint64_t x, const SieveTable& sieve) {
    require_in_sieve(x, sieve, "summatory_S");
    SummatoryResult r;
    r.x = x;
    r.method = "prefix";
    if (x < 2) return r;
    const auto& lam = sieve.lambda();
    const auto& psi = sieve.psi_prefix();
    NeumaierSum s;
    for (std::uint64_t l = 1; l <= x - 1; ++l)
        if (lam[l] != 0.0) s.add(lam[l] * psi[x - l]);
    r.value = s.value();
    return r;
}

double summatory_S_direct(std::uint64_t x, const SieveTable& sieve) {
    require_in_sieve(x, sieve, "summatory_S_direct");
    const auto& lam = sieve.lambda();
    NeumaierSum s;
    for (std::uint64_t n = 4; n <= x; ++n)
        for (std::uint64_t l = 1; l < n; ++l)
            if (lam[l] != 0.0) s.add(lam[l] * lam[n - l]);
    return s.value();
}

SummatoryResult summatory_S_congruence(std::uint64_t x, std::uint64_t q, std::uint64_t a,
                                       std::uint64_t b, const SieveTable& sieve) {
    require_in_sieve(x, sieve, "summatory_S_congruence");
    if (q < 1)
        throw domain_error("summatory_S_congruence: modulus must be >= 1");
    if (q > 0xFFFFFFFFull)
        throw domain_error("summatory_S_congruence: modulus too large for class prefixes");
    if (a < 1 || a > q || b < 1 || b > q)
        throw domain_error("summatory_S_congruence: residues must lie in 1..q");
    SummatoryResult r;
    r.x = x;
    r.method = "congruence-prefix";
    r.coprime_classes = std::gcd(a, q) == 1 && std::gcd(b, q) == 1;
    if (x < 2) return r;
    auto cp = sieve.class_prefix(std::uint32_t(q), std::uint32_t(b % q), x);
    const auto& psib = *cp;
    const auto& lam = sieve.lambda();
    NeumaierSum s;
    std::uint64_t r0 = a % q;
    for (std::uint64_t l = (r0 == 0) ? q : r0; l <= x - 1; l += q)
        if (lam[l] != 0.0) s.add(lam[l] * psib[x - l]);
    r.value = s.value();
    return r;
}

SummatoryResult summatory_S_characters(std::uint64_t x, const DirichletCharacter& chi1,
                                       const DirichletCharacter& chi2, const SieveTable& sieve) {
    require_in_sieve(x, sieve, "summatory_S_characters");
    if (chi1.modulus() != chi2.modulus())
        throw domain_error("summatory_S_characters: characters have different moduli (" +
                           std::to_string(chi1.modulus()) + " vs " +
                           std::to_string(chi2.modulus()) + ")");
    SummatoryResult r;
    r.x = x;
    r.method = "character-prefix";
    if (x < 2) return r;
    const std::uint64_t q = chi1.modulus();
    const auto v1 = chi1.period_values();
    const auto v2 = chi2.period_values();
    const auto& lam = sieve.lambda();
    // chi2-twisted psi prefix over 0..x-1; entry m holds psi(m, chi2)
    std::vector<std::complex<double>> psi2(x);
    NeumaierSum p_re, p_im;
    for (std::uint64_t m = 1; m < x; ++m) {
        if (lam[m] != 0.0) {
            std::complex<double> z = v2[m % q] * lam[m];
            p_re.add(z.real());
            p_im.add(z.imag());
        }
        psi2[m] = {p_re.value(), p_im.value()};
    }
    NeumaierSum s_re, s_im;
    for (std::uint64_t l = 1; l <= x - 1; ++l) {
        if (lam[l] == 0.0) continue;
        std::complex<double> z = v1[l % q] * lam[l] * psi2[x - l];
        s_re.add(z.real());
        s_im.add(z.imag());
    }
    r.value = {s_re.value(), s_im.value()};
    return r;
}

std::complex<double> psi_chi(double x, const DirichletCharacter& chi, const SieveTable& sieve) {
    if (!(x >= 0.0))
        throw domain_error("psi_chi: x must be nonnegative");
    if (x > double(sieve.limit()))
        throw coverage_error("psi_chi: x exceeds sieve limit " + std::to_string(sieve.limit()));
    const std::uint64_t n_max = std::uint64_t(x);
    const std::uint64_t q = chi.modulus();
    const auto v = chi.period_values();
    const auto& lam = sieve.lambda();
    NeumaierSum re, im;
    for (std::uint64_t n = 2; n <= n_max; ++n) {
        if (lam[n] == 0.0) continue;
        std::complex<double> z = v[n % q] * lam[n];
        re.add(z.real());
        im.add(z.imag());
    }
    return {re.value(), im.value()};
}

double G_minus_J_sum(std::uint64_t x, std::uint64_t q, std::uint64_t c, const SieveTable& sieve) {
    if (q < 1)
        throw domain_error("G_minus_J_sum: modulus must be >= 1");
    require_in_sieve(x, sieve, "G_minus_J_sum");
    GoldbachTable table;
    if (x >= 4) table = goldbach_all(x, sieve, "fft");
    NeumaierSum s;
    std::uint64_t r0 = c % q;
    for (std::uint64_t n = (r0 == 0) ? q : r0; n <= x; n += q) {
        double g = (n < table.G.size()) ? table.G[n] : 0.0;
        s.add(g - hardy_littlewood_J(n));
    }
    return s.value();
}

} // namespace gbx
