#include "zeta_z.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <utility>

#include <boost/math/tools/toms748_solve.hpp>

#include "rs_cheb_tables.hpp"

namespace zz {

namespace {

constexpr long double kPi = 3.141592653589793238462643383279502884L;
constexpr long double kTwoPi = 6.283185307179586476925286766559005768L;

static_assert(sizeof(long double) > sizeof(double),
              "extended precision required for the large trig arguments");

// B_{2k}/(2k)! for the Euler-Maclaurin tail, k = 1..22.
constexpr long double kBernOverFact[] = {
    0.08333333333333333333333333L,
    -0.001388888888888888888888889L,
    0.00003306878306878306878306878L,
    -0.0000008267195767195767195767196L,
    2.087675698786809897921009e-8L,
    -5.284190138687493184847682e-10L,
    1.338253653068467883282698e-11L,
    -3.389680296322582866830195e-13L,
    8.586062056277844564135905e-15L,
    -2.174868698558061873041516e-16L,
    5.509002828360229515202653e-18L,
    -1.395446468581252334070769e-19L,
    3.53470703962946747169323e-21L,
    -8.953517427037546850402611e-23L,
    2.267952452337683060310951e-24L,
    -5.744790668872202445263882e-26L,
    1.455172475614864901866265e-27L,
    -3.685994940665310178181782e-29L,
    9.336734257095044672032555e-31L,
    -2.365022415700629934559635e-32L,
    5.990671762482134304659912e-34L,
    -1.517454884468290261710813e-35L,
};

// log n and 1/sqrt(n) for the main-sum indices; grown on demand. The scan is
// single-threaded, so plain statics are fine here.
std::vector<long double> g_ln{0.0L, 0.0L};
std::vector<double> g_inv_sqrt{0.0, 1.0};

void grow_tables(std::size_t n) {
    while (g_ln.size() <= n) {
        std::size_t k = g_ln.size();
        g_ln.push_back(std::log(static_cast<long double>(k)));
        g_inv_sqrt.push_back(1.0 / std::sqrt(static_cast<double>(k)));
    }
}

} // namespace

namespace detail {

namespace {
double cheb_eval(int j, double u) {
    double b1 = 0.0, b2 = 0.0;
    for (int m = kRsChebNodes - 1; m >= 1; --m) {
        double next = 2.0 * u * b1 - b2 + kRsCheb[j][m];
        b2 = b1;
        b1 = next;
    }
    return u * b1 - b2 + kRsCheb[j][0];
}

} // namespace

double z_riemann_siegel(double t) {
    const long double tl = t;
    const long double a = std::sqrt(tl / kTwoPi);
    const long long n_main = static_cast<long long>(a);
    grow_tables(static_cast<std::size_t>(n_main));
    const long double th = theta(tl);
    double sum = 0.0;
    for (long long n = 1; n <= n_main; ++n) {
        long double arg = std::fmod(th - tl * g_ln[static_cast<std::size_t>(n)], kTwoPi);
        sum += std::cos(static_cast<double>(arg)) * g_inv_sqrt[static_cast<std::size_t>(n)];
    }
    sum *= 2.0;
    const double p = static_cast<double>(a - n_main);
    const double u = 2.0 * p - 1.0;
    const double inv_a = static_cast<double>(1.0L / a);
    double corr = 0.0;
    double scale = 1.0;
    for (int j = 0; j < kRsChebTerms; ++j) {
        corr += cheb_eval(j, u) * scale;
        scale *= inv_a;
    }
    corr /= std::sqrt(static_cast<double>(a));
    return (n_main % 2 == 0) ? sum - corr : sum + corr;
}

double z_euler_maclaurin(double t) {
    using cld = std::complex<long double>;
    const long double tl = t;
    const long long n_cut = static_cast<long long>(t / 2.0) + 40;
    grow_tables(static_cast<std::size_t>(n_cut));
    // sum_{n<N} n^{-s}, s = 1/2 + it, via polar pieces
    cld acc{0.0L, 0.0L};
    for (long long n = 1; n < n_cut; ++n) {
        long double ln = g_ln[static_cast<std::size_t>(n)];
        long double ph = std::fmod(-tl * ln, kTwoPi);
        long double mag = std::exp(-0.5L * ln);
        acc += cld{mag * std::cos(ph), mag * std::sin(ph)};
    }
    const cld s{0.5L, tl};
    const long double lnN = std::log(static_cast<long double>(n_cut));
    const cld n_pow_minus_s =
        std::exp(-0.5L * lnN) * cld{std::cos(-tl * lnN), std::sin(-tl * lnN)};
    const long double nf = static_cast<long double>(n_cut);
    // N^{1-s}/(s-1) + N^{-s}/2
    acc += n_pow_minus_s * nf / (s - 1.0L);
    acc += n_pow_minus_s * 0.5L;
    // Bernoulli tail: B_{2k}/(2k)! * s(s+1)...(s+2k-2) * N^{1-s-2k}
    cld poch = s;
    cld npow = n_pow_minus_s / nf; // N^{-s-1}
    for (std::size_t k = 1; k <= sizeof(kBernOverFact) / sizeof(kBernOverFact[0]); ++k) {
        cld term = kBernOverFact[k - 1] * poch * npow;
        acc += term;
        if (std::abs(term) < 1e-22L) break;
        poch *= (s + static_cast<long double>(2 * k - 1)) * (s + static_cast<long double>(2 * k));
        npow /= nf * nf;
    }
    const long double th = std::fmod(theta(tl), kTwoPi);
    return static_cast<double>(std::cos(th) * acc.real() - std::sin(th) * acc.imag());
}

} // namespace detail

namespace {
bool gram_good(long long n, double z) { return ((n & 1LL) == 0) ? z > 0.0 : z < 0.0; }
} // namespace

long double theta(long double t) {
    const long double lg = std::log(t / kTwoPi);
    const long double t2 = t * t;
    return 0.5L * t * lg - 0.5L * t - kPi / 8.0L + 1.0L / (48.0L * t) +
           7.0L / (5760.0L * t * t2) + 31.0L / (80640.0L * t2 * t2 * t);
}

long double theta_deriv(long double t) {
    const long double t2 = t * t;
    return 0.5L * std::log(t / kTwoPi) - 1.0L / (48.0L * t2) - 7.0L / (1920.0L * t2 * t2);
}

double hardy_z(double t) {
    if (!(t >= 9.0))
        throw std::domain_error("hardy_z: t must be >= 9, got " + std::to_string(t));
    return t >= kZSwitch ? detail::z_riemann_siegel(t) : detail::z_euler_maclaurin(t);
}

double gram_point(long long n, double hint) {
    if (n < -1) throw std::domain_error("gram_point: n must be >= -1");
    const long double target = static_cast<long double>(n) * kPi;
    long double g = hint > 0.0 ? hint
                               : static_cast<long double>(
                                     kTwoPi * (n + 2.0) / std::log(static_cast<double>(n) + 9.0) + 7.0);
    for (int it = 0; it < 60; ++it) {
        if (g < 9.0L) g = 9.0L;
        long double step = (theta(g) - target) / theta_deriv(g);
        g -= step;
        if (std::abs(step) < 1e-12L * g + 1e-12L) break;
    }
    return static_cast<double>(g);
}

ScanResult scan_zeros(std::uint64_t want, std::vector<double>& out) {
    out.reserve(out.size() + want + 8);
    long long anchor = -1;
    double g_anchor = gram_point(-1);
    double z_anchor = hardy_z(g_anchor);
    if (!gram_good(anchor, z_anchor))
        throw std::runtime_error("scan_zeros: unexpected sign at the starting Gram point");
    ScanResult res{anchor, g_anchor};
    std::vector<double> grams, zs;
    while (out.size() < want) {
        // extend until the sign pattern closes the block
        grams.assign(1, g_anchor);
        zs.assign(1, z_anchor);
        long long j = anchor;
        do {
            ++j;
            double g = gram_point(j, grams.back() + (grams.back() - g_anchor) /
                                                        std::max<double>(1.0, double(j - anchor)));
            grams.push_back(g);
            zs.push_back(hardy_z(g));
        } while (!gram_good(j, zs.back()));
        const std::size_t k = static_cast<std::size_t>(j - anchor); // zeros in this block
        // locate k brackets, refining the grid until all are seen
        std::vector<std::pair<double, double>> brackets;
        for (int m = 1; m <= 8192; m *= 2) {
            brackets.clear();
            double prev_t = grams.front();
            double prev_z = zs.front();
            for (std::size_t i = 0; i + 1 < grams.size(); ++i) {
                for (int step = 1; step <= m; ++step) {
                    double tcur = (step == m)
                                      ? grams[i + 1]
                                      : grams[i] + (grams[i + 1] - grams[i]) * step / m;
                    double zcur = (step == m) ? zs[i + 1] : hardy_z(tcur);
                    if ((prev_z < 0.0 && zcur > 0.0) || (prev_z > 0.0 && zcur < 0.0))
                        brackets.emplace_back(prev_t, tcur);
                    prev_t = tcur;
                    prev_z = zcur;
                }
            }
            if (brackets.size() == k) break;
            if (brackets.size() > k)
                throw std::runtime_error("scan_zeros: more sign changes than zeros near t=" +
                                         std::to_string(grams.front()));
        }
        if (brackets.size() != k)
            throw std::runtime_error("scan_zeros: unresolved Gram block near t=" +
                                     std::to_string(grams.front()) +
                                     " (expected " + std::to_string(k) + " zeros)");
        for (auto [lo, hi] : brackets) {
            boost::uintmax_t iters = 100;
            auto r = boost::math::tools::toms748_solve(
                [](double x) { return hardy_z(x); }, lo, hi,
                [](double a, double b) { return b - a < 1e-9; }, iters);
            out.push_back(0.5 * (r.first + r.second));
        }
        anchor = j;
        g_anchor = grams.back();
        z_anchor = zs.back();
        res.last_closed_gram = anchor;
        res.certified_height = g_anchor;
    }
    return res;
}

} // namespace zz
