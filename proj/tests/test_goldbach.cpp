#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <numeric>
#include <vector>

#include "gbx/characters.hpp"
#include "gbx/errors.hpp"
#include "gbx/goldbach.hpp"
#include "gbx/sieve.hpp"
#include "gbx/singular.hpp"

using namespace gbx;
using cd = std::complex<double>;

namespace {

const SieveTable& sieve_1e6() {
    static SieveTable s = build_sieve(1000000);
    return s;
}

// Primality recovered from the Lambda table: prime iff Lambda(n) = log n.
std::vector<char> prime_bitmap(const SieveTable& s, std::uint64_t limit) {
    std::vector<char> isp(limit + 1, 0);
    const auto& lam = s.lambda();
    for (std::uint64_t n = 2; n <= limit; ++n)
        isp[n] = lam[n] > 0.0 && std::abs(std::exp(lam[n]) - double(n)) < 0.5;
    return isp;
}

double rel_gap(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

} // namespace

TEST_CASE("G at small n matches hand enumeration") {
    const auto& s = sieve_1e6();
    const double l2 = std::log(2.0), l3 = std::log(3.0), l5 = std::log(5.0), l7 = std::log(7.0);
    for (std::uint64_t n = 0; n <= 3; ++n) CHECK(goldbach_G(n, s) == 0.0);
    CHECK(goldbach_G(4, s) == doctest::Approx(l2 * l2).epsilon(1e-14));
    CHECK(goldbach_G(5, s) == doctest::Approx(2 * l2 * l3).epsilon(1e-14));
    CHECK(goldbach_G(6, s) == doctest::Approx(2 * l2 * l2 + l3 * l3).epsilon(1e-14));
    // pairs for 10: (2,8), (8,2), (3,7), (7,3), (5,5)
    CHECK(goldbach_G(10, s) == doctest::Approx(2 * l2 * l2 + 2 * l3 * l7 + l5 * l5).epsilon(1e-14));
}

TEST_CASE("ordered prime pair counts") {
    const auto& s = sieve_1e6();
    CHECK(goldbach_g(2, s) == 0);
    CHECK(goldbach_g(3, s) == 0);
    CHECK(goldbach_g(4, s) == 1);  // (2,2)
    CHECK(goldbach_g(5, s) == 2);  // (2,3), (3,2)
    CHECK(goldbach_g(6, s) == 1);  // (3,3)
    CHECK(goldbach_g(10, s) == 3); // (3,7), (5,5), (7,3)

    // independent count from the primality bitmap
    auto isp = prime_bitmap(s, 123456);
    for (std::uint64_t n : {4ull, 6ull, 100ull, 1000ull, 9999ull, 123456ull}) {
        std::uint64_t want = 0;
        for (std::uint64_t p = 2; p < n; ++p)
            if (isp[p] && isp[n - p]) ++want;
        CHECK(goldbach_g(n, s) == want);
    }
}

TEST_CASE("direct and fft tables agree pointwise") {
    const auto& s = sieve_1e6();
    auto direct = goldbach_all(5000, s, "direct");
    auto fft = goldbach_all(5000, s, "fft");
    REQUIRE(direct.G.size() == 5001);
    REQUIRE(fft.G.size() == 5001);
    CHECK(direct.method == "direct");
    CHECK(fft.method == "fft");
    double worst = 0.0;
    for (std::uint64_t n = 0; n <= 5000; ++n)
        worst = std::max(worst, std::abs(direct.G[n] - fft.G[n]));
    CHECK(worst < 1e-4);

    auto tiny = goldbach_all(4, s, "direct");
    CHECK(tiny.G[0] == 0.0);
    CHECK(tiny.G[1] == 0.0);
    CHECK(tiny.G[2] == 0.0);
    CHECK(tiny.G[3] == 0.0);
    CHECK(tiny.G[4] == doctest::Approx(std::log(2.0) * std::log(2.0)).epsilon(1e-14));
    auto empty = goldbach_all(2, s, "fft");
    for (double v : empty.G) CHECK(v == 0.0);
}

TEST_CASE("fft table aggregates to the prefix sum") {
    const auto& s = sieve_1e6();
    auto t = goldbach_all(1000000, s, "fft");
    NeumaierSum sum;
    for (double v : t.G) sum.add(v);
    double S = summatory_S(1000000, s).value.real();
    CHECK(std::abs(sum.value() - S) < 1e-6 * S);
    // leading-order scale: S(x) tracks x^2/2
    double ratio = S / (0.5 * 1e6 * 1e6);
    CHECK(ratio > 0.98);
    CHECK(ratio < 1.02);
}

TEST_CASE("prefix rearrangement equals the defining double sum") {
    const auto& s = sieve_1e6();
    const double l2 = std::log(2.0), l3 = std::log(3.0);
    CHECK(summatory_S(3, s).value.real() == 0.0);
    CHECK(summatory_S(4, s).value.real() == doctest::Approx(l2 * l2).epsilon(1e-14));
    CHECK(summatory_S(5, s).value.real() == doctest::Approx(l2 * l2 + 2 * l2 * l3).epsilon(1e-14));
    for (std::uint64_t x = 0; x <= 300; ++x)
        CHECK(rel_gap(summatory_S(x, s).value.real(), summatory_S_direct(x, s)) < 1e-9);
    for (std::uint64_t x : {500ull, 777ull, 1234ull, 2000ull})
        CHECK(rel_gap(summatory_S(x, s).value.real(), summatory_S_direct(x, s)) < 1e-9);
}

TEST_CASE("S is nondecreasing") {
    const auto& s = sieve_1e6();
    double prev = 0.0;
    for (std::uint64_t x = 1; x <= 2000; ++x) {
        double cur = summatory_S(x, s).value.real();
        CHECK(cur >= prev);
        prev = cur;
    }
}

TEST_CASE("congruence classes partition the full sum") {
    const auto& s = sieve_1e6();
    for (std::uint64_t q : {1ull, 2ull, 3ull, 5ull, 12ull}) {
        for (std::uint64_t x : {100ull, 2000ull}) {
            double S = summatory_S(x, s).value.real();
            NeumaierSum parts;
            for (std::uint64_t a = 1; a <= q; ++a)
                for (std::uint64_t b = 1; b <= q; ++b) {
                    auto r = summatory_S_congruence(x, q, a, b, s);
                    CHECK(r.value.imag() == 0.0);
                    CHECK(r.coprime_classes == (std::gcd(a, q) == 1 && std::gcd(b, q) == 1));
                    parts.add(r.value.real());
                }
            CHECK(std::abs(parts.value() - S) < 1e-10 * std::max(1.0, S));
        }
    }
    // q = 1 collapses to the plain sum
    CHECK(summatory_S_congruence(1500, 1, 1, 1, s).value.real() ==
          doctest::Approx(summatory_S(1500, s).value.real()).epsilon(1e-12));
}

TEST_CASE("congruence sum over a non-coprime class matches a brute double loop") {
    const auto& s = sieve_1e6();
    const auto& lam = s.lambda();
    const std::uint64_t x = 300, q = 4, a = 2, b = 4;
    NeumaierSum brute;
    for (std::uint64_t l = 1; l < x; ++l) {
        if (l % q != a % q || lam[l] == 0.0) continue;
        for (std::uint64_t m = 1; l + m <= x; ++m)
            if (m % q == b % q && lam[m] != 0.0) brute.add(lam[l] * lam[m]);
    }
    auto r = summatory_S_congruence(x, q, a, b, s);
    CHECK(!r.coprime_classes);
    CHECK(r.value.real() == doctest::Approx(brute.value()).epsilon(1e-12));
    CHECK(r.value.real() > 0.0); // the class l=2, m=4,8,... contributes log2 * log2 terms
}

TEST_CASE("character sums recombine to congruence sums") {
    const auto& s = sieve_1e6();
    for (std::uint64_t q : {3ull, 4ull, 5ull, 7ull, 8ull, 12ull, 20ull}) {
        CharacterGroup g(q);
        std::uint64_t x = (q == 3) ? 100 : 2000;
        double phi2 = double(g.size()) * double(g.size());
        // all pair sums once
        std::vector<cd> pair_sums(g.size() * g.size());
        for (std::size_t i = 0; i < g.size(); ++i)
            for (std::size_t j = 0; j < g.size(); ++j)
                pair_sums[i * g.size() + j] =
                    summatory_S_characters(x, g.at(i), g.at(j), s).value;
        for (std::uint64_t a = 1; a <= q; ++a) {
            if (std::gcd(a, q) != 1) continue;
            for (std::uint64_t b = 1; b <= q; ++b) {
                if (std::gcd(b, q) != 1) continue;
                cd acc{0.0, 0.0};
                for (std::size_t i = 0; i < g.size(); ++i)
                    for (std::size_t j = 0; j < g.size(); ++j)
                        acc += std::conj(g.at(i)(a) * g.at(j)(b)) * pair_sums[i * g.size() + j];
                acc /= phi2;
                double want = summatory_S_congruence(x, q, a, b, s).value.real();
                CHECK(std::abs(acc.real() - want) < 1e-6 * std::max(1.0, std::abs(want)));
                CHECK(std::abs(acc.imag()) < 1e-6 * std::max(1.0, std::abs(want)));
            }
        }
    }
}

TEST_CASE("character sum symmetries") {
    const auto& s = sieve_1e6();
    // trivial character pair collapses to S(x)
    CharacterGroup g1(1);
    CHECK(summatory_S_characters(800, g1.at(0), g1.at(0), s).value.real() ==
          doctest::Approx(summatory_S(800, s).value.real()).epsilon(1e-12));

    // conjugating both characters conjugates the sum
    CharacterGroup g4(4);
    auto z4 = summatory_S_characters(500, g4.at(1), g4.at(1), s).value;
    auto z4c = summatory_S_characters(500, g4.at(1).conjugate(), g4.at(1).conjugate(), s).value;
    CHECK(std::abs(z4c - std::conj(z4)) < 1e-9 * std::max(1.0, std::abs(z4)));

    CharacterGroup g5(5);
    std::size_t quartic = 0;
    for (std::size_t i = 0; i < g5.size(); ++i)
        if (g5.at(i).order() == 4) { quartic = i; break; }
    REQUIRE(quartic != 0);
    auto z5 = summatory_S_characters(500, g5.at(quartic), g5.at(0), s).value;
    auto z5c =
        summatory_S_characters(500, g5.at(quartic).conjugate(), g5.at(0).conjugate(), s).value;
    CHECK(std::abs(z5.imag()) > 1e-6); // genuinely complex, the check is not vacuous
    CHECK(std::abs(z5c - std::conj(z5)) < 1e-9 * std::max(1.0, std::abs(z5)));
}

TEST_CASE("twisted psi sums") {
    const auto& s = sieve_1e6();
    CharacterGroup g1(1), g4(4);

    // trivial character: psi(10) = 3 log 2 + 2 log 3 + log 5 + log 7
    cd p10 = psi_chi(10.0, g1.at(0), s);
    CHECK(p10.imag() == 0.0);
    CHECK(p10.real() == doctest::Approx(7.832014180505469).epsilon(1e-14));
    CHECK(p10.real() == doctest::Approx(s.psi_at(10.0)).epsilon(1e-14));

    // non-principal mod 4 against a hand-coded evaluation
    REQUIRE(g4.at(1).parity() == doctest::Approx(-1.0));
    const auto& lam = s.lambda();
    NeumaierSum hand;
    for (std::uint64_t n = 2; n <= 100; ++n) {
        if (lam[n] == 0.0 || n % 2 == 0) continue;
        hand.add((n % 4 == 1 ? 1.0 : -1.0) * lam[n]);
    }
    cd p100 = psi_chi(100.0, g4.at(1), s);
    CHECK(p100.imag() == 0.0);
    CHECK(p100.real() == doctest::Approx(hand.value()).epsilon(1e-12));
}

TEST_CASE("principal twist stays within log q log x of psi") {
    const auto& s = sieve_1e6();
    const auto& lam = s.lambda();
    for (std::uint64_t q : {3ull, 5ull, 12ull}) {
        double bound_scale = std::log(double(q));
        double psi_run = 0.0, chi_run = 0.0;
        for (std::uint64_t n = 2; n <= 100000; ++n) {
            psi_run += lam[n];
            if (std::gcd(n, q) == 1) chi_run += lam[n];
            CHECK(std::abs(chi_run - psi_run) <= bound_scale * std::log(double(n)) + 1e-9);
        }
        // tie the incremental replay to the library path at the endpoint
        CharacterGroup g(q);
        cd lib = psi_chi(100000.0, g.at(g.principal_index()), s);
        CHECK(lib.imag() == 0.0);
        CHECK(lib.real() == doctest::Approx(chi_run).epsilon(1e-9));
    }
}

TEST_CASE("main-term subtraction stays at fluctuation scale") {
    const auto& s = sieve_1e6();
    double r = G_minus_J_sum(1000000, 1, 1, s);
    CHECK(std::abs(r) / (0.5 * 1e6 * 1e6) < 0.05);

    // below 4 only the -J terms survive: J(1) + J(2) + J(3) = C2 + 2 C2 + 6 C2
    double want = -(hardy_littlewood_J(1) + hardy_littlewood_J(2) + hardy_littlewood_J(3));
    CHECK(G_minus_J_sum(3, 1, 1, s) == doctest::Approx(want).epsilon(1e-13));
    CHECK(G_minus_J_sum(3, 1, 1, s) ==
          doctest::Approx(-9.0 * 0.66016181584686957393).epsilon(1e-12));
}

TEST_CASE("class-restricted subtraction against a two-pass oracle") {
    const auto& s = sieve_1e6();
    const std::uint64_t x = 10000, q = 3, c = 0;
    NeumaierSum oracle;
    for (std::uint64_t n = q; n <= x; n += q)
        oracle.add(goldbach_G(n, s) - hardy_littlewood_J(n));
    double lib = G_minus_J_sum(x, q, c, s);
    // the library G values come from the fft table, certified pointwise to 1e-4
    // over ~x/q terms, so allow that much drift on top of the relative slack
    CHECK(std::abs(lib - oracle.value()) < 1e-6 * std::abs(oracle.value()) + 0.5);
}

TEST_CASE("every even number through a million has a prime pair") {
    const auto& s = sieve_1e6();
    auto isp = prime_bitmap(s, 1000000);
    std::vector<std::uint32_t> primes;
    for (std::uint32_t p = 2; p <= 1000000; ++p)
        if (isp[p]) primes.push_back(p);
    for (std::uint64_t n = 4; n <= 1000000; n += 2) {
        bool found = false;
        for (std::uint32_t p : primes) {
            if (p > n - 2) break;
            if (isp[n - p]) { found = true; break; }
        }
        REQUIRE(found);
    }
    // and the op agrees that those witnesses are counted
    CHECK(goldbach_g(1000000, s) >= 1);
}

TEST_CASE("argument validation") {
    auto small = build_sieve(1000);
    CHECK_THROWS_AS((void)goldbach_G(1001, small), coverage_error);
    CHECK_THROWS_AS((void)goldbach_g(1001, small), coverage_error);
    CHECK_THROWS_AS((void)summatory_S(1001, small), coverage_error);
    CHECK_THROWS_AS((void)goldbach_all(1001, small, "direct"), coverage_error);
    CHECK_THROWS_AS((void)goldbach_all((1ull << 26) + 1, small, "fft"), resource_error);
    CHECK_THROWS_AS((void)goldbach_all(10, small, "mystery"), domain_error);
    CHECK_THROWS_AS((void)summatory_S_congruence(100, 5, 0, 1, small), domain_error);
    CHECK_THROWS_AS((void)summatory_S_congruence(100, 5, 1, 6, small), domain_error);
    CHECK_THROWS_AS((void)psi_chi(2000.0, CharacterGroup(3).at(0), small), coverage_error);
    CHECK_THROWS_AS((void)psi_chi(-1.0, CharacterGroup(3).at(0), small), domain_error);
    CharacterGroup g3(3), g4(4);
    CHECK_THROWS_AS((void)summatory_S_characters(100, g3.at(0), g4.at(0), small), domain_error);
}
