#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

namespace gbx {

// Von Mangoldt table with prefix sums. Arrays are indexed 0..limit inclusive;
// lambda[0] = lambda[1] = 0. psi_prefix[k] = sum_{n<=k} lambda[n], accumulated
// with compensated summation in index order so rebuilds are bit-identical.
//
// Residue-class prefixes c[k] = sum_{n<=k, n=r (mod q)} lambda[n] are built
// lazily per (q, r) and only to the requested length; full-limit arrays for
// every residue would not fit in memory at the supported limits.
class SieveTable {
public:
    std::uint64_t limit() const { return limit_; }
    const std::vector<double>& lambda() const { return lambda_; }
    const std::vector<double>& psi_prefix() const { return psi_; }

    double lambda_at(std::uint64_t n) const;
    // psi(x) = psi_prefix[floor(x)]; x in [0, limit].
    double psi_at(double x) const;

    // Prefix for residue class r mod q, valid for indices 0..len. Cached;
    // a longer request rebuilds the class. Thread-safe.
    std::shared_ptr<const std::vector<double>> class_prefix(std::uint32_t q, std::uint32_t r,
                                                            std::uint64_t len) const;

private:
    friend SieveTable build_sieve(std::uint64_t limit, std::uint64_t memory_budget);

    std::uint64_t limit_ = 0;
    std::vector<double> lambda_;
    std::vector<double> psi_;

    // behind a pointer so the table stays movable
    struct Cache {
        std::mutex mu;
        std::map<std::pair<std::uint32_t, std::uint32_t>,
                 std::shared_ptr<const std::vector<double>>>
            entries;
    };
    std::unique_ptr<Cache> cache_ = std::make_unique<Cache>();
};

// memory_budget caps limit (element count, not bytes). Throws resource_error
// when limit exceeds it, domain_error when limit < 2.
SieveTable build_sieve(std::uint64_t limit, std::uint64_t memory_budget = 100000000ull);

// Fixed-order compensated (Neumaier) summation helper used wherever sums must
// be reproducible bit-for-bit.
class NeumaierSum {
public:
    void add(double x) {
        double t = s_ + x;
        if (std::abs(s_) >= std::abs(x))
            c_ += (s_ - t) + x;
        else
            c_ += (x - t) + s_;
        s_ = t;
    }
    double value() const { return s_ + c_; }

private:
    double s_ = 0.0;
    double c_ = 0.0;
};

} // namespace gbx
