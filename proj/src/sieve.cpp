#include "gbx/sieve.hpp"

#include <cmath>

#include "gbx/arith.hpp"
#include "gbx/errors.hpp"

namespace gbx {

SieveTable build_sieve(std::uint64_t limit, std::uint64_t memory_budget) {
    if (limit < 2) throw domain_error("build_sieve: limit must be >= 2");
    if (limit > memory_budget)
        throw resource_error("build_sieve: limit " + std::to_string(limit) +
                             " exceeds memory budget " + std::to_string(memory_budget) +
                             " elements");
    SieveTable t;
    t.limit_ = limit;
    t.lambda_.assign(limit + 1, 0.0);
    for (std::uint32_t p : primes_up_to(std::uint32_t(std::min<std::uint64_t>(limit, 0xffffffffull)))) {
        double lp = std::log(double(p));
        for (std::uint64_t pk = p;; pk *= p) {
            t.lambda_[pk] = lp;
            if (pk > limit / p) break;
        }
    }
    t.psi_.assign(limit + 1, 0.0);
    NeumaierSum acc;
    for (std::uint64_t n = 0; n <= limit; ++n) {
        acc.add(t.lambda_[n]);
        t.psi_[n] = acc.value();
    }
    return t;
}

double SieveTable::lambda_at(std::uint64_t n) const {
    if (n > limit_) throw coverage_error("lambda_at: n beyond sieve limit");
    return lambda_[n];
}

double SieveTable::psi_at(double x) const {
    if (!(x >= 0)) throw domain_error("psi_at: x must be >= 0");
    if (x > double(limit_)) throw coverage_error("psi_at: x beyond sieve limit");
    return psi_[std::uint64_t(std::floor(x))];
}

std::shared_ptr<const std::vector<double>> SieveTable::class_prefix(std::uint32_t q, std::uint32_t r,
                                                                    std::uint64_t len) const {
    if (q == 0) throw domain_error("class_prefix: q must be >= 1");
    if (r >= q) throw domain_error("class_prefix: residue must satisfy r < q");
    if (len > limit_) throw coverage_error("class_prefix: length beyond sieve limit");
    auto key = std::make_pair(q, r);
    {
        std::lock_guard<std::mutex> lk(cache_->mu);
        auto it = cache_->entries.find(key);
        if (it != cache_->entries.end() && it->second->size() >= len + 1) return it->second;
    }
    auto vec = std::make_shared<std::vector<double>>(len + 1, 0.0);
    NeumaierSum acc;
    for (std::uint64_t n = 0; n <= len; ++n) {
        if (n % q == r) acc.add(lambda_[n]);
        (*vec)[n] = acc.value();
    }
    std::lock_guard<std::mutex> lk(cache_->mu);
    auto& slot = cache_->entries[key];
    if (!slot || slot->size() < vec->size()) slot = std::move(vec);
    return slot;
}

} // namespace gbx
