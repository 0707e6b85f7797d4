#include "gbx/characters.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "gbx/errors.hpp"

namespace gbx {

namespace detail {

// One cyclic coordinate of (Z/q)*. For 8 | q the 2-part occupies two
// coordinates with the same comp_mod: <-1> of order 2, then <5>.
struct GroupComponent {
    std::uint64_t prime;
    int exp;
    std::uint64_t comp_mod;
    std::uint64_t order;
    std::uint64_t generator;
    bool minus_one_part = false;
    std::vector<std::uint32_t> dlog; // residue -> exponent; 0xFFFFFFFF off units
};

struct GroupTables {
    std::uint64_t q = 1;
    std::uint64_t phi = 1;
    std::uint64_t exponent = 1; // lcm of coordinate orders
    std::vector<GroupComponent> comps;
};

namespace {

constexpr std::uint32_t kNoLog = 0xFFFFFFFFu;

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) {
    return a / gcd_u64(a, b) * b;
}

std::uint64_t primitive_root_mod_pe(std::uint64_t p, std::uint64_t pe) {
    auto pm1_factors = factorize(p - 1).factors;
    std::uint64_t g = 2;
    for (;; ++g) {
        bool ok = true;
        for (auto [r, e] : pm1_factors) {
            std::uint64_t x = 1, base = g % p, k = (p - 1) / r;
            while (k) {
                if (k & 1) x = x * base % p;
                base = base * base % p;
                k >>= 1;
            }
            if (x == 1) { ok = false; break; }
        }
        if (ok) break;
    }
    if (pe > p) {
        // g must stay primitive mod p^2 to generate every (Z/p^e)*
        std::uint64_t x = 1, base = g, k = p - 1, p2 = p * p;
        while (k) {
            if (k & 1) x = std::uint64_t((unsigned __int128)(x)*base % p2);
            base = std::uint64_t((unsigned __int128)(base)*base % p2);
            k >>= 1;
        }
        if (x == 1) g += p;
    }
    return g;
}

std::shared_ptr<const GroupTables> build_tables(std::uint64_t q) {
    auto t = std::make_shared<GroupTables>();
    t->q = q;
    for (auto [p, e] : factorize(q).factors) {
        std::uint64_t pe = 1;
        for (int i = 0; i < e; ++i) pe *= p;
        if (p == 2) {
            if (e == 1) continue; // (Z/2)* trivial
            if (e == 2) {
                GroupComponent c{p, e, pe, 2, 3, true, std::vector<std::uint32_t>(pe, kNoLog)};
                c.dlog[1] = 0;
                c.dlog[3] = 1;
                t->comps.push_back(std::move(c));
            } else {
                GroupComponent a{p, e, pe, 2, pe - 1, true, std::vector<std::uint32_t>(pe, kNoLog)};
                GroupComponent b{p, e, pe, pe / 4, 5, false, std::vector<std::uint32_t>(pe, kNoLog)};
                std::uint64_t x = 1;
                for (std::uint64_t k = 0; k < b.order; ++k) {
                    a.dlog[x] = 0;
                    a.dlog[pe - x] = 1;
                    b.dlog[x] = std::uint32_t(k);
                    b.dlog[pe - x] = std::uint32_t(k);
                    x = x * 5 % pe;
                }
                t->comps.push_back(std::move(a));
                t->comps.push_back(std::move(b));
            }
        } else {
            std::uint64_t m = pe / p * (p - 1);
            GroupComponent c{p, e, pe, m, primitive_root_mod_pe(p, pe), false,
                             std::vector<std::uint32_t>(pe, kNoLog)};
            std::uint64_t x = 1;
            for (std::uint64_t k = 0; k < m; ++k) {
                c.dlog[x] = std::uint32_t(k);
                x = std::uint64_t((unsigned __int128)(x)*c.generator % pe);
            }
            t->comps.push_back(std::move(c));
        }
    }
    for (const auto& c : t->comps) {
        t->phi *= c.order;
        t->exponent = lcm_u64(t->exponent, c.order);
    }
    return t;
}

// Conductor of the coordinate-exponent vector: product over coordinates of the
// smallest prime-power modulus whose unit group supports that coordinate value.
std::uint64_t conductor_of(const GroupTables& t, const std::vector<std::uint64_t>& exps) {
    std::uint64_t f = 1;
    for (std::size_t i = 0; i < t.comps.size(); ++i) {
        const auto& c = t.comps[i];
        std::uint64_t a = exps[i];
        if (c.prime == 2) {
            if (c.minus_one_part) {
                // contributes 4 only when the <5>-coordinate (if any) is trivial
                bool five_trivial = true;
                if (i + 1 < t.comps.size() && !t.comps[i + 1].minus_one_part &&
                    t.comps[i + 1].prime == 2)
                    five_trivial = exps[i + 1] == 0;
                if (a != 0 && five_trivial) f *= 4;
            } else if (a != 0) {
                std::uint64_t s = 0, b = a;
                while ((b & 1) == 0) { b >>= 1; ++s; }
                std::uint64_t f2 = c.comp_mod;
                for (std::uint64_t k = 0; k < s; ++k) f2 /= 2;
                f *= f2;
            }
        } else if (a != 0) {
            std::uint64_t o = c.order / gcd_u64(a, c.order);
            std::uint64_t f2 = c.prime;
            while (o % c.prime == 0) { f2 *= c.prime; o /= c.prime; }
            f *= f2;
        }
    }
    return f;
}

} // namespace
} // namespace detail

std::complex<double> UnitValue::to_complex() const {
    if (zero) return {0.0, 0.0};
    if (2 * num == den) return {-1.0, 0.0};
    if (4 * num == den) return {0.0, 1.0};
    if (4 * num == 3 * den) return {0.0, -1.0};
    double t = 2.0 * M_PI * double(num) / double(den);
    return {std::cos(t), std::sin(t)};
}

DirichletCharacter::DirichletCharacter(std::shared_ptr<const detail::GroupTables> t,
                                       std::vector<std::uint64_t> exps)
    : tables_(std::move(t)), exps_(std::move(exps)) {
    const auto& comps = tables_->comps;
    for (std::size_t i = 0; i < comps.size(); ++i) {
        if (exps_[i] != 0) principal_ = false;
        order_ = detail::lcm_u64(order_, comps[i].order / gcd_u64(exps_[i], comps[i].order));
    }
    conductor_ = detail::conductor_of(*tables_, exps_);
    if (tables_->q >= 3) {
        UnitValue v = value_exact(tables_->q - 1);
        parity_ = (2 * v.num == v.den) ? -1 : 1;
    }
}

std::uint64_t DirichletCharacter::modulus() const { return tables_->q; }

UnitValue DirichletCharacter::value_exact(std::uint64_t n) const {
    std::uint64_t q = tables_->q;
    if (q == 1) return {false, 0, 1};
    n %= q;
    if (gcd_u64(n, q) != 1) return {};
    std::uint64_t L = tables_->exponent, acc = 0;
    for (std::size_t i = 0; i < tables_->comps.size(); ++i) {
        const auto& c = tables_->comps[i];
        std::uint64_t k = c.dlog[n % c.comp_mod];
        acc = (acc + exps_[i] % c.order * k % L * (L / c.order)) % L;
    }
    std::uint64_t g = gcd_u64(acc, L);
    if (acc == 0) return {false, 0, 1};
    return {false, acc / g, L / g};
}

std::complex<double> DirichletCharacter::operator()(std::uint64_t n) const {
    return value_exact(n).to_complex();
}

std::vector<std::complex<double>> DirichletCharacter::period_values() const {
    std::uint64_t q = tables_->q;
    std::vector<std::complex<double>> out(q);
    for (std::uint64_t r = 0; r < q; ++r) out[r] = value_exact(r == 0 ? q : r).to_complex();
    return out;
}

DirichletCharacter DirichletCharacter::conjugate() const {
    std::vector<std::uint64_t> e(exps_.size());
    for (std::size_t i = 0; i < exps_.size(); ++i)
        e[i] = exps_[i] == 0 ? 0 : tables_->comps[i].order - exps_[i];
    return DirichletCharacter(tables_, std::move(e));
}

CharacterGroup::CharacterGroup(std::uint64_t q) : q_(q) {
    if (q == 0) throw domain_error("character_group: modulus must be positive");
    if (q > 1000000) throw domain_error("character_group: modulus above 1e6 not supported");
    tables_ = detail::build_tables(q);
    const auto& comps = tables_->comps;
    std::vector<std::uint64_t> exps(comps.size(), 0);
    chars_.reserve(tables_->phi);
    for (std::uint64_t idx = 0; idx < tables_->phi; ++idx) {
        chars_.push_back(DirichletCharacter(tables_, exps));
        // mixed-radix increment, last coordinate fastest
        for (std::size_t i = comps.size(); i-- > 0;) {
            if (++exps[i] < comps[i].order) break;
            exps[i] = 0;
        }
    }
}

const DirichletCharacter& CharacterGroup::at(std::size_t index) const {
    if (index >= chars_.size()) throw domain_error("character index out of range");
    return chars_[index];
}

std::size_t CharacterGroup::index_of(const DirichletCharacter& chi) const {
    if (chi.modulus() != q_) throw domain_error("character from a different modulus");
    std::size_t idx = 0;
    for (std::size_t i = 0; i < tables_->comps.size(); ++i)
        idx = idx * tables_->comps[i].order + chi.exponents()[i];
    return idx;
}

std::size_t CharacterGroup::conjugate_index(std::size_t index) const {
    return index_of(at(index).conjugate());
}

CharacterGroup character_group(std::uint64_t q) { return CharacterGroup(q); }

UnitValue primitive_value(const DirichletCharacter& chi, std::uint64_t c) {
    std::uint64_t q = chi.modulus(), f = chi.conductor();
    if (f == 1) return {false, 0, 1};
    if (gcd_u64(c % f, f) != 1) return {}; // gcd(0, f) = f, so c == 0 mod f lands here
    // shift c by multiples of the conductor until coprime to q; the shifted
    // residue sees the same primitive-character value
    std::uint64_t cc = c % q;
    for (std::uint64_t t = 0; t <= q / f + 1; ++t) {
        std::uint64_t cand = (cc + t * f) % q;
        if (cand != 0 && gcd_u64(cand, q) == 1) return chi.value_exact(cand);
    }
    throw domain_error("primitive_value: no coprime shift found"); // unreachable
}

} // namespace gbx
