#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <vector>

#include "gbx/arith.hpp"

namespace gbx {

namespace detail {
struct GroupTables;
}

// Character value as an exact root of unity e(num/den), or zero off the units.
// num/den is reduced; den divides the group exponent.
struct UnitValue {
    bool zero = true;
    std::uint64_t num = 0;
    std::uint64_t den = 1;

    std::complex<double> to_complex() const;
    bool operator==(const UnitValue&) const = default;
};

// A Dirichlet character mod q, held as exponents against fixed generators of
// the unit group split by the prime powers of q (the 2-part contributes the
// {-1, 5} pair for 8 | q). Values are exponent arithmetic, so multiplicativity
// and orthogonality hold exactly.
class DirichletCharacter {
public:
    std::uint64_t modulus() const;
    std::uint64_t conductor() const { return conductor_; }
    std::uint64_t order() const { return order_; }
    int parity() const { return parity_; }  // the value at -1
    bool is_principal() const { return principal_; }
    bool is_real() const { return order_ <= 2; }
    const std::vector<std::uint64_t>& exponents() const { return exps_; }

    UnitValue value_exact(std::uint64_t n) const;
    std::complex<double> operator()(std::uint64_t n) const;

    // One period of values: entry r is the value at any n == r (mod q).
    std::vector<std::complex<double>> period_values() const;

    DirichletCharacter conjugate() const;

private:
    friend class CharacterGroup;
    DirichletCharacter(std::shared_ptr<const detail::GroupTables> t,
                       std::vector<std::uint64_t> exps);

    std::shared_ptr<const detail::GroupTables> tables_;
    std::vector<std::uint64_t> exps_;
    std::uint64_t conductor_ = 1;
    std::uint64_t order_ = 1;
    int parity_ = 1;
    bool principal_ = true;
};

// All phi(q) characters mod q in a fixed mixed-radix order over the generator
// exponents; index 0 is principal. Indexing is stable across runs and is what
// the command-line --chi-index refers to.
class CharacterGroup {
public:
    explicit CharacterGroup(std::uint64_t q);

    std::uint64_t modulus() const { return q_; }
    std::size_t size() const { return chars_.size(); }
    const std::vector<DirichletCharacter>& characters() const { return chars_; }
    const DirichletCharacter& at(std::size_t index) const;
    std::size_t principal_index() const { return 0; }
    std::size_t index_of(const DirichletCharacter& chi) const;
    std::size_t conjugate_index(std::size_t index) const;

private:
    std::uint64_t q_;
    std::shared_ptr<const detail::GroupTables> tables_;
    std::vector<DirichletCharacter> chars_;
};

CharacterGroup character_group(std::uint64_t q);

// Value at c of the primitive character inducing chi. Nonzero whenever c is
// coprime to the conductor, even if (c, q) > 1; evaluated by shifting c into
// a residue coprime to q congruent to c mod the conductor.
UnitValue primitive_value(const DirichletCharacter& chi, std::uint64_t c);

} // namespace gbx
