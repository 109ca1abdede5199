#pragma once

#include <cstdint>
#include <vector>

#include "dignet/bigint.hpp"
#include "dignet/poly_fwd.hpp"

namespace dignet {

/// An element of a finite abelian group, as a tuple of residues
/// (one per cyclic factor, each reduced modulo its factor order).
struct GroupElement {
    std::vector<std::uint32_t> residues;

    bool is_zero() const {
        for (auto r : residues)
            if (r != 0) return false;
        return true;
    }
    friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

/// A finite abelian group given as a product of cyclic factors Z_{q_1} x ... x Z_{q_r}.
///
/// Elements are encoded as symbols in {0..b-1} through the fixed mixed-radix
/// bijection (little-endian in factor order, 0 <-> zero element). The same
/// encoding indexes the character group: the character with index k sends x to
/// zeta_e^{pair(k,x)} where e is the group exponent. All character values are
/// handled as exponents of zeta_e; nothing here ever touches floating point.
class GroupSpec {
public:
    explicit GroupSpec(std::vector<std::uint32_t> factors);
    static GroupSpec cyclic(std::uint32_t order);

    std::uint32_t order() const { return b_; }     // b = prod q_i
    std::uint32_t exponent() const { return e_; }  // e = lcm q_i
    const std::vector<std::uint32_t>& factors() const { return factors_; }

    /// Mixed-radix decode/encode between symbols {0..b-1} and residue tuples.
    GroupElement element(std::uint32_t symbol) const;
    std::uint32_t symbol(const GroupElement& g) const;

    /// Group law and pairing on symbol codes (table lookups).
    std::uint16_t add(std::uint16_t a, std::uint16_t b) const { return add_[std::size_t(a) * b_ + b]; }
    std::uint16_t neg(std::uint16_t a) const { return neg_[a]; }
    /// j with character_k(x) = zeta_e^j.
    std::uint32_t pair(std::uint16_t k, std::uint16_t x) const { return pair_[std::size_t(k) * b_ + x]; }

    friend bool operator==(const GroupSpec& a, const GroupSpec& b) { return a.factors_ == b.factors_; }

private:
    std::vector<std::uint32_t> factors_;
    std::uint32_t b_ = 1;
    std::uint32_t e_ = 1;
    std::vector<std::uint16_t> add_;
    std::vector<std::uint16_t> neg_;
    std::vector<std::uint32_t> pair_;
};

/// Componentwise sum modulo the factor orders.
GroupElement group_add(const GroupElement& g, const GroupElement& h, const GroupSpec& spec);

/// Exponent j such that the character indexed by k evaluates at x to zeta_e^j,
/// with the fixed identification j = sum_i k_i * x_i * (e/q_i) mod e.
std::uint32_t pair_exponent(const GroupElement& k, const GroupElement& x, const GroupSpec& spec);

/// Exact tally of a sum of e-th roots of unity: counts[j] summands equal to zeta_e^j.
struct ExponentTally {
    explicit ExponentTally(std::uint32_t e) : counts(e) {}
    std::vector<BigInt> counts;

    void add(std::uint32_t exponent, const BigInt& k = 1) { counts.at(exponent) += k; }
    BigInt total() const;
};

/// The e-th cyclotomic polynomial (exact integer coefficients, cached).
const IntPoly& cyclotomic(std::uint32_t e);

/// Decides sum_j counts[j] * zeta_e^j == 0 exactly, by reducing the integer
/// polynomial sum_j counts[j] Y^j modulo Phi_e(Y). Never goes through floats.
bool char_sum_is_zero(const ExponentTally& tally, std::uint32_t e);

}  // namespace dignet
