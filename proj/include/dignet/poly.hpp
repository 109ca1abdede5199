#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "dignet/bigint.hpp"

namespace dignet {

/// Dense univariate polynomial with arbitrary-precision integer coefficients.
/// Trailing zeros are allowed in storage; degree() reports the highest nonzero
/// index (-1 for the zero polynomial).
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) {}

    static IntPoly one() { return IntPoly({BigInt(1)}); }
    static IntPoly monomial(BigInt coeff, int deg);

    int degree() const;
    bool is_zero() const { return degree() < 0; }
    const BigInt& coeff(int a) const;
    /// Mutable coefficient access; grows storage as needed.
    BigInt& at(int a);
    std::size_t stored_size() const { return c_.size(); }
    const std::vector<BigInt>& coeffs() const { return c_; }

    /// Drop every coefficient of degree > cap.
    void truncate(int cap);

    IntPoly& operator+=(const IntPoly& o);
    IntPoly& operator-=(const IntPoly& o);
    IntPoly& operator*=(const BigInt& k);
    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }

    /// Equality of the represented polynomials (trailing zeros ignored).
    friend bool operator==(const IntPoly& a, const IntPoly& b);

    BigInt eval(const BigInt& x) const;

private:
    std::vector<BigInt> c_;
};

/// Exact coefficients of p*q up to degree cap (schoolbook).
IntPoly trunc_mul(const IntPoly& p, const IntPoly& q, int cap);
IntPoly mul(const IntPoly& p, const IntPoly& q);
IntPoly pow_trunc(const IntPoly& p, unsigned e, int cap);

/// Exact division by (1 - c z); throws errc::internal if the division leaves a remainder.
IntPoly div_one_minus_cz_exact(const IntPoly& p, const BigInt& c);

/// Division by a monic divisor; returns {quotient, remainder}.
std::pair<IntPoly, IntPoly> divmod_monic(const IntPoly& p, const IntPoly& d);

/// Per-row factor of the dual weight-enumerator average, for a row whose first
/// nonzero digit sits at index h (h = 0 meaning the all-zero row):
///   h = 0:  1 + sum_{a=1}^{n} (b^a - b^{a-1}) z^a
///   h > 0:  1 + sum_{a=1}^{h-1} (b^a - b^{a-1}) z^a - b^{h-1} z^h
IntPoly row_factor(int h, int n, std::uint32_t b);

/// Same family through the closed forms
///   h > 0:  (1-z)(1-(bz)^h)/(1-bz)
///   h = 0:  (1-z)(1-(bz)^{n+1})/(1-bz) + b^n z^{n+1}
/// computed by exact division; must agree with row_factor.
IntPoly row_factor_closed(int h, int n, std::uint32_t b);

/// ((1-z)/(1-bz))^s truncated at degree cap: the geometric prefactor that
/// turns per-point binomial products into the truncated enumerator.
IntPoly geometric_factor(std::uint32_t b, int cap, int s);

/// A contiguous slice of a polynomial: coefficients of degrees
/// [offset, offset + coeffs.size()).
struct PolyWindow {
    long long offset = 0;
    std::vector<BigInt> coeffs;

    const BigInt& at_degree(long long a) const;
};

/// The top m+2 coefficients (degrees (s-1)(m+1) .. s(m+1)) of
/// prod_i (z^{mu_i} - z^{m+1}), each mu_i in {0..m+1}, computed through the
/// reciprocal product prod_i (y^{m+1-mu_i} - 1) mod y^{m+2} in O(s*m) additions.
PolyWindow top_window_product(const std::vector<int>& mu, int m);

/// Sparse multivariate polynomial in variables z_1..z_s over the integers.
/// No zero coefficients are stored; ordered keys keep iteration deterministic.
class MultiPoly {
public:
    using Key = std::vector<std::uint16_t>;  // exponent of each variable

    MultiPoly() = default;
    explicit MultiPoly(int nvars) : nvars_(nvars) {}

    int nvars() const { return nvars_; }
    const std::map<Key, BigInt>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    void add_term(const Key& key, const BigInt& coeff);
    static int total_degree(const Key& key);

private:
    int nvars_ = 0;
    std::map<Key, BigInt> terms_;
};

}  // namespace dignet
