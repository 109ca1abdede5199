#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dignet/net.hpp"
#include "dignet/poly.hpp"

namespace dignet {

/// Weight enumerator of the dual of a net, stored scaled by b^m so that every
/// coefficient is an exact integer (scaled.coeff(a) = b^m * N_a). Nonzero and
/// equality tests always run on the scaled integers; the scale is never
/// divided out inside the library.
struct WeightEnumerator {
    IntPoly scaled;
    BigInt scale;      // b^m
    int valid_to = 0;  // highest degree a at which N_a is exact
    bool full = false;
    int m = 0;

    /// N_a as an exact integer; throws errc::internal if b^m does not divide
    /// the scaled coefficient (possible only for raw point multisets).
    BigInt unscaled(int a) const;
};

/// Coefficients N_a for a <= ell via the geometric-prefactor route:
///   geometric_factor(b,ell,s) * sum_l prod_i (1 - (bz)^{nu_i}) mod z^{ell+1},
/// nu from mu_profile(.., ell). Exact for 1 <= a <= ell.
WeightEnumerator truncated_wep(const DigitalNet& net, int ell, int threads = 1);

/// All coefficients N_0..N_{ns}, exact, via per-point row factors bucketed by
/// the number of zero rows (binomial products in Z = bz, one exact division
/// by (1-Z) per nonzero row, substitution at the end).
WeightEnumerator full_wep(const DigitalNet& net, int threads = 1);

/// t = m+1 - min{a >= 1 : N_a != 0}, the min defaulting to valid_to + 1
/// (ns + 1 for full enumerators). Requires w.m == m.
int t_from_wep(const WeightEnumerator& w, int m);

/// Same computation as truncated_wep(ell = m) over a raw point multiset;
/// a lower bound on t for arbitrary sets, exact for subgroup multisets.
struct LowerBoundReport {
    int bound = 0;
    WeightEnumerator wep;
};
LowerBoundReport general_lower_bound(const std::vector<DigitMatrix>& points, const GroupSpec& spec,
                                     int m, int threads = 1);

/// Scaled multivariate enumerator in z_1..z_s, truncated at total degree cap:
/// the coefficient of prod z_i^{a_i} is b^m * #{K in dual : mu(row_i(K)) = a_i for all i}.
struct MultivariateEnumerator {
    MultiPoly poly;
    BigInt scale;
    int cap = 0;
    int s = 0;
    int m = 0;
    int n = 0;
};

struct GwLimits {
    int dim_cap = 12;
    std::size_t term_guard = 1u << 20;
};

MultivariateEnumerator multivariate_wep(const DigitalNet& net, int cap = -1, GwLimits limits = {});

/// Substitute z_i <- z for i in u, z_i <- 0 otherwise: the truncated weight
/// enumerator of the projection's dual.
WeightEnumerator projection_wep(const MultivariateEnumerator& gw, const std::vector<int>& u);

/// Worst projection onto at most s_prime coordinates, read off the
/// multivariate enumerator: d' = min total degree whose minimum monomial
/// support size c_d is <= s_prime; t' = m+1-d'. nullopt if no qualifying
/// degree exists within gw.cap.
struct WorstProjection {
    std::vector<int> support;  // 1-based coordinates
    int t = 0;
    int degree = 0;  // d'
};
std::optional<WorstProjection> worst_projection(const MultivariateEnumerator& gw, int s_prime);

/// Complete search: raises the cap to m+1 (which is always decisive) and
/// falls back to the trivial-dual conclusion when no monomial qualifies.
WorstProjection worst_projection_search(const DigitalNet& net, int s_prime, GwLimits limits = {});

/// Running sum of per-point binomial products at truncation ell, composable
/// across index ranges. finalize(m_r) applies the geometric prefactor and
/// reads off the enumerator of the first b^{m_r} points.
class Accumulator {
public:
    Accumulator(const DigitalNet& net, int ell);

    void add_range(std::uint64_t lo, std::uint64_t hi, int threads = 1);
    void merge(const Accumulator& other);
    WeightEnumerator finalize(int m_r) const;

    std::uint64_t points_seen() const { return seen_; }
    int ell() const { return ell_; }
    const DigitalNet& net() const { return *net_; }

private:
    const DigitalNet* net_;
    int ell_;
    IntPoly partial_;
    std::uint64_t seen_ = 0;
};

}  // namespace dignet
