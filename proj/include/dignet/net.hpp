#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "dignet/group.hpp"

namespace dignet {

/// One net point (or character index) as an s x n matrix of group-element
/// symbols. Row i holds the digits of coordinate i, most significant first.
struct DigitMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::uint16_t> sym;  // row-major

    DigitMatrix() = default;
    DigitMatrix(int r, int c) : rows(r), cols(c), sym(std::size_t(r) * c, 0) {}

    std::uint16_t& at(int i, int j) { return sym[std::size_t(i) * cols + j]; }
    std::uint16_t at(int i, int j) const { return sym[std::size_t(i) * cols + j]; }
    const std::uint16_t* row(int i) const { return sym.data() + std::size_t(i) * cols; }

    bool is_zero() const {
        for (auto v : sym)
            if (v) return false;
        return true;
    }
    friend bool operator==(const DigitMatrix&, const DigitMatrix&) = default;
    friend auto operator<=>(const DigitMatrix&, const DigitMatrix&) = default;
};

/// Entrywise sum of the pairing exponents, mod e. The pairing value of (K, X)
/// is zeta_e to this exponent; exponent 0 means pairing value 1.
std::uint32_t bullet_exponent(const DigitMatrix& K, const DigitMatrix& X, const GroupSpec& spec);

DigitMatrix matrix_add(const DigitMatrix& a, const DigitMatrix& b, const GroupSpec& spec);

/// Index (1-based) of the first nonzero digit of a row, 0 if the row is zero.
/// Pure digit scan; never a floating-point logarithm.
int mu_star(const std::uint16_t* row, int n);

/// Per-row statistics of one point relative to a truncation depth cap:
///   mu_star[i] in {0..n}; nu[i] = mu_star[i] clamped into {1..cap+1}
/// (zero rows and rows whose first nonzero digit is past cap both read cap+1,
/// which leaves factors of degree > cap invisible, as required).
struct MuProfile {
    std::vector<int> mu_star;
    std::vector<int> nu;
};

MuProfile mu_profile(const DigitMatrix& x, int cap);

/// A digital net: a GroupSpec, dimensions (s rows, n digits), m generators
/// X_1..X_m (the images of the unit index digits), enumerated as the multiset
/// { X_l = sum_r l_r-fold-sum(X_{r+1}) : 0 <= l < b^m } with l_r the base-b
/// digits of l. Values are immutable after construction.
class DigitalNet {
public:
    enum class Provenance { matrices, explicit_generators };

    DigitalNet(GroupSpec spec, int s, int m, int n, std::vector<DigitMatrix> generators,
               Provenance provenance);

    const GroupSpec& spec() const { return spec_; }
    std::uint32_t base() const { return spec_.order(); }
    int s() const { return s_; }
    int m() const { return m_; }
    int n() const { return n_; }
    Provenance provenance() const { return provenance_; }
    const std::vector<DigitMatrix>& generators() const { return generators_; }

    std::uint64_t point_count() const;  // b^m

    /// X_l computed directly (O(m) matrix additions).
    DigitMatrix point_at(std::uint64_t l) const;

private:
    GroupSpec spec_;
    int s_, m_, n_;
    std::vector<DigitMatrix> generators_;
    Provenance provenance_;
};

/// Build a net from s generating matrices (n rows x m columns, entries are
/// group-element symbols in {0..b-1}); generator X_i collects the i-th column
/// of every matrix: row j of X_i is the i-th column of C_j.
DigitalNet net_from_matrices(GroupSpec spec, const std::vector<std::vector<std::vector<std::uint16_t>>>& matrices,
                             int m, int n);

DigitalNet net_from_generators(GroupSpec spec, std::vector<DigitMatrix> generators, int n);

/// Restrict to the coordinates in u (1-based, nonempty, sorted unique).
DigitalNet project(const DigitalNet& net, const std::vector<int>& u);

/// Stream the points X_l for l in [lo, hi), in index order, reusing one
/// matrix buffer. Ranges are independent, so chunked parallel traversal is
/// safe and (all sums being exact integers) bit-identical to sequential.
void for_each_point(const DigitalNet& net, std::uint64_t lo, std::uint64_t hi,
                    const std::function<void(std::uint64_t, const DigitMatrix&)>& fn);

std::vector<DigitMatrix> all_points(const DigitalNet& net);

}  // namespace dignet
