#pragma once

#include <cstdint>
#include <vector>

#include "dignet/net.hpp"

namespace dignet {

/// Brute-force validators. These are the ground truth for every acceptance
/// test; they share nothing with the enumerator/window implementations beyond
/// the group tables. Desk-scale bounds only.

struct OracleLimits {
    std::uint64_t dual_candidates = std::uint64_t(1) << 24;  // candidates scanned by dual_enumerate
    std::uint64_t cell_pairs = std::uint64_t(1) << 20;       // point x composition pairs for intervals
};

struct DualSet {
    std::vector<DigitMatrix> elements;
    bool complete = false;
    int s = 0;
    int n = 0;
};

/// All K with pairing exponent 0 against every generator (bi-additivity
/// reduces membership to the generators; the only shortcut an oracle takes).
DualSet dual_enumerate(const DigitalNet& net, const OracleLimits& limits = {});

/// Minimum NRT weight over the nonzero dual elements; ns+1 for a trivial dual.
long long min_nrt(const DualSet& dual);

/// NRT weight of one matrix: per row, the index of the last nonzero digit.
long long nrt_weight(const DigitMatrix& k);

/// Exact t by elementary-interval counting on a multiset of b^m digit
/// matrices: smallest t such that every digit-prefix cell at every
/// composition d_1+..+d_s = m-t holds exactly b^t points (with multiplicity).
int t_by_intervals(const std::vector<DigitMatrix>& points, std::uint32_t b, int m,
                   const OracleLimits& limits = {});

/// Generalized uniformity: true iff every prefix projection with
/// b^{d_1+...+d_s} <= M/T is uniform over its full codomain.
bool is_tms_uniform(const std::vector<DigitMatrix>& points, std::uint64_t T, std::uint64_t M,
                    std::uint32_t b);

}  // namespace dignet
