#pragma once

#include <vector>

#include "dignet/net.hpp"
#include "dignet/poly.hpp"

namespace dignet {

struct TValueReport {
    int t = 0;
    int deg_q = -1;            // degree of the window polynomial Q (-1 when Q = 0)
    long long window_offset = 0;
    std::vector<BigInt> window;  // the m+1 inspected scaled coefficients, ascending degree
};

/// t through the inverse identity: only the top m+1 coefficients of
///   Q(z) = -(base)^s + b^{sm-m} * sum_l prod_i (z^{m+1-nu_i} - z^{m+1})
/// are materialized (O(s*m) big-integer additions per point), and
/// t = (1-s)(m+1) + deg(Q). Requires n = m.
TValueReport t_value_alg2(const DigitalNet& net, int threads = 1);

}  // namespace dignet
