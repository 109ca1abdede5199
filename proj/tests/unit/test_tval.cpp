#include <doctest.h>

#include <random>

#include "dignet/error.hpp"
#include "dignet/oracle.hpp"
#include "dignet/poly.hpp"
#include "dignet/tval.hpp"
#include "dignet/wep.hpp"

using namespace dignet;

namespace {

DigitalNet van_der_corput_pair() {
    return net_from_matrices(GroupSpec::cyclic(2), {{{1, 0}, {0, 1}}, {{0, 1}, {1, 0}}}, 2, 2);
}

DigitalNet repeated_identity_m1() {
    return net_from_matrices(GroupSpec::cyclic(2), {{{1}}, {{1}}}, 1, 1);
}

DigitalNet identity_net(std::uint32_t b, int s, int m) {
    std::vector<std::vector<std::vector<std::uint16_t>>> mats;
    for (int j = 0; j < s; ++j) {
        std::vector<std::vector<std::uint16_t>> c(std::size_t(m), std::vector<std::uint16_t>(std::size_t(m), 0));
        for (int i = 0; i < m; ++i) c[std::size_t(i)][std::size_t(i)] = 1;
        mats.push_back(std::move(c));
    }
    return net_from_matrices(GroupSpec::cyclic(b), mats, m, m);
}

DigitalNet random_net(std::mt19937& rng, std::uint32_t b, int s, int m) {
    std::vector<std::vector<std::vector<std::uint16_t>>> mats;
    for (int j = 0; j < s; ++j) {
        std::vector<std::vector<std::uint16_t>> c;
        for (int r = 0; r < m; ++r) {
            std::vector<std::uint16_t> row;
            for (int k = 0; k < m; ++k) row.push_back(std::uint16_t(rng() % b));
            c.push_back(std::move(row));
        }
        mats.push_back(std::move(c));
    }
    return net_from_matrices(GroupSpec::cyclic(b), mats, m, m);
}

/// Oracle-side window polynomial: sum over the nonzero dual of the products
/// of depth-m row factors (degree m+1-h each), computed with plain full
/// polynomial arithmetic.
IntPoly dual_window_poly(const DigitalNet& net) {
    auto dual = dual_enumerate(net);
    const int m = net.m();
    IntPoly q;
    for (const auto& k : dual.elements) {
        if (k.is_zero()) continue;
        IntPoly term = IntPoly::one();
        for (int i = 0; i < k.rows; ++i) {
            int mu = 0;
            for (int j = k.cols - 1; j >= 0; --j)
                if (k.at(i, j) != 0) {
                    mu = j + 1;
                    break;
                }
            // depth-m factor: 1 + sum_{a=1}^{m-mu}(b^a - b^{a-1}) z^a - b^{m-mu} z^{m+1-mu}
            IntPoly f = row_factor(m + 1 - mu, m + 1, net.base());
            term = mul(term, f);
        }
        q += term;
    }
    return q;
}

}  // namespace

TEST_CASE("degree method on the repeated-identity worked example") {
    auto rep = t_value_alg2(repeated_identity_m1());
    CHECK(rep.t == 0);
    CHECK(rep.deg_q == 2);
    // Q = 1 - 2z + z^2; the inspected window is degrees 2..3 -> offset 2
    CHECK(rep.window_offset == 2);
    REQUIRE(rep.window.size() == 2);
    CHECK(rep.window[0] == 1);   // degree 2 coefficient
    CHECK(rep.window[1] == 0);   // degree 3 cancels
}

TEST_CASE("degree method on the van der Corput pair") {
    auto rep = t_value_alg2(van_der_corput_pair());
    CHECK(rep.t == 0);
    CHECK(rep.deg_q == 2 * 3 - 3);  // s(m+1) - minNRT = 6 - 3
}

TEST_CASE("degree method needs n = m") {
    auto net = net_from_matrices(GroupSpec::cyclic(2), {{{1, 0}, {0, 1}, {0, 0}}}, 2, 3);
    CHECK_THROWS_AS(t_value_alg2(net), error);
}

TEST_CASE("trivial dual for s = 1 reads t = 0 from an empty window") {
    auto rep = t_value_alg2(identity_net(2, 1, 4));
    CHECK(rep.t == 0);
    CHECK(rep.deg_q == -1);
    for (const auto& c : rep.window) CHECK(c == 0);
}

TEST_CASE("degree identity and window coefficients against the dual oracle") {
    std::mt19937 rng(112233);
    for (int trial = 0; trial < 25; ++trial) {
        const std::uint32_t b = (rng() % 2) ? 2 : 3;
        const int s = 1 + int(rng() % 3);
        const int m = 1 + int(rng() % 3);
        auto net = random_net(rng, b, s, m);
        CAPTURE(b);
        CAPTURE(s);
        CAPTURE(m);

        auto rep = t_value_alg2(net);
        auto dual = dual_enumerate(net);
        const long long mn = min_nrt(dual);
        if (mn <= (long long)net.n() * net.s()) {
            CHECK(rep.deg_q == s * (m + 1) - int(mn));
        } else {
            CHECK(rep.deg_q == -1);
        }

        // window coefficients equal the oracle Q on the inspected degrees
        IntPoly q = dual_window_poly(net);
        for (std::size_t k = 0; k < rep.window.size(); ++k) {
            const long long a = rep.window_offset + (long long)k;
            CHECK(rep.window[k] == q.coeff(int(a)));
        }
    }
}

TEST_CASE("cross-algorithm agreement with the interval oracle") {
    std::mt19937 rng(314159);
    for (int trial = 0; trial < 40; ++trial) {
        const std::uint32_t b = (rng() % 2) ? 2 : 3;
        const int s = 1 + int(rng() % 4);
        const int m = 1 + int(rng() % 4);
        auto net = random_net(rng, b, s, m);
        CAPTURE(b);
        CAPTURE(s);
        CAPTURE(m);
        const int t1 = t_from_wep(truncated_wep(net, m), m);
        const int t2 = t_value_alg2(net).t;
        CHECK(t1 == t2);
        CHECK(t1 == t_by_intervals(all_points(net), b, m));
    }
}

TEST_CASE("degree method is thread-count invariant") {
    std::mt19937 rng(606060);
    auto net = random_net(rng, 2, 4, 6);
    auto r1 = t_value_alg2(net, 1);
    auto r8 = t_value_alg2(net, 8);
    CHECK(r1.t == r8.t);
    CHECK(r1.window == r8.window);
}
