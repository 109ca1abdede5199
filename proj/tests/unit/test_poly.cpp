#include <doctest.h>

#include <random>

#include "dignet/error.hpp"
#include "dignet/poly.hpp"

using namespace dignet;

namespace {

/// Independent check value: full product of the window factors
/// prod_i (z^{mu_i} - z^{m+1}) by naive convolution.
IntPoly naive_window_full(const std::vector<int>& mu, int m) {
    IntPoly acc = IntPoly::one();
    for (int u : mu) {
        IntPoly f;
        f.at(u) += 1;
        f.at(m + 1) -= 1;
        acc = mul(acc, f);
    }
    return acc;
}

}  // namespace

TEST_CASE("trunc_mul") {
    IntPoly a({1, -1});        // 1 - z
    IntPoly b({1, 1});         // 1 + z
    CHECK(trunc_mul(a, b, 2) == IntPoly({1, 0, -1}));

    IntPoly c({1, 2});         // 1 + 2z
    IntPoly d({2, -4, -4});    // 2 - 4z - 4z^2
    CHECK(trunc_mul(c, d, 2) == IntPoly({2, 0, -12}));

    IntPoly p({3, 0, 7, -2});
    CHECK(trunc_mul(p, IntPoly::one(), 10) == p);
    CHECK(trunc_mul(p, p, 0) == IntPoly({9}));
}

TEST_CASE("row_factor examples") {
    for (std::uint32_t b : {2u, 3u, 5u}) {
        CHECK(row_factor(1, 4, b) == IntPoly({1, -1}));
        CHECK(row_factor(2, 4, b) == IntPoly({1, BigInt(b) - 1, -BigInt(b)}));
    }
    CHECK(row_factor(0, 2, 2) == IntPoly({1, 1, 2}));
    CHECK_THROWS_AS(row_factor(3, 2, 2), error);
    CHECK_THROWS_AS(row_factor(-1, 2, 2), error);
}

TEST_CASE("row_factor sum form equals the closed form") {
    for (std::uint32_t b : {2u, 3u, 4u, 5u}) {
        for (int n = 0; n <= 12; ++n) {
            for (int h = 0; h <= n; ++h) {
                CAPTURE(b);
                CAPTURE(n);
                CAPTURE(h);
                CHECK(row_factor(h, n, b) == row_factor_closed(h, n, b));
            }
        }
    }
}

TEST_CASE("row_factor evaluations at z = 1") {
    for (std::uint32_t b : {2u, 3u, 5u}) {
        for (int n = 1; n <= 8; ++n) {
            CHECK(row_factor(0, n, b).eval(1) == big_pow(b, unsigned(n)));
            for (int h = 1; h <= n; ++h) CHECK(row_factor(h, n, b).eval(1) == 0);
        }
    }
}

TEST_CASE("geometric_factor") {
    CHECK(geometric_factor(2, 3, 1) == IntPoly({1, 1, 2, 4}));
    CHECK(geometric_factor(2, 2, 2) == IntPoly({1, 2, 5}));
    for (int s = 1; s <= 8; ++s) CHECK(geometric_factor(3, 5, s).coeff(0) == 1);
}

TEST_CASE("geometric_factor is the truncated power of the s = 1 series") {
    for (std::uint32_t b : {2u, 3u}) {
        for (int s = 1; s <= 8; ++s) {
            const int m = 6;
            IntPoly expect = IntPoly::one();
            for (int i = 0; i < s; ++i) expect = trunc_mul(expect, geometric_factor(b, m, 1), m);
            CHECK(geometric_factor(b, m, s) == expect);
        }
    }
}

TEST_CASE("top_window_product examples") {
    {
        // (z - z^3)(z^2 - z^3) = z^3 - z^4 - z^5 + z^6
        PolyWindow w = top_window_product({1, 2}, 2);
        CHECK(w.offset == 3);
        CHECK(w.at_degree(3) == 1);
        CHECK(w.at_degree(4) == -1);
        CHECK(w.at_degree(5) == -1);
        CHECK(w.at_degree(6) == 1);
    }
    {
        // a factor z^{m+1} - z^{m+1} = 0 kills the product
        PolyWindow w = top_window_product({3, 1}, 2);
        for (const auto& c : w.coeffs) CHECK(c == 0);
    }
    {
        // s = 1: window covers degrees 0..m+1
        PolyWindow w = top_window_product({0}, 4);
        CHECK(w.offset == 0);
        CHECK(w.at_degree(0) == 1);
        CHECK(w.at_degree(5) == -1);
        for (int a = 1; a <= 4; ++a) CHECK(w.at_degree(a) == 0);
    }
}

TEST_CASE("top_window_product matches the naive full product") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const int s = 1 + int(rng() % 10);
        const int m = int(rng() % 13);
        std::vector<int> mu(std::size_t(s), 0);
        for (auto& v : mu) v = int(rng() % unsigned(m + 2));
        PolyWindow w = top_window_product(mu, m);
        IntPoly full = naive_window_full(mu, m);
        for (long long a = w.offset; a < w.offset + (long long)w.coeffs.size(); ++a) {
            CAPTURE(s);
            CAPTURE(m);
            CAPTURE(a);
            CHECK(w.at_degree(a) == full.coeff(int(a)));
        }
    }
}

TEST_CASE("divmod_monic and exact division") {
    IntPoly p({6, 5, 1});  // (z+2)(z+3)
    auto [q, r] = divmod_monic(p, IntPoly({2, 1}));
    CHECK(r.is_zero());
    CHECK(q == IntPoly({3, 1}));

    auto [q2, r2] = divmod_monic(IntPoly({1, 0, 1}), IntPoly({1, 1}));
    CHECK(r2 == IntPoly({2}));

    CHECK(div_one_minus_cz_exact(IntPoly({1, -3, 2}), 2) == IntPoly({1, -1}));
    CHECK_THROWS_AS(div_one_minus_cz_exact(IntPoly({1, 1}), 1), error);
}

TEST_CASE("multipoly bookkeeping") {
    MultiPoly p(3);
    p.add_term({1, 0, 2}, 5);
    p.add_term({1, 0, 2}, -5);
    CHECK(p.term_count() == 0);
    p.add_term({0, 0, 0}, 1);
    p.add_term({2, 1, 0}, 4);
    CHECK(p.term_count() == 2);
    CHECK(MultiPoly::total_degree({2, 1, 0}) == 3);
    CHECK_THROWS_AS(p.add_term({1, 1}, 1), error);
}
