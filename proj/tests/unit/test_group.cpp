#include <doctest.h>

#include <random>

#include "dignet/error.hpp"
#include "dignet/group.hpp"
#include "dignet/poly.hpp"

using namespace dignet;

namespace {

GroupElement el(const GroupSpec& spec, std::initializer_list<std::uint32_t> residues) {
    GroupElement g{std::vector<std::uint32_t>(residues)};
    (void)spec;
    return g;
}

std::vector<GroupSpec> small_specs() {
    std::vector<GroupSpec> out;
    out.push_back(GroupSpec::cyclic(2));
    out.push_back(GroupSpec::cyclic(3));
    out.push_back(GroupSpec::cyclic(4));
    out.push_back(GroupSpec::cyclic(5));
    out.push_back(GroupSpec({2, 2}));
    out.push_back(GroupSpec({2, 3}));
    out.push_back(GroupSpec::cyclic(6));
    out.push_back(GroupSpec({2, 4}));
    out.push_back(GroupSpec({2, 2, 2}));
    out.push_back(GroupSpec({3, 3}));
    out.push_back(GroupSpec({2, 2, 3}));
    out.push_back(GroupSpec::cyclic(12));
    return out;
}

}  // namespace

TEST_CASE("group spec derives order and exponent") {
    GroupSpec g({2, 3});
    CHECK(g.order() == 6);
    CHECK(g.exponent() == 6);
    GroupSpec h({2, 2});
    CHECK(h.order() == 4);
    CHECK(h.exponent() == 2);
    GroupSpec k({2, 4});
    CHECK(k.order() == 8);
    CHECK(k.exponent() == 4);
    CHECK_THROWS_AS(GroupSpec({1}), error);
}

TEST_CASE("symbol codec is the little-endian mixed-radix bijection") {
    GroupSpec g({2, 3});
    CHECK(g.element(0).is_zero());
    CHECK(g.element(5) == el(g, {1, 2}));
    CHECK(g.element(3) == el(g, {1, 1}));
    for (std::uint32_t v = 0; v < g.order(); ++v) CHECK(g.symbol(g.element(v)) == v);
}

TEST_CASE("group_add") {
    GroupSpec g({2, 3});
    CHECK(group_add(el(g, {1, 2}), el(g, {1, 2}), g) == el(g, {0, 1}));
    CHECK(group_add(el(g, {1, 2}), el(g, {0, 0}), g) == el(g, {1, 2}));
    GroupSpec z5 = GroupSpec::cyclic(5);
    CHECK(group_add(el(z5, {3}), el(z5, {4}), z5) == el(z5, {2}));
    CHECK_THROWS_AS(group_add(el(g, {1, 2}), el(z5, {3}), g), error);
}

TEST_CASE("pair_exponent fixed identification") {
    GroupSpec z2 = GroupSpec::cyclic(2);
    CHECK(pair_exponent(el(z2, {0}), el(z2, {1}), z2) == 0);
    CHECK(pair_exponent(el(z2, {1}), el(z2, {1}), z2) == 1);  // the sign character

    GroupSpec g({2, 3});  // e = 6
    CHECK(pair_exponent(el(g, {1, 1}), el(g, {1, 2}), g) == 1);  // 1*1*3 + 1*2*2 = 7 = 1 mod 6
    CHECK(pair_exponent(el(g, {0, 0}), el(g, {1, 2}), g) == 0);
}

TEST_CASE("pair_exponent is bi-additive") {
    std::mt19937 rng(20240811);
    for (const auto& spec : small_specs()) {
        const std::uint32_t b = spec.order();
        const std::uint32_t e = spec.exponent();
        for (int trial = 0; trial < 30; ++trial) {
            auto k = spec.element(rng() % b);
            auto k2 = spec.element(rng() % b);
            auto x = spec.element(rng() % b);
            auto x2 = spec.element(rng() % b);
            CHECK(pair_exponent(group_add(k, k2, spec), x, spec) ==
                  (pair_exponent(k, x, spec) + pair_exponent(k2, x, spec)) % e);
            CHECK(pair_exponent(k, group_add(x, x2, spec), spec) ==
                  (pair_exponent(k, x, spec) + pair_exponent(k, x2, spec)) % e);
        }
    }
}

TEST_CASE("pairing is perfect: distinct characters differ somewhere") {
    for (const auto& spec : small_specs()) {
        const std::uint32_t b = spec.order();
        for (std::uint32_t k = 0; k < b; ++k) {
            for (std::uint32_t k2 = k + 1; k2 < b; ++k2) {
                bool differ = false;
                for (std::uint32_t x = 0; x < b && !differ; ++x)
                    if (spec.pair(std::uint16_t(k), std::uint16_t(x)) !=
                        spec.pair(std::uint16_t(k2), std::uint16_t(x)))
                        differ = true;
                CHECK(differ);
            }
        }
    }
}

TEST_CASE("character sums over the whole group vanish for nonzero characters") {
    for (const auto& spec : small_specs()) {
        const std::uint32_t b = spec.order();
        const std::uint32_t e = spec.exponent();
        for (std::uint32_t k = 0; k < b; ++k) {
            ExponentTally tally(e);
            for (std::uint32_t x = 0; x < b; ++x) tally.add(spec.pair(std::uint16_t(k), std::uint16_t(x)));
            CHECK(char_sum_is_zero(tally, e) == (k != 0));
        }
    }
}

TEST_CASE("char_sum_is_zero on direct tallies") {
    {
        // uniform tally: all counts equal
        ExponentTally t(5);
        for (std::uint32_t j = 0; j < 5; ++j) t.add(j, 7);
        CHECK(char_sum_is_zero(t, 5));
    }
    {
        ExponentTally t(4);
        t.add(0, 3);
        CHECK_FALSE(char_sum_is_zero(t, 4));
    }
    {
        // 1 + zeta_4^2 = 0
        ExponentTally t(4);
        t.add(0);
        t.add(2);
        CHECK(char_sum_is_zero(t, 4));
    }
    {
        // 1 + zeta_6^2 + zeta_6^4 = 0 but 1 + zeta_6 is not
        ExponentTally t(6);
        t.add(0);
        t.add(2);
        t.add(4);
        CHECK(char_sum_is_zero(t, 6));
        ExponentTally u(6);
        u.add(0);
        u.add(1);
        CHECK_FALSE(char_sum_is_zero(u, 6));
    }
}

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic(1) == IntPoly({-1, 1}));
    CHECK(cyclotomic(2) == IntPoly({1, 1}));
    CHECK(cyclotomic(4) == IntPoly({1, 0, 1}));
    CHECK(cyclotomic(6) == IntPoly({1, -1, 1}));
    CHECK(cyclotomic(12) == IntPoly({1, 0, -1, 0, 1}));
}
