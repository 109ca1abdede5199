#include <doctest.h>

#include "dignet/error.hpp"
#include "dignet/oracle.hpp"
#include "dignet/sobol.hpp"

using namespace dignet;

TEST_CASE("parse_direction_file") {
    auto entries = parse_direction_file("d s a m_i\n2 1 0 1\n3 2 1 1 3\n");
    REQUIRE(entries.size() == 2);
    CHECK(entries[0].dimension == 2);
    CHECK(entries[0].degree == 1);
    CHECK(entries[0].poly_coeffs == 0);
    CHECK(entries[0].initial == std::vector<std::uint64_t>{1});
    CHECK(entries[1].initial == std::vector<std::uint64_t>({1, 3}));

    CHECK(parse_direction_file("d s a m_i\n").empty());
    CHECK(parse_direction_file("").empty());

    CHECK_THROWS_AS(parse_direction_file("d s a m_i\n2 1 0 2\n"), error);      // even m_1
    CHECK_THROWS_AS(parse_direction_file("d s a m_i\n3 2 1 1 5\n"), error);    // m_2 >= 2^2
    CHECK_THROWS_AS(parse_direction_file("d s a m_i\n2 1 0\n"), error);        // missing m
    CHECK_THROWS_AS(parse_direction_file("d s a m_i\n2 1 0 1 1\n"), error);    // trailing field
    CHECK_THROWS_AS(parse_direction_file("d s a m_i\n1 1 0 1\n"), error);      // dimension 1 listed
    CHECK_THROWS_AS(parse_direction_file("2 1 0 1\n2 1 0 1\n"), error);        // duplicate dimension
}

TEST_CASE("headerless files still parse") {
    auto entries = parse_direction_file("2 1 0 1\n");
    REQUIRE(entries.size() == 1);
    CHECK(entries[0].dimension == 2);
}

TEST_CASE("dimension 1 is the radical inverse") {
    auto mats = sobol_matrices({}, 1, 4);
    REQUIRE(mats.size() == 1);
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) CHECK(mats[0][std::size_t(r)][std::size_t(c)] == (r == c ? 1 : 0));
}

TEST_CASE("dimension 2 recurrence") {
    auto entries = parse_direction_file("d s a m_i\n2 1 0 1\n");
    auto mats = sobol_matrices(entries, 2, 2);
    // v_1 = .10, v_2 = .11
    CHECK(mats[1] == std::vector<std::vector<std::uint16_t>>({{1, 1}, {0, 1}}));
    CHECK_THROWS_AS(sobol_matrices(entries, 3, 2), error);   // table too short
    CHECK_THROWS_AS(sobol_matrices(entries, 2, 65), error);  // exceeds direction width
}

TEST_CASE("sobol matrices are upper triangular with unit diagonal") {
    auto entries = parse_direction_file(
        "d s a m_i\n"
        "2 1 0 1\n"
        "3 2 1 1 3\n"
        "4 3 1 1 3 1\n"
        "5 3 2 1 1 1\n");
    for (int m : {3, 6, 10}) {
        auto mats = sobol_matrices(entries, 5, m);
        for (const auto& c : mats) {
            for (int r = 0; r < m; ++r) {
                CHECK(c[std::size_t(r)][std::size_t(r)] == 1);
                for (int k = 0; k < r; ++k) CHECK(c[std::size_t(r)][std::size_t(k)] == 0);
            }
        }
    }
}

TEST_CASE("first two dimensions form a (0,m,2)-net") {
    auto entries = parse_direction_file("d s a m_i\n2 1 0 1\n");
    for (int m = 1; m <= 8; ++m) {
        auto net = sobol_net(entries, 2, m);
        CHECK(t_by_intervals(all_points(net), 2, m) == 0);
    }
}

TEST_CASE("nets for m and m+1 are nested") {
    auto entries = parse_direction_file("d s a m_i\n2 1 0 1\n3 2 1 1 3\n");
    for (int m = 2; m <= 6; ++m) {
        auto small = sobol_net(entries, 3, m);
        auto large = sobol_net(entries, 3, m + 1);
        std::uint64_t count = std::uint64_t(1) << m;
        for (std::uint64_t l = 0; l < count; ++l) {
            auto xs = small.point_at(l);
            auto xl = large.point_at(l);
            // digit-truncated restriction of the deeper net
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < m; ++j) CHECK(xs.at(i, j) == xl.at(i, j));
        }
    }
}
