#include "dignet/sobol.hpp"

#include <cctype>
#include <map>
#include <sstream>

#include "dignet/error.hpp"

namespace dignet {

std::vector<DirectionEntry> parse_direction_file(std::string_view text) {
    std::vector<DirectionEntry> entries;
    std::map<std::uint32_t, bool> seen;

    std::istringstream in{std::string(text)};
    std::string line;
    bool header_skipped = false;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        if (!header_skipped) {
            header_skipped = true;
            if (!std::isdigit(static_cast<unsigned char>(line[first]))) continue;  // header row
        }

        std::istringstream row(line);
        const std::string where = "direction file line " + std::to_string(lineno);
        std::uint64_t d = 0, deg = 0, a = 0;
        if (!(row >> d >> deg >> a)) throw_input(where + ": expected `d s a m_i`");
        if (d < 2) throw_input(where + ": dimensions start at 2");
        if (deg < 1 || deg > 63) throw_input(where + ": polynomial degree out of range");
        if (deg >= 1 && a >= (std::uint64_t(1) << (deg - 1)))
            throw_input(where + ": polynomial coefficient bits exceed the degree");
        DirectionEntry entry;
        entry.dimension = std::uint32_t(d);
        entry.degree = std::uint32_t(deg);
        entry.poly_coeffs = std::uint32_t(a);
        for (std::uint64_t i = 1; i <= deg; ++i) {
            std::uint64_t mi = 0;
            if (!(row >> mi)) throw_input(where + ": expected " + std::to_string(deg) + " direction integers");
            if (mi % 2 == 0) throw_input(where + ": direction integers must be odd");
            if (i < 64 && mi >= (std::uint64_t(1) << i)) throw_input(where + ": direction integer m_i must be < 2^i");
            entry.initial.push_back(mi);
        }
        std::uint64_t extra = 0;
        if (row >> extra) throw_input(where + ": trailing fields");
        if (seen[entry.dimension]) throw_input(where + ": duplicate dimension");
        seen[entry.dimension] = true;
        entries.push_back(std::move(entry));
    }
    return entries;
}

std::vector<std::vector<std::vector<std::uint16_t>>> sobol_matrices(
    const std::vector<DirectionEntry>& entries, int s, int m) {
    if (s < 1) throw_input("need at least one dimension");
    if (m < 1 || m > 64) throw_input("digit count must be in 1..64");

    std::map<std::uint32_t, const DirectionEntry*> by_dim;
    for (const auto& e : entries) by_dim[e.dimension] = &e;

    std::vector<std::vector<std::vector<std::uint16_t>>> out;
    out.reserve(std::size_t(s));
    for (int dim = 1; dim <= s; ++dim) {
        std::vector<std::vector<std::uint16_t>> c(std::size_t(m), std::vector<std::uint16_t>(std::size_t(m), 0));
        if (dim == 1) {
            for (int j = 0; j < m; ++j) c[std::size_t(j)][std::size_t(j)] = 1;  // radical inverse
        } else {
            auto it = by_dim.find(std::uint32_t(dim));
            if (it == by_dim.end())
                throw_input("direction table has no entry for dimension " + std::to_string(dim));
            const DirectionEntry& e = *it->second;
            const int q = int(e.degree);

            std::vector<std::uint64_t> mv(std::size_t(m) + 1, 0);  // 1-based
            for (int k = 1; k <= m; ++k) {
                if (k <= q) {
                    mv[std::size_t(k)] = e.initial[std::size_t(k - 1)];
                } else {
                    std::uint64_t v = (mv[std::size_t(k - q)] << q) ^ mv[std::size_t(k - q)];
                    for (int j = 1; j < q; ++j)
                        if ((e.poly_coeffs >> (q - 1 - j)) & 1u) v ^= mv[std::size_t(k - j)] << j;
                    mv[std::size_t(k)] = v;
                }
            }
            // Column k holds the m-bit direction number v_k = m_k / 2^k,
            // most significant bit in row 1.
            for (int k = 1; k <= m; ++k)
                for (int j = 1; j <= k; ++j)
                    c[std::size_t(j - 1)][std::size_t(k - 1)] =
                        std::uint16_t((mv[std::size_t(k)] >> (k - j)) & 1u);
        }
        out.push_back(std::move(c));
    }
    return out;
}

DigitalNet sobol_net(const std::vector<DirectionEntry>& entries, int s, int m) {
    return net_from_matrices(GroupSpec::cyclic(2), sobol_matrices(entries, s, m), m, m);
}

}  // namespace dignet
