#include "dignet/oracle.hpp"

#include <algorithm>
#include <map>

#include "dignet/error.hpp"

namespace dignet {

namespace {

std::uint64_t checked_pow(std::uint64_t base, int exp, std::uint64_t limit, const char* what) {
    std::uint64_t v = 1;
    for (int i = 0; i < exp; ++i) {
        if (v > limit / base) throw_resource(what);
        v *= base;
    }
    return v;
}

std::uint64_t compositions_count(int total, int parts) {
    // C(total + parts - 1, parts - 1), saturating at uint64 max is irrelevant
    // at oracle scale but guard anyway.
    std::uint64_t c = 1;
    for (int i = 1; i < parts; ++i) {
        c = c * std::uint64_t(total + i) / std::uint64_t(i);
    }
    return c;
}

template <typename Fn>
void for_each_composition(int total, int parts, std::vector<int>& d, int idx, Fn&& fn) {
    if (idx == parts - 1) {
        d[std::size_t(idx)] = total;
        fn(d);
        return;
    }
    for (int v = 0; v <= total; ++v) {
        d[std::size_t(idx)] = v;
        for_each_composition(total - v, parts, d, idx + 1, fn);
    }
}

/// All cells at prefix depths d are uniform with exactly `per_cell` points.
bool prefixes_uniform(const std::vector<DigitMatrix>& points, const std::vector<int>& d,
                      std::uint64_t per_cell) {
    const int s = int(d.size());
    std::map<std::vector<std::uint16_t>, std::uint64_t> cells;
    std::vector<std::uint16_t> key;
    for (const auto& p : points) {
        key.clear();
        for (int i = 0; i < s; ++i)
            for (int j = 0; j < d[std::size_t(i)]; ++j)
                key.push_back(j < p.cols ? p.at(i, j) : std::uint16_t(0));
        ++cells[key];
    }
    for (const auto& [k, c] : cells)
        if (c != per_cell) return false;
    return true;
}

}  // namespace

DualSet dual_enumerate(const DigitalNet& net, const OracleLimits& limits) {
    const int s = net.s();
    const int n = net.n();
    const std::uint32_t b = net.base();
    const std::uint32_t e = net.spec().exponent();
    const int cells = s * n;
    const std::uint64_t candidates =
        checked_pow(b, cells, limits.dual_candidates, "dual enumeration bound exceeded");

    const auto& gens = net.generators();
    const int m = net.m();

    DualSet dual;
    dual.s = s;
    dual.n = n;

    DigitMatrix k(s, n);
    std::vector<std::uint32_t> sums(std::size_t(m), 0);  // pairing exponents against each generator
    for (std::uint64_t c = 0;; ++c) {
        bool member = true;
        for (int g = 0; g < m; ++g)
            if (sums[std::size_t(g)] != 0) {
                member = false;
                break;
            }
        if (member) dual.elements.push_back(k);
        if (c + 1 == candidates) break;

        // Odometer step over the entries of k, updating the pairing sums.
        int pos = 0;
        while (true) {
            const std::uint16_t old = k.sym[std::size_t(pos)];
            const std::uint16_t next = (std::uint32_t(old) + 1 == b) ? std::uint16_t(0) : std::uint16_t(old + 1);
            k.sym[std::size_t(pos)] = next;
            for (int g = 0; g < m; ++g) {
                const std::uint16_t x = gens[std::size_t(g)].sym[std::size_t(pos)];
                std::uint32_t& acc = sums[std::size_t(g)];
                acc = (acc + e - net.spec().pair(old, x) + net.spec().pair(next, x)) % e;
            }
            if (next != 0) break;
            ++pos;
        }
    }
    dual.complete = true;
    return dual;
}

long long nrt_weight(const DigitMatrix& k) {
    long long w = 0;
    for (int i = 0; i < k.rows; ++i)
        for (int j = k.cols - 1; j >= 0; --j)
            if (k.at(i, j) != 0) {
                w += j + 1;
                break;
            }
    return w;
}

long long min_nrt(const DualSet& dual) {
    if (!dual.complete) throw_input("dual set is not complete");
    long long best = (long long)dual.n * dual.s + 1;
    bool found = false;
    for (const auto& k : dual.elements) {
        if (k.is_zero()) continue;
        best = found ? std::min(best, nrt_weight(k)) : nrt_weight(k);
        found = true;
    }
    return found ? best : (long long)dual.n * dual.s + 1;
}

int t_by_intervals(const std::vector<DigitMatrix>& points, std::uint32_t b, int m,
                   const OracleLimits& limits) {
    if (points.empty()) throw_input("point set is empty");
    const int s = points.front().rows;
    const std::uint64_t expect = checked_pow(b, m, std::uint64_t(-1) >> 1, "point count overflow");
    if (points.size() != expect) throw_input("point multiset must hold exactly b^m points");
    for (const auto& p : points)
        if (p.rows != s || p.cols != points.front().cols) throw_input("point shapes differ");

    for (int t = 0; t <= m; ++t) {
        const int depth = m - t;
        const std::uint64_t comps = compositions_count(depth, s);
        if (comps > limits.cell_pairs / points.size())
            throw_resource("interval oracle bound exceeded");
        const std::uint64_t per_cell = checked_pow(b, t, std::uint64_t(-1) >> 1, "cell count overflow");

        bool ok = true;
        std::vector<int> d(std::size_t(s), 0);
        for_each_composition(depth, s, d, 0, [&](const std::vector<int>& dd) {
            if (ok && !prefixes_uniform(points, dd, per_cell)) ok = false;
        });
        if (ok) return t;
    }
    throw_internal("no t in 0..m satisfied the interval counting");
}

bool is_tms_uniform(const std::vector<DigitMatrix>& points, std::uint64_t T, std::uint64_t M,
                    std::uint32_t b) {
    if (points.size() != M) throw_input("point multiset must hold exactly M points");
    if (T == 0) throw_input("T must be >= 1");
    const int s = points.front().rows;

    // Largest prefix depth with b^D * T <= M; uniformity at depth D implies it
    // at every dominated composition.
    int depth = 0;
    std::uint64_t vol = 1;
    while (vol <= M / b && vol * b * T <= M) {
        vol *= b;
        ++depth;
    }
    if (T > M) return true;  // no qualifying composition at all
    const std::uint64_t cells = vol;
    if (M % cells != 0) return false;
    const std::uint64_t per_cell = M / cells;

    bool ok = true;
    std::vector<int> d(std::size_t(s), 0);
    for_each_composition(depth, s, d, 0, [&](const std::vector<int>& dd) {
        if (ok && !prefixes_uniform(points, dd, per_cell)) ok = false;
    });
    return ok;
}

}  // namespace dignet
