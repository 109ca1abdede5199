#include "dignet/net.hpp"

#include <algorithm>

#include "dignet/error.hpp"

namespace dignet {

std::uint32_t bullet_exponent(const DigitMatrix& K, const DigitMatrix& X, const GroupSpec& spec) {
    if (K.rows != X.rows || K.cols != X.cols) throw_input("matrix shapes differ in pairing");
    const std::uint64_t e = spec.exponent();
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < K.sym.size(); ++i) acc += spec.pair(K.sym[i], X.sym[i]);
    return std::uint32_t(acc % e);
}

DigitMatrix matrix_add(const DigitMatrix& a, const DigitMatrix& b, const GroupSpec& spec) {
    if (a.rows != b.rows || a.cols != b.cols) throw_input("matrix shapes differ in addition");
    DigitMatrix r(a.rows, a.cols);
    for (std::size_t i = 0; i < a.sym.size(); ++i) r.sym[i] = spec.add(a.sym[i], b.sym[i]);
    return r;
}

int mu_star(const std::uint16_t* row, int n) {
    for (int j = 0; j < n; ++j)
        if (row[j] != 0) return j + 1;
    return 0;
}

MuProfile mu_profile(const DigitMatrix& x, int cap) {
    MuProfile p;
    p.mu_star.resize(std::size_t(x.rows));
    p.nu.resize(std::size_t(x.rows));
    for (int i = 0; i < x.rows; ++i) {
        const int ms = mu_star(x.row(i), x.cols);
        p.mu_star[std::size_t(i)] = ms;
        p.nu[std::size_t(i)] = (ms >= 1 && ms <= cap) ? ms : cap + 1;
    }
    return p;
}

DigitalNet::DigitalNet(GroupSpec spec, int s, int m, int n, std::vector<DigitMatrix> generators,
                       Provenance provenance)
    : spec_(std::move(spec)), s_(s), m_(m), n_(n), generators_(std::move(generators)), provenance_(provenance) {
    if (s_ < 1) throw_input("net needs s >= 1");
    if (m_ < 1) throw_input("net needs m >= 1");
    if (n_ < m_) throw_input("net needs digit depth n >= m");
    if (int(generators_.size()) != m_) throw_input("net needs exactly m generators");
    for (const auto& g : generators_) {
        if (g.rows != s_ || g.cols != n_) throw_input("generator shape must be s x n");
        for (auto v : g.sym)
            if (v >= spec_.order()) throw_input("generator entry out of range");
    }
    point_count();  // reject overflowing b^m up front
}

std::uint64_t DigitalNet::point_count() const {
    std::uint64_t n = 1;
    for (int i = 0; i < m_; ++i) {
        if (n > (std::uint64_t(1) << 62) / spec_.order()) throw_resource("b^m exceeds the enumerable range");
        n *= spec_.order();
    }
    return n;
}

DigitMatrix DigitalNet::point_at(std::uint64_t l) const {
    DigitMatrix x(s_, n_);
    const std::uint32_t b = spec_.order();
    for (int r = 0; r < m_ && l != 0; ++r) {
        std::uint32_t digit = std::uint32_t(l % b);
        l /= b;
        const DigitMatrix& g = generators_[std::size_t(r)];
        for (std::uint32_t rep = 0; rep < digit; ++rep)
            for (std::size_t i = 0; i < x.sym.size(); ++i) x.sym[i] = spec_.add(x.sym[i], g.sym[i]);
    }
    return x;
}

DigitalNet net_from_matrices(GroupSpec spec,
                             const std::vector<std::vector<std::vector<std::uint16_t>>>& matrices, int m,
                             int n) {
    const int s = int(matrices.size());
    if (s < 1) throw_input("need at least one generating matrix");
    std::vector<DigitMatrix> gens(std::size_t(m), DigitMatrix(s, n));
    for (int j = 0; j < s; ++j) {
        const auto& c = matrices[std::size_t(j)];
        if (int(c.size()) != n) throw_input("generating matrix must have n rows");
        for (int r = 0; r < n; ++r) {
            if (int(c[std::size_t(r)].size()) != m) throw_input("generating matrix must have m columns");
            for (int i = 0; i < m; ++i) {
                const std::uint16_t v = c[std::size_t(r)][std::size_t(i)];
                if (v >= spec.order()) throw_input("generating matrix entry out of range");
                // Row j of generator X_i is the i-th column of C_j.
                gens[std::size_t(i)].at(j, r) = v;
            }
        }
    }
    return DigitalNet(std::move(spec), s, m, n, std::move(gens), DigitalNet::Provenance::matrices);
}

DigitalNet net_from_generators(GroupSpec spec, std::vector<DigitMatrix> generators, int n) {
    if (generators.empty()) throw_input("need at least one generator");
    const int s = generators.front().rows;
    const int m = int(generators.size());
    return DigitalNet(std::move(spec), s, m, n, std::move(generators),
                      DigitalNet::Provenance::explicit_generators);
}

DigitalNet project(const DigitalNet& net, const std::vector<int>& u) {
    if (u.empty()) throw_input("projection needs a nonempty coordinate set");
    std::vector<int> coords = u;
    std::sort(coords.begin(), coords.end());
    coords.erase(std::unique(coords.begin(), coords.end()), coords.end());
    for (int c : coords)
        if (c < 1 || c > net.s()) throw_input("projection coordinate out of range");

    std::vector<DigitMatrix> gens;
    gens.reserve(std::size_t(net.m()));
    for (const auto& g : net.generators()) {
        DigitMatrix h(int(coords.size()), net.n());
        for (std::size_t i = 0; i < coords.size(); ++i)
            for (int j = 0; j < net.n(); ++j) h.at(int(i), j) = g.at(coords[i] - 1, j);
        gens.push_back(std::move(h));
    }
    return DigitalNet(net.spec(), int(coords.size()), net.m(), net.n(), std::move(gens), net.provenance());
}

void for_each_point(const DigitalNet& net, std::uint64_t lo, std::uint64_t hi,
                    const std::function<void(std::uint64_t, const DigitMatrix&)>& fn) {
    const std::uint64_t total = net.point_count();
    if (lo > hi || hi > total) throw_input("point range out of bounds");
    if (lo == hi) return;

    const std::uint32_t b = net.base();
    const int m = net.m();
    const GroupSpec& spec = net.spec();

    // Digit multiples k * X_{r+1} for k in {0..b-1}.
    std::vector<std::vector<DigitMatrix>> mult;
    mult.resize(std::size_t(m));
    for (int r = 0; r < m; ++r) {
        mult[std::size_t(r)].reserve(b);
        mult[std::size_t(r)].emplace_back(net.s(), net.n());
        for (std::uint32_t k = 1; k < b; ++k)
            mult[std::size_t(r)].push_back(
                matrix_add(mult[std::size_t(r)].back(), net.generators()[std::size_t(r)], spec));
    }

    // Odometer over the base-b digits of l with suffix partial sums:
    // part[r] = sum_{r' >= r} mult[r'][digit_{r'}]; the current point is part[0].
    std::vector<std::uint32_t> digit(std::size_t(m), 0);
    std::vector<DigitMatrix> part(std::size_t(m) + 1, DigitMatrix(net.s(), net.n()));
    std::uint64_t l = lo;
    for (int r = m - 1; r >= 0; --r) {
        // digits of lo, most significant first into the suffix sums
        std::uint64_t place = 1;
        for (int k = 0; k < r; ++k) place *= b;
        digit[std::size_t(r)] = std::uint32_t((lo / place) % b);
        part[std::size_t(r)] =
            matrix_add(mult[std::size_t(r)][digit[std::size_t(r)]], part[std::size_t(r) + 1], spec);
    }

    while (true) {
        fn(l, part[0]);
        if (++l == hi) break;
        int r0 = 0;
        while (digit[std::size_t(r0)] == b - 1) {
            digit[std::size_t(r0)] = 0;
            ++r0;
        }
        ++digit[std::size_t(r0)];
        part[std::size_t(r0)] =
            matrix_add(mult[std::size_t(r0)][digit[std::size_t(r0)]], part[std::size_t(r0) + 1], spec);
        for (int r = r0 - 1; r >= 0; --r) part[std::size_t(r)] = part[std::size_t(r) + 1];
    }
}

std::vector<DigitMatrix> all_points(const DigitalNet& net) {
    std::vector<DigitMatrix> pts;
    pts.reserve(net.point_count());
    for_each_point(net, 0, net.point_count(), [&](std::uint64_t, const DigitMatrix& x) { pts.push_back(x); });
    return pts;
}

}  // namespace dignet
