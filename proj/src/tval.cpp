#include "dignet/tval.hpp"

#include <algorithm>
#include <exception>
#include <map>
#include <mutex>
#include <thread>
#include <tuple>

#include "dignet/error.hpp"

namespace dignet {

namespace {

/// Reversed-coefficient window (y^j <-> z^{s(m+1)-j}) of the s-th power of the
/// inverse-identity base polynomial
///   1 + (b-1)z + ... + (b^m - b^{m-1}) z^m - b^m z^{m+1},
/// truncated mod y^{m+2}. Cached per (b, m, s).
const std::vector<BigInt>& base_power_window(std::uint32_t b, int m, int s) {
    static std::mutex mu;
    static std::map<std::tuple<std::uint32_t, int, int>, std::vector<BigInt>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_tuple(b, m, s);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    IntPoly rev;
    rev.at(0) = -big_pow(b, unsigned(m));
    for (int j = 1; j <= m; ++j) rev.at(j) = big_pow(b, unsigned(m + 1 - j)) - big_pow(b, unsigned(m - j));
    rev.at(m + 1) = 1;
    IntPoly p = pow_trunc(rev, unsigned(s), m + 1);
    std::vector<BigInt> w(std::size_t(m) + 2);
    for (int j = 0; j <= m + 1; ++j) w[std::size_t(j)] = p.coeff(j);
    return cache.emplace(key, std::move(w)).first->second;
}

struct WindowPartial {
    std::vector<BigInt> rev;  // reversed-space accumulation, size m+2
};

}  // namespace

TValueReport t_value_alg2(const DigitalNet& net, int threads) {
    if (net.n() != net.m()) throw_input("the degree method needs digit depth n = m");
    const int m = net.m();
    const int s = net.s();
    const std::uint32_t b = net.base();

    // Per point, accumulate the reciprocal product prod_i (y^{nu_i} - 1)
    // mod y^{m+2}; y^j carries the coefficient of z^{s(m+1)-j}.
    threads = std::max(1, threads);
    const std::uint64_t total_pts = net.point_count();
    const std::uint64_t nchunks = std::min<std::uint64_t>(std::uint64_t(threads), total_pts);
    std::vector<WindowPartial> partials(std::size_t(nchunks), WindowPartial{});
    std::vector<std::exception_ptr> errors(std::size_t(nchunks), nullptr);
    {
        std::vector<std::thread> pool;
        for (std::uint64_t c = 0; c < nchunks; ++c) {
            const std::uint64_t clo = total_pts / nchunks * c + std::min(c, total_pts % nchunks);
            const std::uint64_t chi = total_pts / nchunks * (c + 1) + std::min(c + 1, total_pts % nchunks);
            pool.emplace_back([&, clo, chi, c] {
                try {
                    auto& acc = partials[std::size_t(c)].rev;
                    acc.assign(std::size_t(m) + 2, 0);
                    std::vector<BigInt> w(std::size_t(m) + 2);
                    for_each_point(net, clo, chi, [&](std::uint64_t, const DigitMatrix& x) {
                        for (auto& v : w) v = 0;
                        w[0] = 1;
                        for (int i = 0; i < s; ++i) {
                            const int ms = mu_star(x.row(i), x.cols);
                            const int e = (ms >= 1) ? ms : m + 1;  // nu_i
                            for (int j = m + 1; j >= 0; --j) {
                                if (j >= e)
                                    w[std::size_t(j)] = w[std::size_t(j - e)] - w[std::size_t(j)];
                                else
                                    w[std::size_t(j)] = -w[std::size_t(j)];
                            }
                        }
                        for (int j = 0; j <= m + 1; ++j)
                            if (w[std::size_t(j)] != 0) acc[std::size_t(j)] += w[std::size_t(j)];
                    });
                } catch (...) {
                    errors[std::size_t(c)] = std::current_exception();
                }
            });
        }
        for (auto& t : pool) t.join();
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);

    std::vector<BigInt> acc(std::size_t(m) + 2);
    for (auto& p : partials)
        if (!p.rev.empty())
            for (int j = 0; j <= m + 1; ++j) acc[std::size_t(j)] += p.rev[std::size_t(j)];

    // Scaled window of Q = -(base)^s + b^{sm-m} * sum.
    const BigInt dual_size = big_pow(b, unsigned(std::int64_t(s) * m - m));
    const auto& base = base_power_window(b, m, s);
    std::vector<BigInt> q(std::size_t(m) + 2);
    for (int j = 0; j <= m + 1; ++j) q[std::size_t(j)] = dual_size * acc[std::size_t(j)] - base[std::size_t(j)];

    if (q[0] != 0) throw_internal("leading window coefficients failed to cancel");

    int jmin = -1;
    for (int j = 1; j <= m + 1; ++j) {
        if (q[std::size_t(j)] != 0) {
            jmin = j;
            break;
        }
    }

    TValueReport rep;
    rep.window_offset = (long long)(s - 1) * (m + 1);
    rep.window.resize(std::size_t(m) + 1);
    for (int k = 0; k <= m; ++k) rep.window[std::size_t(k)] = q[std::size_t(m + 1 - k)];

    if (jmin < 0) {
        // The whole window vanished: the dual is trivial, which is possible
        // only for s = 1 (where it means t = 0).
        if (s != 1) throw_internal("empty degree window for s >= 2");
        rep.t = 0;
        rep.deg_q = -1;
        return rep;
    }
    rep.deg_q = (s * (m + 1)) - jmin;
    rep.t = (1 - s) * (m + 1) + rep.deg_q;
    if (rep.t < 0 || rep.t > m) throw_internal("degree method produced t outside 0..m");
    return rep;
}

}  // namespace dignet
