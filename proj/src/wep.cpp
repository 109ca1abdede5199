#include "dignet/wep.hpp"

#include <algorithm>
#include <exception>
#include <thread>

#include "dignet/error.hpp"

namespace dignet {

namespace {

/// Chunked reduction over an index range. Partials are produced per chunk and
/// combined by the caller in chunk order, so results do not depend on the
/// thread count (all combining is exact integer addition).
template <typename Partial, typename ChunkFn>
std::vector<Partial> run_chunks(std::uint64_t lo, std::uint64_t hi, int threads, ChunkFn fn) {
    threads = std::max(1, threads);
    const std::uint64_t len = hi - lo;
    const std::uint64_t nchunks = std::min<std::uint64_t>(std::uint64_t(threads), len == 0 ? 1 : len);
    std::vector<Partial> out(std::size_t(nchunks), Partial{});
    if (nchunks <= 1) {
        if (len != 0) fn(lo, hi, out[0]);
        return out;
    }
    std::vector<std::exception_ptr> errors(std::size_t(nchunks), nullptr);
    std::vector<std::thread> pool;
    pool.reserve(std::size_t(nchunks));
    for (std::uint64_t c = 0; c < nchunks; ++c) {
        const std::uint64_t clo = lo + len / nchunks * c + std::min(c, len % nchunks);
        const std::uint64_t chi = lo + len / nchunks * (c + 1) + std::min(c + 1, len % nchunks);
        pool.emplace_back([&, clo, chi, c] {
            try {
                fn(clo, chi, out[std::size_t(c)]);
            } catch (...) {
                errors[std::size_t(c)] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

/// sum over the given points of prod_i (1 - (bz)^{nu_i}) mod z^{ell+1},
/// nu_i the clamped first-nonzero-digit index of row i.
class NuProductSum {
public:
    NuProductSum(std::uint32_t b, int ell) : ell_(ell), prod_(std::size_t(ell) + 1) {
        bpow_.reserve(std::size_t(ell) + 1);
        bpow_.emplace_back(1);
        for (int a = 1; a <= ell; ++a) bpow_.push_back(bpow_.back() * b);
    }

    void add_point(const DigitMatrix& x) {
        for (auto& c : prod_) c = 0;
        prod_[0] = 1;
        int deg = 0;
        for (int i = 0; i < x.rows; ++i) {
            const int nu = mu_star(x.row(i), x.cols);
            if (nu == 0 || nu > ell_) continue;  // factor is 1 mod z^{ell+1}
            const int ndeg = std::min(ell_, deg + nu);
            for (int a = ndeg; a >= nu; --a) prod_[std::size_t(a)] -= bpow_[std::size_t(nu)] * prod_[std::size_t(a - nu)];
            deg = ndeg;
        }
        for (int a = 0; a <= deg; ++a)
            if (prod_[std::size_t(a)] != 0) sum_.at(a) += prod_[std::size_t(a)];
    }

    IntPoly take() { return std::move(sum_); }

private:
    int ell_;
    std::vector<BigInt> bpow_;
    std::vector<BigInt> prod_;
    IntPoly sum_;
};

IntPoly nu_sum_over_net(const DigitalNet& net, int ell, std::uint64_t lo, std::uint64_t hi, int threads) {
    auto partials = run_chunks<IntPoly>(lo, hi, threads, [&](std::uint64_t clo, std::uint64_t chi, IntPoly& out) {
        NuProductSum acc(net.base(), ell);
        for_each_point(net, clo, chi, [&](std::uint64_t, const DigitMatrix& x) { acc.add_point(x); });
        out = acc.take();
    });
    IntPoly total;
    for (auto& p : partials) total += p;
    return total;
}

}  // namespace

BigInt WeightEnumerator::unscaled(int a) const {
    const BigInt& c = scaled.coeff(a);
    if (c % scale != 0) throw_internal("scaled coefficient not divisible by b^m");
    return c / scale;
}

WeightEnumerator truncated_wep(const DigitalNet& net, int ell, int threads) {
    if (ell < 1) throw_input("truncation degree must be >= 1");
    if (ell > net.n()) throw_input("truncation degree cannot exceed the digit depth n");
    IntPoly sum = nu_sum_over_net(net, ell, 0, net.point_count(), threads);
    WeightEnumerator w;
    w.scaled = trunc_mul(geometric_factor(net.base(), ell, net.s()), sum, ell);
    w.scale = big_pow(net.base(), unsigned(net.m()));
    w.valid_to = ell;
    w.full = false;
    w.m = net.m();
    return w;
}

namespace {

struct FullBuckets {
    std::vector<IntPoly> by_zero_rows;  // index r: points with exactly r zero rows
};

/// Binomial product over the nonzero rows, in the substituted variable Z.
void full_wep_point(const DigitMatrix& x, std::vector<BigInt>& prod, FullBuckets& out) {
    int zero_rows = 0;
    int deg = 0;
    for (auto& c : prod) c = 0;
    prod[0] = 1;
    for (int i = 0; i < x.rows; ++i) {
        const int h = mu_star(x.row(i), x.cols);
        if (h == 0) {
            ++zero_rows;
            continue;
        }
        for (int a = deg + h; a >= h; --a) prod[std::size_t(a)] -= prod[std::size_t(a - h)];
        deg += h;
    }
    IntPoly& bucket = out.by_zero_rows[std::size_t(zero_rows)];
    for (int a = 0; a <= deg; ++a)
        if (prod[std::size_t(a)] != 0) bucket.at(a) += prod[std::size_t(a)];
}

}  // namespace

WeightEnumerator full_wep(const DigitalNet& net, int threads) {
    const int s = net.s();
    const int n = net.n();
    const std::uint32_t b = net.base();
    const int top = n * s;

    auto partials = run_chunks<FullBuckets>(
        0, net.point_count(), threads, [&](std::uint64_t clo, std::uint64_t chi, FullBuckets& out) {
            out.by_zero_rows.assign(std::size_t(s) + 1, IntPoly());
            std::vector<BigInt> prod(std::size_t(top) + 1);
            for_each_point(net, clo, chi, [&](std::uint64_t, const DigitMatrix& x) { full_wep_point(x, prod, out); });
        });
    std::vector<IntPoly> buckets(std::size_t(s) + 1);
    for (auto& p : partials) {
        if (p.by_zero_rows.empty()) continue;
        for (int r = 0; r <= s; ++r) buckets[std::size_t(r)] += p.by_zero_rows[std::size_t(r)];
    }

    // Each point with r zero rows contributed prod_{nonzero} (1 - Z^{h_i});
    // restore prod_i row_factor(h_i) = row_factor(0)^r (1-z)^{s-r} prod (1-Z^{h_i})/(1-Z)
    // with Z = bz, then sum the buckets.
    const IntPoly p0 = row_factor(0, n, b);
    IntPoly one_minus_z;
    one_minus_z.at(0) = 1;
    one_minus_z.at(1) = -1;

    IntPoly total;
    for (int r = 0; r <= s; ++r) {
        IntPoly q = buckets[std::size_t(r)];
        if (q.is_zero()) continue;
        for (int k = 0; k < s - r; ++k) q = div_one_minus_cz_exact(q, 1);
        // substitute Z = bz
        BigInt scale = 1;
        IntPoly sub;
        for (int a = 0; a <= q.degree(); ++a) {
            if (q.coeff(a) != 0) sub.at(a) = q.coeff(a) * scale;
            scale *= b;
        }
        IntPoly term = trunc_mul(sub, pow_trunc(one_minus_z, unsigned(s - r), top), top);
        term = trunc_mul(term, pow_trunc(p0, unsigned(r), top), top);
        total += term;
    }

    WeightEnumerator w;
    w.scaled = std::move(total);
    w.scale = big_pow(b, unsigned(net.m()));
    w.valid_to = top;
    w.full = true;
    w.m = net.m();
    return w;
}

int t_from_wep(const WeightEnumerator& w, int m) {
    if (w.m != m) throw_input("enumerator was computed for a different m");
    int min_a = w.valid_to + 1;
    for (int a = 1; a <= w.valid_to; ++a) {
        if (w.scaled.coeff(a) != 0) {
            min_a = a;
            break;
        }
    }
    return m + 1 - min_a;
}

LowerBoundReport general_lower_bound(const std::vector<DigitMatrix>& points, const GroupSpec& spec, int m,
                                     int threads) {
    if (points.empty()) throw_input("point set is empty");
    const int s = points.front().rows;
    std::uint64_t expect = 1;
    for (int i = 0; i < m; ++i) expect *= spec.order();
    if (points.size() != expect) throw_input("point multiset must hold exactly b^m points");
    for (const auto& p : points)
        if (p.rows != s || p.cols != points.front().cols) throw_input("point shapes differ");

    const int ell = m;
    auto partials = run_chunks<IntPoly>(0, points.size(), threads,
                                        [&](std::uint64_t clo, std::uint64_t chi, IntPoly& out) {
                                            NuProductSum acc(spec.order(), ell);
                                            for (std::uint64_t i = clo; i < chi; ++i)
                                                acc.add_point(points[std::size_t(i)]);
                                            out = acc.take();
                                        });
    IntPoly sum;
    for (auto& p : partials) sum += p;

    LowerBoundReport rep;
    rep.wep.scaled = trunc_mul(geometric_factor(spec.order(), ell, s), sum, ell);
    rep.wep.scale = big_pow(spec.order(), unsigned(m));
    rep.wep.valid_to = ell;
    rep.wep.full = false;
    rep.wep.m = m;
    rep.bound = t_from_wep(rep.wep, m);
    return rep;
}

MultivariateEnumerator multivariate_wep(const DigitalNet& net, int cap, GwLimits limits) {
    const int s = net.s();
    const int n = net.n();
    if (cap < 0) cap = net.m();
    if (s > limits.dim_cap) throw_resource("dimension exceeds the multivariate enumerator cap");

    // Coefficient tables of the row factors, indexed by first-nonzero position.
    std::vector<std::vector<BigInt>> factor(std::size_t(n) + 1);
    for (int h = 0; h <= n; ++h) {
        const IntPoly p = row_factor(h, n, net.base());
        factor[std::size_t(h)].resize(std::size_t(p.degree()) + 1);
        for (int a = 0; a <= p.degree(); ++a) factor[std::size_t(h)][std::size_t(a)] = p.coeff(a);
    }

    MultiPoly acc(s);
    std::map<MultiPoly::Key, BigInt> point_terms;
    for_each_point(net, 0, net.point_count(), [&](std::uint64_t, const DigitMatrix& x) {
        point_terms.clear();
        point_terms.emplace(MultiPoly::Key(std::size_t(s), 0), BigInt(1));
        for (int i = 0; i < s; ++i) {
            const int h = mu_star(x.row(i), x.cols);
            const auto& coeffs = factor[std::size_t(h)];
            std::map<MultiPoly::Key, BigInt> next;
            for (const auto& [key, c] : point_terms) {
                const int td = MultiPoly::total_degree(key);
                const int amax = std::min(int(coeffs.size()) - 1, cap - td);
                for (int a = 0; a <= amax; ++a) {
                    if (coeffs[std::size_t(a)] == 0) continue;
                    MultiPoly::Key k2 = key;
                    k2[std::size_t(i)] = std::uint16_t(a);
                    next[k2] += c * coeffs[std::size_t(a)];
                }
            }
            point_terms.swap(next);
        }
        for (const auto& [key, c] : point_terms) acc.add_term(key, c);
        if (acc.term_count() > limits.term_guard)
            throw_resource("multivariate enumerator exceeded the term guard");
    });

    MultivariateEnumerator gw;
    gw.poly = std::move(acc);
    gw.scale = big_pow(net.base(), unsigned(net.m()));
    gw.cap = cap;
    gw.s = s;
    gw.m = net.m();
    gw.n = n;
    return gw;
}

WeightEnumerator projection_wep(const MultivariateEnumerator& gw, const std::vector<int>& u) {
    if (u.empty()) throw_input("projection needs a nonempty coordinate set");
    std::vector<bool> keep(std::size_t(gw.s), false);
    for (int c : u) {
        if (c < 1 || c > gw.s) throw_input("projection coordinate out of range");
        keep[std::size_t(c - 1)] = true;
    }
    WeightEnumerator w;
    for (const auto& [key, c] : gw.poly.terms()) {
        bool inside = true;
        for (int i = 0; i < gw.s && inside; ++i)
            if (!keep[std::size_t(i)] && key[std::size_t(i)] != 0) inside = false;
        if (inside) w.scaled.at(MultiPoly::total_degree(key)) += c;
    }
    w.scale = gw.scale;
    w.valid_to = gw.cap;
    w.full = false;
    w.m = gw.m;
    return w;
}

std::optional<WorstProjection> worst_projection(const MultivariateEnumerator& gw, int s_prime) {
    if (s_prime < 1 || s_prime > gw.s) throw_input("support bound must be in 1..s");

    struct Best {
        int support_size = 0;
        std::vector<int> support;
        bool set = false;
    };
    std::vector<Best> best(std::size_t(gw.cap) + 1);
    for (const auto& [key, c] : gw.poly.terms()) {
        const int d = MultiPoly::total_degree(key);
        if (d < 1 || d > gw.cap) continue;
        std::vector<int> supp;
        for (int i = 0; i < gw.s; ++i)
            if (key[std::size_t(i)] != 0) supp.push_back(i + 1);
        Best& slot = best[std::size_t(d)];
        if (!slot.set || int(supp.size()) < slot.support_size ||
            (int(supp.size()) == slot.support_size && supp < slot.support)) {
            slot.set = true;
            slot.support_size = int(supp.size());
            slot.support = std::move(supp);
        }
    }
    for (int d = 1; d <= gw.cap; ++d) {
        const Best& slot = best[std::size_t(d)];
        if (slot.set && slot.support_size <= s_prime)
            return WorstProjection{slot.support, gw.m + 1 - d, d};
    }
    return std::nullopt;
}

WorstProjection worst_projection_search(const DigitalNet& net, int s_prime, GwLimits limits) {
    const int decisive_cap = std::min(net.m() + 1, net.n() * net.s());
    auto gw = multivariate_wep(net, decisive_cap, limits);
    if (auto wp = worst_projection(gw, s_prime)) return *wp;
    // No monomial with support <= s_prime exists at all, so every projection
    // onto that many coordinates has a trivial dual. A trivial dual needs
    // b^m >= b^{n |u|}, which forces n = m and t' = 0.
    if (net.n() != net.m()) throw_internal("empty worst-projection search with n > m");
    return WorstProjection{{1}, 0, net.n() + 1};
}

Accumulator::Accumulator(const DigitalNet& net, int ell) : net_(&net), ell_(ell) {
    if (ell_ < 1) throw_input("truncation degree must be >= 1");
    if (ell_ > net.n()) throw_input("truncation degree cannot exceed the digit depth n");
}

void Accumulator::add_range(std::uint64_t lo, std::uint64_t hi, int threads) {
    if (lo > hi || hi > net_->point_count()) throw_input("point range out of bounds");
    if (lo == hi) return;
    partial_ += nu_sum_over_net(*net_, ell_, lo, hi, threads);
    seen_ += hi - lo;
}

void Accumulator::merge(const Accumulator& other) {
    if (other.net_->base() != net_->base() || other.net_->s() != net_->s() || other.ell_ != ell_)
        throw_input("accumulator configurations differ");
    partial_ += other.partial_;
    seen_ += other.seen_;
}

WeightEnumerator Accumulator::finalize(int m_r) const {
    if (m_r < 1) throw_input("finalize needs m >= 1");
    std::uint64_t expect = 1;
    for (int i = 0; i < m_r; ++i) expect *= net_->base();
    if (seen_ != expect) throw_input("accumulator does not hold exactly b^m points");
    WeightEnumerator w;
    w.scaled = trunc_mul(geometric_factor(net_->base(), ell_, net_->s()), partial_, ell_);
    w.scale = big_pow(net_->base(), unsigned(m_r));
    w.valid_to = ell_;
    w.full = false;
    w.m = m_r;
    return w;
}

}  // namespace dignet
