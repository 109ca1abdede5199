#include "dignet/poly.hpp"

#include <algorithm>

#include "dignet/error.hpp"

namespace dignet {

namespace {
const BigInt kZero = 0;
}

IntPoly IntPoly::monomial(BigInt coeff, int deg) {
    if (deg < 0) throw_input("monomial degree must be >= 0");
    IntPoly p;
    p.c_.resize(std::size_t(deg) + 1);
    p.c_[std::size_t(deg)] = std::move(coeff);
    return p;
}

int IntPoly::degree() const {
    for (std::size_t i = c_.size(); i > 0; --i)
        if (c_[i - 1] != 0) return int(i - 1);
    return -1;
}

const BigInt& IntPoly::coeff(int a) const {
    if (a < 0 || std::size_t(a) >= c_.size()) return kZero;
    return c_[std::size_t(a)];
}

BigInt& IntPoly::at(int a) {
    if (a < 0) throw_input("negative degree");
    if (std::size_t(a) >= c_.size()) c_.resize(std::size_t(a) + 1);
    return c_[std::size_t(a)];
}

void IntPoly::truncate(int cap) {
    if (cap < 0) {
        c_.clear();
        return;
    }
    if (c_.size() > std::size_t(cap) + 1) c_.resize(std::size_t(cap) + 1);
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

IntPoly& IntPoly::operator*=(const BigInt& k) {
    for (auto& c : c_) c *= k;
    return *this;
}

bool operator==(const IntPoly& a, const IntPoly& b) {
    const int da = a.degree();
    if (da != b.degree()) return false;
    for (int i = 0; i <= da; ++i)
        if (a.c_[std::size_t(i)] != b.c_[std::size_t(i)]) return false;
    return true;
}

BigInt IntPoly::eval(const BigInt& x) const {
    BigInt acc = 0;
    for (std::size_t i = c_.size(); i > 0; --i) {
        acc *= x;
        acc += c_[i - 1];
    }
    return acc;
}

IntPoly trunc_mul(const IntPoly& p, const IntPoly& q, int cap) {
    if (cap < 0) throw_input("truncation degree must be >= 0");
    const int dp = p.degree();
    const int dq = q.degree();
    IntPoly r;
    if (dp < 0 || dq < 0) return r;
    const int dr = std::min(cap, dp + dq);
    r.at(dr);  // size once
    for (int i = 0; i <= std::min(dp, dr); ++i) {
        if (p.coeff(i) == 0) continue;
        const int jmax = std::min(dq, dr - i);
        for (int j = 0; j <= jmax; ++j) {
            if (q.coeff(j) == 0) continue;
            r.at(i + j) += p.coeff(i) * q.coeff(j);
        }
    }
    return r;
}

IntPoly mul(const IntPoly& p, const IntPoly& q) {
    const int dp = p.degree();
    const int dq = q.degree();
    if (dp < 0 || dq < 0) return IntPoly();
    return trunc_mul(p, q, dp + dq);
}

IntPoly pow_trunc(const IntPoly& p, unsigned e, int cap) {
    IntPoly acc = IntPoly::one();
    IntPoly base = p;
    base.truncate(cap);
    while (e) {
        if (e & 1u) acc = trunc_mul(acc, base, cap);
        e >>= 1u;
        if (e) base = trunc_mul(base, base, cap);
    }
    return acc;
}

IntPoly div_one_minus_cz_exact(const IntPoly& p, const BigInt& c) {
    // p = q * (1 - cz)  <=>  q_a = p_a + c*q_{a-1}, with the top running sum
    // required to vanish.
    const int dp = p.degree();
    if (dp < 0) return IntPoly();
    IntPoly q;
    BigInt run = 0;
    for (int a = 0; a < dp; ++a) {
        run *= c;
        run += p.coeff(a);
        q.at(a) = run;
    }
    run *= c;
    run += p.coeff(dp);
    if (run != 0) throw_internal("division by (1 - c z) left a remainder");
    return q;
}

std::pair<IntPoly, IntPoly> divmod_monic(const IntPoly& p, const IntPoly& d) {
    const int dd = d.degree();
    if (dd < 0) throw_input("division by zero polynomial");
    if (d.coeff(dd) != 1) throw_input("divisor must be monic");
    IntPoly rem = p;
    IntPoly quot;
    for (int a = rem.degree(); a >= dd; a = rem.degree()) {
        const BigInt lead = rem.coeff(a);
        quot.at(a - dd) = lead;
        for (int j = 0; j <= dd; ++j) rem.at(a - dd + j) -= lead * d.coeff(j);
    }
    return {std::move(quot), std::move(rem)};
}

IntPoly row_factor(int h, int n, std::uint32_t b) {
    if (b < 2) throw_input("base must be >= 2");
    if (n < 0 || h < 0 || h > n) throw_input("row factor needs 0 <= h <= n");
    IntPoly p;
    p.at(0) = 1;
    if (h == 0) {
        BigInt prev = 1;
        for (int a = 1; a <= n; ++a) {
            BigInt cur = prev * b;
            p.at(a) = cur - prev;
            prev = std::move(cur);
        }
    } else {
        BigInt prev = 1;
        for (int a = 1; a < h; ++a) {
            BigInt cur = prev * b;
            p.at(a) = cur - prev;
            prev = std::move(cur);
        }
        p.at(h) = -prev;  // prev = b^{h-1}
    }
    return p;
}

IntPoly row_factor_closed(int h, int n, std::uint32_t b) {
    if (b < 2) throw_input("base must be >= 2");
    if (n < 0 || h < 0 || h > n) throw_input("row factor needs 0 <= h <= n");
    const int top = (h == 0) ? n + 1 : h;
    // (1-z) * (1 - (bz)^top)
    IntPoly num;
    num.at(0) = 1;
    num.at(1) -= 1;
    const BigInt btop = big_pow(b, unsigned(top));
    num.at(top) -= btop;
    num.at(top + 1) += btop;
    IntPoly q = div_one_minus_cz_exact(num, BigInt(b));
    if (h == 0) q.at(n + 1) += big_pow(b, unsigned(n));
    return q;
}

IntPoly geometric_factor(std::uint32_t b, int cap, int s) {
    if (b < 2) throw_input("base must be >= 2");
    if (cap < 0 || s < 1) throw_input("geometric factor needs cap >= 0, s >= 1");
    return pow_trunc(row_factor(0, cap, b), unsigned(s), cap);
}

const BigInt& PolyWindow::at_degree(long long a) const {
    const long long idx = a - offset;
    if (idx < 0 || std::size_t(idx) >= coeffs.size()) return kZero;
    return coeffs[std::size_t(idx)];
}

PolyWindow top_window_product(const std::vector<int>& mu, int m) {
    if (m < 0) throw_input("window needs m >= 0");
    const int s = int(mu.size());
    if (s < 1) throw_input("window needs at least one factor");
    // Reciprocal product prod_i (y^{e_i} - 1), e_i = m+1-mu_i, mod y^{m+2};
    // coefficient of y^j is the coefficient of z^{s(m+1)-j} in the original.
    std::vector<BigInt> w(std::size_t(m) + 2);
    w[0] = 1;
    for (int i = 0; i < s; ++i) {
        if (mu[i] < 0 || mu[i] > m + 1) throw_input("window exponent out of range");
        const int e = m + 1 - mu[i];
        for (int j = m + 1; j >= 0; --j) {
            if (j >= e)
                w[std::size_t(j)] = w[std::size_t(j - e)] - w[std::size_t(j)];
            else
                w[std::size_t(j)] = -w[std::size_t(j)];
        }
    }
    PolyWindow out;
    out.offset = (long long)(s - 1) * (m + 1);
    out.coeffs.resize(std::size_t(m) + 2);
    for (int j = 0; j <= m + 1; ++j) out.coeffs[std::size_t(m + 1 - j)] = std::move(w[std::size_t(j)]);
    return out;
}

void MultiPoly::add_term(const Key& key, const BigInt& coeff) {
    if (int(key.size()) != nvars_) throw_input("exponent vector arity mismatch");
    if (coeff == 0) return;
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, coeff);
        return;
    }
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
}

int MultiPoly::total_degree(const Key& key) {
    int d = 0;
    for (auto e : key) d += e;
    return d;
}

}  // namespace dignet
