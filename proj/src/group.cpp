#include "dignet/group.hpp"

#include <functional>
#include <mutex>
#include <numeric>
#include <unordered_map>

#include "dignet/error.hpp"
#include "dignet/poly.hpp"

namespace dignet {

namespace {
constexpr std::uint32_t kMaxOrder = 1024;  // dense b x b tables
}

GroupSpec::GroupSpec(std::vector<std::uint32_t> factors) : factors_(std::move(factors)) {
    if (factors_.empty()) throw_input("group needs at least one cyclic factor");
    std::uint64_t b = 1;
    std::uint64_t e = 1;
    for (auto q : factors_) {
        if (q < 2) throw_input("cyclic factor orders must be >= 2");
        b *= q;
        e = std::lcm(e, std::uint64_t(q));
        if (b > kMaxOrder) throw_input("group order exceeds the supported maximum (1024)");
    }
    b_ = std::uint32_t(b);
    e_ = std::uint32_t(e);

    add_.resize(std::size_t(b_) * b_);
    neg_.resize(b_);
    pair_.resize(std::size_t(b_) * b_);

    std::vector<GroupElement> elems(b_);
    for (std::uint32_t v = 0; v < b_; ++v) elems[v] = element(v);

    for (std::uint32_t x = 0; x < b_; ++x) {
        GroupElement nx;
        nx.residues.resize(factors_.size());
        for (std::size_t i = 0; i < factors_.size(); ++i)
            nx.residues[i] = (factors_[i] - elems[x].residues[i]) % factors_[i];
        neg_[x] = std::uint16_t(symbol(nx));
        for (std::uint32_t y = 0; y < b_; ++y) {
            add_[std::size_t(x) * b_ + y] = std::uint16_t(symbol(group_add(elems[x], elems[y], *this)));
            pair_[std::size_t(x) * b_ + y] = pair_exponent(elems[x], elems[y], *this);
        }
    }
}

GroupSpec GroupSpec::cyclic(std::uint32_t order) { return GroupSpec(std::vector<std::uint32_t>{order}); }

GroupElement GroupSpec::element(std::uint32_t symbol) const {
    if (symbol >= b_) throw_input("group symbol out of range");
    GroupElement g;
    g.residues.resize(factors_.size());
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        g.residues[i] = symbol % factors_[i];
        symbol /= factors_[i];
    }
    return g;
}

std::uint32_t GroupSpec::symbol(const GroupElement& g) const {
    if (g.residues.size() != factors_.size()) throw_input("element arity does not match the group");
    std::uint32_t acc = 0;
    std::uint32_t place = 1;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (g.residues[i] >= factors_[i]) throw_input("element residue out of range");
        acc += g.residues[i] * place;
        place *= factors_[i];
    }
    return acc;
}

GroupElement group_add(const GroupElement& g, const GroupElement& h, const GroupSpec& spec) {
    const auto& q = spec.factors();
    if (g.residues.size() != q.size() || h.residues.size() != q.size())
        throw_input("element arity does not match the group");
    GroupElement r;
    r.residues.resize(q.size());
    for (std::size_t i = 0; i < q.size(); ++i) {
        if (g.residues[i] >= q[i] || h.residues[i] >= q[i]) throw_input("element residue out of range");
        r.residues[i] = (g.residues[i] + h.residues[i]) % q[i];
    }
    return r;
}

std::uint32_t pair_exponent(const GroupElement& k, const GroupElement& x, const GroupSpec& spec) {
    const auto& q = spec.factors();
    if (k.residues.size() != q.size() || x.residues.size() != q.size())
        throw_input("element arity does not match the group");
    const std::uint64_t e = spec.exponent();
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < q.size(); ++i) {
        if (k.residues[i] >= q[i] || x.residues[i] >= q[i]) throw_input("element residue out of range");
        const std::uint64_t stride = e / q[i];
        acc = (acc + std::uint64_t(k.residues[i]) % e * (x.residues[i] % e) % e * stride) % e;
    }
    return std::uint32_t(acc);
}

BigInt ExponentTally::total() const {
    BigInt t = 0;
    for (const auto& c : counts) t += c;
    return t;
}

const IntPoly& cyclotomic(std::uint32_t e) {
    static std::mutex mu;
    static std::unordered_map<std::uint32_t, IntPoly> cache;
    if (e == 0) throw_input("cyclotomic index must be >= 1");

    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(e);
    if (it != cache.end()) return it->second;

    // Phi_e = (Y^e - 1) / prod_{d | e, d < e} Phi_d, by exact monic division.
    std::function<const IntPoly&(std::uint32_t)> get = [&](std::uint32_t k) -> const IntPoly& {
        auto hit = cache.find(k);
        if (hit != cache.end()) return hit->second;
        IntPoly num = IntPoly::monomial(1, int(k)) - IntPoly::one();
        for (std::uint32_t d = 1; d < k; ++d) {
            if (k % d != 0) continue;
            auto [q, r] = divmod_monic(num, get(d));
            if (!r.is_zero()) throw_internal("cyclotomic division left a remainder");
            num = std::move(q);
        }
        return cache.emplace(k, std::move(num)).first->second;
    };
    return get(e);
}

bool char_sum_is_zero(const ExponentTally& tally, std::uint32_t e) {
    if (e == 0) throw_input("exponent must be >= 1");
    // Fold the tally mod Y^e - 1, then test divisibility by Phi_e.
    IntPoly folded;
    for (std::size_t j = 0; j < tally.counts.size(); ++j)
        if (tally.counts[j] != 0) folded.at(int(j % e)) += tally.counts[j];
    if (folded.is_zero()) return true;
    if (e == 1) return false;  // a nonzero integer
    auto [q, r] = divmod_monic(folded, cyclotomic(e));
    return r.is_zero();
}

}  // namespace dignet
