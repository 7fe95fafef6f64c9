#include "hmalab/weight.hpp"

#include <algorithm>

namespace hmalab {

TowerNat TowerNat::from_uint(std::uint64_t n) {
    TowerNat out;
    for (int bit = 63; bit >= 0; --bit)
        if (n >> bit & 1U) out.exps_.push_back(from_uint(static_cast<std::uint64_t>(bit)));
    return out;
}

std::optional<std::uint64_t> TowerNat::to_uint() const {
    std::uint64_t total = 0;
    for (const auto& e : exps_) {
        auto bit = e.to_uint();
        if (!bit || *bit > 63) return std::nullopt;
        total |= std::uint64_t{1} << *bit;
    }
    return total;
}

std::string TowerNat::to_string() const {
    if (auto n = to_uint()) return std::to_string(*n);
    std::string out;
    for (const auto& e : exps_) {
        if (!out.empty()) out += " + ";
        out += "2^(" + e.to_string() + ")";
    }
    return out;
}

void TowerNat::insert_power(TowerNat e) {
    for (;;) {
        auto it = std::lower_bound(exps_.begin(), exps_.end(), e,
                                   [](const TowerNat& a, const TowerNat& b) { return a > b; });
        if (it == exps_.end() || *it != e) {
            exps_.insert(it, std::move(e));
            return;
        }
        exps_.erase(it);
        e = e + from_uint(1);
    }
}

TowerNat TowerNat::operator+(const TowerNat& rhs) const {
    TowerNat out = *this;
    for (const auto& e : rhs.exps_) out.insert_power(e);
    return out;
}

TowerNat TowerNat::shifted(const TowerNat& k) const {
    TowerNat out;
    out.exps_.reserve(exps_.size());
    for (const auto& e : exps_) out.exps_.push_back(e + k);
    return out;
}

std::strong_ordering operator<=>(const TowerNat& lhs, const TowerNat& rhs) {
    const std::size_t n = std::min(lhs.exps_.size(), rhs.exps_.size());
    for (std::size_t i = 0; i < n; ++i)
        if (auto c = lhs.exps_[i] <=> rhs.exps_[i]; c != std::strong_ordering::equal) return c;
    return lhs.exps_.size() <=> rhs.exps_.size();
}

std::optional<BigInt> Weight::exact(std::uint64_t max_bits) const {
    auto bits = log2_.to_uint();
    if (!bits || *bits > max_bits) return std::nullopt;
    BigInt one = 1;
    return one << static_cast<unsigned>(*bits);
}

std::string Weight::to_string() const {
    if (auto w = exact()) return w->str();
    return "2^(" + log2_.to_string() + ")";
}

const TowerNat& WeightCache::log2(const Term& t) {
    if (auto it = memo_.find(t.identity()); it != memo_.end()) return it->second.second;
    TowerNat value;
    if (t.is_cond()) {
        // log2 w(x <| y |> z) = (log2 w(x) + log2 w(z)) * w(y)
        const TowerNat& ly = log2(t.condition());
        value = (log2(t.then_branch()) + log2(t.else_branch())).shifted(ly);
    } else {
        value = TowerNat::from_uint(1);
    }
    return memo_.emplace(t.identity(), std::make_pair(t, std::move(value))).first->second.second;
}

Weight WeightCache::weight(const Term& t) { return Weight(log2(t)); }

Weight weight(const Term& t) { return WeightCache().weight(t); }

}  // namespace hmalab
