#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hmalab/term.hpp"

namespace hmalab {

using BigInt = boost::multiprecision::cpp_int;

// Natural number written as a sum of distinct powers of two whose exponents are
// again such numbers. Keeps towers like (w(x)w(z))^w(y) exact and comparable.
class TowerNat {
public:
    TowerNat() = default;  // zero
    static TowerNat from_uint(std::uint64_t n);

    bool is_zero() const { return exps_.empty(); }
    std::optional<std::uint64_t> to_uint() const;
    std::string to_string() const;

    TowerNat operator+(const TowerNat& rhs) const;
    TowerNat shifted(const TowerNat& k) const;  // this * 2^k

    friend std::strong_ordering operator<=>(const TowerNat& lhs, const TowerNat& rhs);
    friend bool operator==(const TowerNat& lhs, const TowerNat& rhs) {
        return (lhs <=> rhs) == std::strong_ordering::equal;
    }

private:
    void insert_power(TowerNat e);
    std::vector<TowerNat> exps_;  // strictly descending
};

// w(t) = 2^log2. Every weight is a power of two because leaves weigh 2.
class Weight {
public:
    explicit Weight(TowerNat log2) : log2_(std::move(log2)) {}

    const TowerNat& log2() const { return log2_; }
    std::optional<BigInt> exact(std::uint64_t max_bits = 1u << 16) const;
    std::string to_string() const;

    friend auto operator<=>(const Weight&, const Weight&) = default;
    friend bool operator==(const Weight&, const Weight&) = default;

private:
    TowerNat log2_;
};

// Memoizes by node identity; keeps the nodes alive so identities stay unique.
class WeightCache {
public:
    Weight weight(const Term& t);

private:
    const TowerNat& log2(const Term& t);
    std::unordered_map<const void*, std::pair<Term, TowerNat>> memo_;
};

Weight weight(const Term& t);

}  // namespace hmalab
