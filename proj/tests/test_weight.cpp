#include <doctest.h>

#include <random>

#include "hmalab/decide.hpp"
#include "hmalab/syntax.hpp"
#include "hmalab/weight.hpp"

using namespace hmalab;

namespace {

// w(x <| y |> z) = (w(x) * w(z)) ^ w(y) straight from the definition, giving up on huge exponents.
std::optional<BigInt> direct_weight(const Term& t) {
    if (!t.is_cond()) return BigInt(2);
    auto x = direct_weight(t.then_branch());
    auto y = direct_weight(t.condition());
    auto z = direct_weight(t.else_branch());
    if (!x || !y || !z || *y > 64) return std::nullopt;
    return boost::multiprecision::pow(*x * *z, static_cast<unsigned>(*y));
}

}  // namespace

TEST_CASE("weights of small terms") {
    CHECK(weight(parse_term("T")).exact() == BigInt(2));
    CHECK(weight(parse_term("a")).exact() == BigInt(2));
    CHECK(weight(parse_term("T <| a |> F")).exact() == BigInt(16));
    CHECK(weight(parse_term("(T <| a |> F) <| b |> T")).exact() == BigInt(1024));
    CHECK(weight(parse_term("T <| a |> F")).to_string() == "16");
}

TEST_CASE("TowerNat arithmetic") {
    for (std::uint64_t i = 0; i < 40; ++i)
        for (std::uint64_t j = 0; j < 40; ++j) {
            auto a = TowerNat::from_uint(i), b = TowerNat::from_uint(j);
            CHECK((a + b).to_uint() == i + j);
            CHECK(((a <=> b) == (i <=> j)));
            if (j < 8) CHECK(a.shifted(b).to_uint() == i << j);
        }
}

TEST_CASE("weight agrees with the defining recurrence") {
    std::mt19937_64 rng(11);
    const auto atoms = Alphabet::from_names({"a", "b"});
    int compared = 0;
    for (int i = 0; i < 400; ++i) {
        Term t = random_term(rng, atoms, {3, 0.4, 0.4});
        auto expected = direct_weight(t);
        if (!expected) continue;
        ++compared;
        CHECK(weight(t).exact() == *expected);
    }
    CHECK(compared > 100);
}

TEST_CASE("weights beyond exact range stay comparable") {
    Term t = parse_term("T <| a |> F");
    for (int i = 0; i < 6; ++i) t = Term::cond(t, t, t);
    const Weight w = weight(t);
    CHECK_FALSE(w.exact().has_value());
    CHECK(w.to_string().rfind("2^(", 0) == 0);
    CHECK(weight(Term::cond(t, t, Term::top())) > w);
}
