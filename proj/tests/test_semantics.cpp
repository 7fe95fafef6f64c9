#include <doctest.h>

#include <random>

#include "hmalab/decide.hpp"
#include "hmalab/errors.hpp"
#include "hmalab/semantics.hpp"
#include "hmalab/syntax.hpp"

using namespace hmalab;

namespace {

AtomString s(const char* text) { return parse_atom_string(text); }
Term p(const char* text) { return parse_term(text); }
const Alphabet ab = Alphabet::from_names({"a", "b"});

TruncatedState state_with(StateClass c, std::size_t depth, std::map<std::string, bool> values) {
    return TruncatedState::build(c, ab, depth, [&](const AtomString& k) {
        auto it = values.find(to_string(k));
        return it != values.end() && it->second;
    });
}

// All tables on the class domain, kept when the literal constraint check accepts them.
std::set<TruncatedState::Table> brute_force_states(StateClass c, std::size_t depth) {
    const auto domain = admissible_strings(c, ab, depth);
    std::set<TruncatedState::Table> out;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << domain.size()); ++bits) {
        TruncatedState::Table table;
        for (std::size_t i = 0; i < domain.size(); ++i) table[domain[i]] = (bits >> i) & 1;
        TruncatedState f(c, ab, depth, table);
        if (class_constraint_check(f)) out.insert(table);
    }
    return out;
}

}  // namespace

TEST_CASE("string operations") {
    CHECK(contract_runs(s("a.a.b")) == s("a.b"));
    CHECK(contract_runs(s("a")) == s("a"));
    CHECK(contract_runs(s("a.b.b.a")) == s("a.b.a"));

    const Atom a("a");
    CHECK(leadsto(a, s("a")) == s("a"));
    CHECK(leadsto(a, s("b")) == s("a.b"));
    CHECK(leadsto(a, s("a.b")) == s("a.b"));

    CHECK(remove_atom(s("a.b"), a) == s("b"));
    CHECK(remove_atom(s("b"), a) == s("b"));
    CHECK(remove_atom(s("a"), a).empty());

    CHECK(in_cr(s("a.b.a")));
    CHECK_FALSE(in_cr(s("a.a")));
    CHECK(in_core(s("a.b")));
    CHECK_FALSE(in_core(s("a.b.a")));
    CHECK(to_string(s("a.b")) == "a.b");
}

TEST_CASE("admissible domains") {
    CHECK(admissible_strings(StateClass::CR, ab, 2) == std::vector{s("a"), s("b"), s("a.b"), s("b.a")});
    CHECK(admissible_strings(StateClass::MEM, ab, 99) == std::vector{s("a"), s("b"), s("a.b"), s("b.a")});
    CHECK(admissible_strings(StateClass::ST, ab, 5) == std::vector{s("a"), s("b")});
    CHECK(admissible_strings(StateClass::FREE, ab, 2).size() == 6);
}

TEST_CASE("state counts") {
    CHECK(enumerate_states(StateClass::ST, ab, 4).size() == 4);
    CHECK(enumerate_states(StateClass::MEM, ab, 99).size() == 16);
    CHECK(enumerate_states(StateClass::CR, Alphabet::from_names({"a"}), 3).size() == 2);
    CHECK(enumerate_states(StateClass::FREE, ab, 2).size() == 64);
}

TEST_CASE("class constraints") {
    auto rp = state_with(StateClass::RP, 2, {{"a", true}, {"a.a", false}});
    CHECK_FALSE(class_constraint_check(rp));
    CHECK(constraint_violation(rp));

    auto wm = state_with(StateClass::WM, 4, {{"a", true}, {"a.b", true}, {"a.b.a.b", false}});
    CHECK_FALSE(class_constraint_check(wm));

    for (const auto& f : enumerate_states(StateClass::ST, ab, 3)) CHECK(class_constraint_check(f));
}

TEST_CASE("generated states are exactly the constrained tables") {
    for (auto c : {StateClass::RP, StateClass::CR, StateClass::WM, StateClass::MEM})
        for (std::size_t depth : {2u, 3u}) {
            std::set<TruncatedState::Table> generated;
            for (const auto& f : enumerate_states(c, ab, depth)) {
                CHECK(class_constraint_check(f));
                generated.insert(f.table());
            }
            CHECK_MESSAGE(generated == brute_force_states(c, depth), to_string(c) << " depth " << depth);
        }
}

TEST_CASE("WM block states satisfy the literal condition at depth 5") {
    std::size_t n = 0;
    for_each_state(StateClass::WM, ab, 5, [&](const TruncatedState& f) {
        ++n;
        CHECK(class_constraint_check(f));
    });
    CHECK(n > 0);
}

TEST_CASE("apply_atom") {
    const Atom a("a"), b("b");
    auto free = state_with(StateClass::FREE, 3, {{"a.b", true}});
    auto g = apply_atom(a, free);
    CHECK(g.depth_budget() == 2);
    CHECK(g.at(s("b")) == free.at(s("a.b")));
    CHECK(g.at(s("b")));

    auto mem = state_with(StateClass::MEM, 2, {{"a", true}, {"b.a", false}});
    CHECK(apply_atom(a, mem).at(s("b.a")) == mem.at(s("a")));

    auto st = state_with(StateClass::ST, 1, {{"a", true}});
    CHECK(apply_atom(a, st) == st);
}

TEST_CASE("evaluate") {
    auto f = state_with(StateClass::FREE, 3, {{"a", true}, {"b", true}});
    CHECK(reply(p("T"), f));
    CHECK(apply(p("T"), f) == f);
    CHECK(apply(p("F"), f) == f);
    CHECK_FALSE(reply(p("T <| (F <| a |> F) |> b"), f));
    CHECK(reply(p("b"), f));

    auto shallow = state_with(StateClass::FREE, 1, {});
    CHECK_THROWS_AS(evaluate(p("a && b"), shallow), BudgetExhausted);

    auto st = state_with(StateClass::ST, 1, {{"a", true}});
    auto e = evaluate(p("a"), st);
    CHECK(e.reply);
    CHECK(e.state == st);
}

TEST_CASE("MEM history shortcut") {
    // after a then b, a repeated a reads its memorized reply
    CHECK(history_lookup(StateClass::MEM, s("a.b"), s("a")) == s("a"));
    CHECK(history_lookup(StateClass::MEM, s("a"), s("b")) == s("a.b"));
    CHECK(history_lookup(StateClass::FREE, s("a.b"), s("a")) == s("a.b.a"));
    CHECK(history_lookup(StateClass::ST, s("a.b"), s("a")) == s("a"));
}

TEST_CASE("state files") {
    auto f = state_with(StateClass::CR, 2, {{"a", true}, {"b.a", true}});
    const std::string text = write_state(f, "a.b");
    auto back = read_state(text);
    CHECK(back.state == f);
    CHECK(back.probe == "a.b");

    CHECK_THROWS_AS(read_state("class: CR\nalphabet: a\ndepth: 1\n"), ConstraintViolation);
    CHECK_THROWS_AS(read_state("class: RP\nalphabet: a\ndepth: 2\na = T\na.a = F\n"), ConstraintViolation);
}

TEST_CASE("enumeration guard") {
    CHECK(required_choices(StateClass::FREE, ab, 2) == 6);
    CHECK_THROWS_AS(for_each_state(StateClass::FREE, ab, 6, [](const TruncatedState&) {}), GuardViolation);
}
