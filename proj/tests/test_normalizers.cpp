#include <doctest.h>

#include <functional>
#include <random>

#include "hmalab/decide.hpp"
#include "hmalab/normalizers.hpp"
#include "hmalab/syntax.hpp"

using namespace hmalab;

namespace {

Term p(const char* s) { return parse_term(s); }
Term nf(const char* s, Congruence k) { return normal_form(p(s), k).term(); }

// Every basic form over `atoms` of depth at most `depth`.
std::vector<Term> all_basic_forms(const Alphabet& atoms, unsigned depth) {
    std::vector<Term> out{Term::top(), Term::bottom()};
    if (depth == 0) return out;
    const auto smaller = all_basic_forms(atoms, depth - 1);
    for (const auto& a : atoms.atoms())
        for (const auto& l : smaller)
            for (const auto& r : smaller) out.push_back(Term::cond(l, Term::atom(a), r));
    return out;
}

std::vector<Term> corpus(std::uint64_t seed, int n, std::size_t names = 2) {
    std::mt19937_64 rng(seed);
    std::vector<std::string> all{"a", "b", "c"};
    all.resize(names);
    const auto atoms = Alphabet::from_names(all);
    std::vector<Term> out;
    for (int i = 0; i < n; ++i) out.push_back(random_term(rng, atoms, {4, 0.3, 0.3}));
    return out;
}

}  // namespace

TEST_CASE("congruence names") {
    CHECK(parse_congruence("free") == Congruence::free);
    CHECK(parse_congruence("fr") == Congruence::free);
    CHECK(parse_congruence("wm") == Congruence::wm);
    CHECK_FALSE(parse_congruence("xx"));
    CHECK(to_string(Congruence::mem) == "mem");
}

TEST_CASE("basic_form") {
    CHECK(basic_form(p("a")).term() == p("T <| a |> F"));
    CHECK(basic_form(p("T")).term() == p("T"));
    CHECK(basic_form(p("b <| a |> T")).term() == p("(T <| b |> F) <| a |> T"));
}

TEST_CASE("rp_basic_form") {
    CHECK(nf("(T <| a |> F) <| a |> F", Congruence::rp) == p("(T <| a |> T) <| a |> F"));
    CHECK(nf("T <| a |> (T <| a |> F)", Congruence::rp) == p("T <| a |> (F <| a |> F)"));
    CHECK(nf("T <| a |> F", Congruence::rp) == p("T <| a |> F"));
}

TEST_CASE("cr_basic_form") {
    CHECK(nf("(T <| a |> F) <| a |> F", Congruence::cr) == p("T <| a |> F"));
    CHECK(nf("T <| a |> (F <| a |> (T <| a |> F))", Congruence::cr) == p("T <| a |> F"));
    CHECK(nf("(T <| b |> F) <| a |> T", Congruence::cr) == p("(T <| b |> F) <| a |> T"));
}

TEST_CASE("wm_basic_form") {
    CHECK(nf("(((T <| a |> F) <| b |> F) <| c |> T) <| a |> F", Congruence::wm) ==
          p("((T <| b |> F) <| c |> T) <| a |> F"));
    CHECK(nf("(T <| a |> F) <| a |> T", Congruence::wm) == p("T <| a |> T"));
    CHECK(nf("(T <| b |> F) <| a |> (T <| b |> F)", Congruence::wm) == p("(T <| b |> F) <| a |> (T <| b |> F)"));
}

TEST_CASE("mem_basic_form") {
    CHECK(nf("(T <| a |> F) <| a |> F", Congruence::mem) == p("T <| a |> F"));
    CHECK(nf("(T <| b |> F) <| a |> (F <| b |> T)", Congruence::mem) == p("(T <| b |> F) <| a |> (F <| b |> T)"));
    CHECK(nf("T <| a |> (F <| b |> (T <| a |> F))", Congruence::mem) == p("T <| a |> (F <| b |> F)"));
}

TEST_CASE("st_canonical") {
    auto order = [](std::vector<std::string> n) { return Alphabet::from_names(n); };
    CHECK(st_canonical(p("a"), order({"a"})).term() == p("T <| a |> F"));
    CHECK(st_canonical(p("T"), order({"a"})).term() == p("T <| a |> T"));
    CHECK(st_canonical(p("b && a"), order({"a", "b"})).term() == p("(T <| b |> F) <| a |> (F <| b |> F)"));
    CHECK_THROWS(st_canonical(p("c"), order({"a"})));
}

TEST_CASE("normalizers are idempotent and produce valid shapes") {
    const auto order = Alphabet::from_names({"a", "b", "c"});
    for (const auto& t : corpus(5, 300, 3)) {
        auto b = basic_form(t);
        CHECK(is_basic_form(b.term()));
        CHECK(basic_form(b.term()) == b);

        auto rp = rp_basic_form(t);
        CHECK(is_rp_basic(rp));
        CHECK(rp_basic_form(rp.term()) == rp);

        auto cr = cr_basic_form(t);
        CHECK(is_cr_basic(cr));
        CHECK(cr_basic_form(cr.term()) == cr);

        auto wm = wm_basic_form(t);
        CHECK(is_wm_basic(wm));
        CHECK(wm_basic_form(wm.term()) == wm);

        auto mem = mem_basic_form(t);
        CHECK(is_mem_basic(mem));
        CHECK(mem_basic_form(mem.term()) == mem);

        auto st = st_canonical(t, order);
        CHECK(is_st_canonical(st, order));
        CHECK(st_canonical(st.term(), order) == st);
    }
}

TEST_CASE("independent routes to the same normal form") {
    for (const auto& t : corpus(6, 300, 3)) {
        CHECK(compose_basic(t, plain_node) == basic_form(t));
        CHECK(compose_basic(t, mem_node) == mem_basic_form(t));
    }
}

TEST_CASE("refinement ladder of normalizers") {
    const auto terms = corpus(8, 120);
    const auto order = Alphabet::from_names({"a", "b"});
    std::size_t coincidences = 0;
    for (std::size_t i = 0; i < terms.size(); ++i)
        for (std::size_t j = i + 1; j < terms.size(); ++j) {
            const Term &t = terms[i], &u = terms[j];
            bool finer_equal = false;
            for (auto k : kCongruences) {
                const bool equal = k == Congruence::st ? st_canonical(t, order) == st_canonical(u, order)
                                                       : normal_form(t, k) == normal_form(u, k);
                if (finer_equal) CHECK(equal);
                finer_equal = equal;
                coincidences += equal;
            }
        }
    CHECK(coincidences > 0);
}

TEST_CASE("mem paths never repeat an atom") {
    std::function<bool(const Term&, std::set<Atom>)> clean = [&](const Term& t, std::set<Atom> seen) {
        if (t.is_constant()) return true;
        const Atom& a = t.condition().atom();
        if (!seen.insert(a).second) return false;
        return clean(t.then_branch(), seen) && clean(t.else_branch(), seen);
    };
    for (const auto& t : corpus(9, 300, 3)) CHECK(clean(mem_basic_form(t).term(), {}));
}

TEST_CASE("static evaluation") {
    const Atom a("a"), b("b");
    CHECK(static_value(p("b && a"), {{a, true}, {b, true}}));
    CHECK_FALSE(static_value(p("b && a"), {{a, true}, {b, false}}));
    CHECK(static_value(p("T <| a |> T"), {{a, false}}));
}

TEST_CASE("mem counts") {
    CHECK(count_mem(0) == 2);
    CHECK(count_mem(1) == 6);
    CHECK(count_mem(2) == 74);
    CHECK(count_mem(3) == 16430);
    CHECK(count_mem(4) == 4 * BigInt(16430) * 16430 + 2);
}

TEST_CASE("mem enumeration matches a brute-force filter") {
    for (auto names : {std::vector<std::string>{"a"}, std::vector<std::string>{"a", "b"}}) {
        const auto atoms = Alphabet::from_names(names);
        std::set<std::string> expected;
        for (const auto& t : all_basic_forms(atoms, static_cast<unsigned>(names.size())))
            if (is_mem_basic(*BasicForm::from_term(t))) expected.insert(print_term(t));
        std::set<std::string> listed;
        for (const auto& f : enumerate_mem_basic_forms(atoms)) listed.insert(print_term(f.term()));
        CHECK(listed == expected);
        CHECK(BigInt(listed.size()) == count_mem(static_cast<unsigned>(names.size())));
    }
    CHECK_THROWS(enumerate_mem_basic_forms(Alphabet::from_names({"a", "b", "c", "d"})));
}

TEST_CASE("core strings") {
    const std::vector<int> expected{1, 4, 15, 64, 325};
    for (unsigned n = 1; n <= 5; ++n) CHECK(count_core_strings(n) == expected[n - 1]);

    auto strings = enumerate_core_strings(Alphabet::from_names({"a", "b"}));
    std::set<std::string> listed;
    for (const auto& s : strings) {
        std::string text;
        for (const auto& a : s) text += a.name();
        listed.insert(text);
    }
    CHECK(listed == std::set<std::string>{"a", "b", "ab", "ba"});
    CHECK(enumerate_core_strings(Alphabet::from_names({"a", "b", "c", "d"})).size() == 64);
}
