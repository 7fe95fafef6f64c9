#include <doctest.h>

#include "hmalab/syntax.hpp"
#include "hmalab/term.hpp"

using namespace hmalab;

namespace {

Term p(const char* s) { return parse_term(s); }

std::set<Atom> atoms(std::initializer_list<const char*> names) {
    std::set<Atom> out;
    for (auto n : names) out.insert(Atom(n));
    return out;
}

}  // namespace

TEST_CASE("atom names") {
    CHECK(Atom::valid_name("a"));
    CHECK(Atom::valid_name("x_1"));
    CHECK_FALSE(Atom::valid_name("T"));
    CHECK_FALSE(Atom::valid_name("1a"));
    CHECK_FALSE(Atom::valid_name(""));
    CHECK_THROWS(Atom("Bad"));
}

TEST_CASE("structural equality and sharing") {
    Term a = Term::atom("a");
    Term t1 = Term::cond(Term::top(), a, Term::bottom());
    Term t2 = Term::cond(Term::top(), Term::atom("a"), Term::bottom());
    CHECK(t1 == t2);
    CHECK(t1.hash() == t2.hash());
    CHECK_FALSE(t1 == Term::cond(Term::bottom(), a, Term::top()));
    CHECK(Term() == Term::top());
    CHECK(t1.size() == 4);
    CHECK(t1.depth() == 1);
}

TEST_CASE("is_basic_form") {
    CHECK(is_basic_form(p("T")));
    CHECK_FALSE(is_basic_form(p("a")));
    CHECK(is_basic_form(p("(T <| b |> F) <| a |> F")));
    CHECK_FALSE(is_basic_form(p("T <| (T <| a |> F) |> F")));
    CHECK_FALSE(is_basic_form(p("b <| a |> F")));
    CHECK_FALSE(BasicForm::from_term(p("a")));
    CHECK(BasicForm::from_term(p("T <| a |> F")));
}

TEST_CASE("atoms_of") {
    CHECK(atoms_of(p("T")).empty());
    CHECK(atoms_of(p("T <| a |> F")) == atoms({"a"}));
    CHECK(atoms_of(p("(T <| b |> F) <| a |> (F <| a |> T)")) == atoms({"a", "b"}));
}

TEST_CASE("query_bound") {
    CHECK(query_bound(p("T")) == 0);
    CHECK(query_bound(p("T <| a |> F")) == 1);
    CHECK(query_bound(p("(T <| b |> F) <| a |> (T <| b |> F)")) == 2);
    // central conditions count fully, branches by their maximum
    CHECK(query_bound(p("a <| (b <| c |> d) |> e")) == 3);
}

TEST_CASE("pos and neg") {
    auto bf = [](const char* s) { return *BasicForm::from_term(parse_term(s)); };
    CHECK(pos(bf("T")).empty());
    CHECK(neg(bf("F")).empty());
    CHECK(pos(bf("(T <| b |> F) <| a |> T")) == atoms({"a", "b"}));
    CHECK(neg(bf("(T <| b |> F) <| a |> (F <| c |> T)")) == atoms({"a", "c"}));
}

TEST_CASE("substitute_constant") {
    Atom a("a");
    CHECK(substitute_constant(p("T <| a |> F"), a, true) == p("T <| T |> F"));
    CHECK(substitute_constant(p("b"), a, false) == p("b"));
    CHECK(substitute_constant(p("a <| b |> a"), a, true) == p("T <| b |> T"));
}

TEST_CASE("short-circuit sugar") {
    Term a = Term::atom("a"), b = Term::atom("b");
    CHECK(land(a, b) == p("b <| a |> F"));
    CHECK(lor(a, b) == p("T <| a |> b"));
    CHECK(lnot(a) == p("F <| a |> T"));
}

TEST_CASE("alphabet") {
    auto ab = Alphabet::from_names({"a", "b"});
    CHECK(ab.size() == 2);
    CHECK(ab.contains(Atom("b")));
    CHECK_FALSE(ab.contains(Atom("c")));
    CHECK(ab.with(Atom("c")).size() == 3);
    CHECK(ab.with(Atom("a")).size() == 2);
    CHECK_THROWS(Alphabet::from_names({"a", "a"}));
    CHECK_THROWS(Alphabet::from_names({}));
}
