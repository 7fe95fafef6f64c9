#include <doctest.h>

#include <random>

#include "hmalab/decide.hpp"
#include "hmalab/syntax.hpp"

using namespace hmalab;

TEST_CASE("parse ternary and sugar") {
    CHECK(parse_term("T <| a |> F") == Term::cond(Term::top(), Term::atom("a"), Term::bottom()));
    CHECK(parse_term("a && F") == parse_term("F <| a |> F"));
    CHECK(parse_term("(a && F) || b") == parse_term("T <| (F <| a |> F) |> b"));
    CHECK(parse_term("!a") == parse_term("F <| a |> T"));
    CHECK(parse_term("  ( T ) ") == Term::top());
}

TEST_CASE("short-circuit operators associate left") {
    CHECK(parse_term("a && b && c") == parse_term("(a && b) && c"));
    CHECK(parse_term("a || b && c") == parse_term("a || (b && c)"));
}

TEST_CASE("parse errors carry a span") {
    CHECK_THROWS_AS(parse_term(""), SyntaxError);
    CHECK_THROWS_AS(parse_term("T <| a"), SyntaxError);
    CHECK_THROWS_AS(parse_term("a <| b |> c <| d |> e"), SyntaxError);
    CHECK_THROWS_AS(parse_term("A"), SyntaxError);
    try {
        parse_term("T <| a |> F )");
        FAIL("expected a syntax error");
    } catch (const SyntaxError& e) {
        CHECK(e.span().start == 12);
    }
}

TEST_CASE("print") {
    CHECK(print_term(parse_term("T <| a |> F")) == "T <| a |> F");
    CHECK(print_term(parse_term("F <| a |> T"), PrintStyle::sugared) == "!a");
    CHECK(print_term(parse_term("F <| a |> F"), PrintStyle::sugared) == "a && F");
    CHECK(print_term(parse_term("(T <| b |> F) <| a |> F")) == "(T <| b |> F) <| a |> F");
}

TEST_CASE("print/parse round trip on random terms") {
    std::mt19937_64 rng(7);
    const auto atoms = Alphabet::from_names({"a", "b", "c"});
    for (int i = 0; i < 500; ++i) {
        Term t = random_term(rng, atoms, {5, 0.3, 0.3});
        CHECK(parse_term(print_term(t)) == t);
        CHECK(parse_term(print_term(t, PrintStyle::sugared)) == t);
    }
}
