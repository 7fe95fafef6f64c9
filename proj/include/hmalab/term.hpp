#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace hmalab {

class Atom {
public:
    explicit Atom(std::string name);

    static bool valid_name(std::string_view name);

    const std::string& name() const { return name_; }

    friend bool operator==(const Atom&, const Atom&) = default;
    friend auto operator<=>(const Atom&, const Atom&) = default;

private:
    std::string name_;
};

// Closed conditional expression. Nodes are immutable and shared, so copies are cheap.
class Term {
public:
    enum class Kind : std::uint8_t { True, False, Atom, Cond };

    Term();  // T

    static Term top();
    static Term bottom();
    static Term leaf(bool value) { return value ? top() : bottom(); }
    static Term atom(Atom a);
    static Term atom(std::string name) { return atom(Atom(std::move(name))); }
    // then_branch <| condition |> else_branch
    static Term cond(Term then_branch, Term condition, Term else_branch);

    Kind kind() const;
    bool is_true() const { return kind() == Kind::True; }
    bool is_false() const { return kind() == Kind::False; }
    bool is_constant() const { return is_true() || is_false(); }
    bool is_atom() const { return kind() == Kind::Atom; }
    bool is_cond() const { return kind() == Kind::Cond; }

    const Atom& atom() const;
    const Term& then_branch() const;
    const Term& condition() const;
    const Term& else_branch() const;

    std::size_t size() const;
    std::size_t depth() const;
    std::size_t hash() const;
    const void* identity() const { return node_.get(); }

    friend bool operator==(const Term& lhs, const Term& rhs);

private:
    struct Node;
    explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

struct TermHash {
    std::size_t operator()(const Term& t) const { return t.hash(); }
};

// Terms whose every central condition is an atom and whose leaves are T/F.
class BasicForm {
public:
    static BasicForm leaf(bool value) { return BasicForm(Term::leaf(value)); }
    static BasicForm node(const BasicForm& left, const Atom& a, const BasicForm& right);
    static std::optional<BasicForm> from_term(const Term& t);

    const Term& term() const { return term_; }
    bool is_leaf() const { return term_.is_constant(); }
    bool value() const { return term_.is_true(); }
    const Atom& atom() const { return term_.condition().atom(); }
    BasicForm left() const { return BasicForm(term_.then_branch()); }
    BasicForm right() const { return BasicForm(term_.else_branch()); }

    friend bool operator==(const BasicForm&, const BasicForm&) = default;

private:
    explicit BasicForm(Term t) : term_(std::move(t)) {}
    Term term_;
};

class Alphabet {
public:
    explicit Alphabet(std::vector<Atom> atoms);
    static Alphabet from_names(const std::vector<std::string>& names);
    static Alphabet from_set(const std::set<Atom>& atoms);

    const std::vector<Atom>& atoms() const { return atoms_; }
    std::size_t size() const { return atoms_.size(); }
    bool contains(const Atom& a) const;
    Alphabet with(const Atom& a) const;

    friend bool operator==(const Alphabet&, const Alphabet&) = default;

private:
    std::vector<Atom> atoms_;
};

bool is_basic_form(const Term& t);
std::set<Atom> atoms_of(const Term& t);
std::size_t query_bound(const Term& t);
std::set<Atom> pos(const BasicForm& t);
std::set<Atom> neg(const BasicForm& t);
Term substitute_constant(const Term& t, const Atom& a, bool value);

// Short-circuit sugar.
Term land(Term x, Term y);  // y <| x |> F
Term lor(Term x, Term y);   // T <| x |> y
Term lnot(Term x);          // F <| x |> T

}  // namespace hmalab
