#include "hmalab/term.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace hmalab {

Atom::Atom(std::string name) : name_(std::move(name)) {
    if (!valid_name(name_)) throw std::invalid_argument("invalid atom name: '" + name_ + "'");
}

bool Atom::valid_name(std::string_view name) {
    if (name.empty() || name.front() < 'a' || name.front() > 'z') return false;
    return std::all_of(name.begin(), name.end(), [](char c) {
        return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
    });
}

struct Term::Node {
    Kind kind;
    std::optional<Atom> atom;
    // Empty for leaves; avoids constructing default terms recursively.
    Term x{std::shared_ptr<const Node>{}};
    Term y{std::shared_ptr<const Node>{}};
    Term z{std::shared_ptr<const Node>{}};
    std::size_t size = 1;
    std::size_t depth = 0;
    std::size_t hash = 0;
};

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
    return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

Term::Term() : Term(top()) {}

Term Term::top() {
    static const auto node = [] {
        auto n = std::make_shared<Node>();
        n->kind = Kind::True;
        n->hash = 0x51;
        return std::shared_ptr<const Node>(std::move(n));
    }();
    return Term(node);
}

Term Term::bottom() {
    static const auto node = [] {
        auto n = std::make_shared<Node>();
        n->kind = Kind::False;
        n->hash = 0xa3;
        return std::shared_ptr<const Node>(std::move(n));
    }();
    return Term(node);
}

Term Term::atom(Atom a) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Atom;
    n->hash = mix(0x7f, std::hash<std::string>{}(a.name()));
    n->atom = std::move(a);
    return Term(std::move(n));
}

Term Term::cond(Term then_branch, Term condition, Term else_branch) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Cond;
    n->size = 1 + then_branch.size() + condition.size() + else_branch.size();
    n->depth = 1 + std::max({then_branch.depth(), condition.depth(), else_branch.depth()});
    n->hash = mix(mix(mix(0x3d, then_branch.hash()), condition.hash()), else_branch.hash());
    n->x = std::move(then_branch);
    n->y = std::move(condition);
    n->z = std::move(else_branch);
    return Term(std::move(n));
}

Term::Kind Term::kind() const { return node_->kind; }

const Atom& Term::atom() const {
    if (!node_->atom) throw std::logic_error("term is not an atom");
    return *node_->atom;
}

const Term& Term::then_branch() const {
    if (!is_cond()) throw std::logic_error("term is not a conditional");
    return node_->x;
}

const Term& Term::condition() const {
    if (!is_cond()) throw std::logic_error("term is not a conditional");
    return node_->y;
}

const Term& Term::else_branch() const {
    if (!is_cond()) throw std::logic_error("term is not a conditional");
    return node_->z;
}

std::size_t Term::size() const { return node_->size; }
std::size_t Term::depth() const { return node_->depth; }
std::size_t Term::hash() const { return node_->hash; }

bool operator==(const Term& lhs, const Term& rhs) {
    if (lhs.node_ == rhs.node_) return true;
    const auto& a = *lhs.node_;
    const auto& b = *rhs.node_;
    if (a.kind != b.kind || a.hash != b.hash || a.size != b.size) return false;
    switch (a.kind) {
        case Term::Kind::True:
        case Term::Kind::False: return true;
        case Term::Kind::Atom: return *a.atom == *b.atom;
        case Term::Kind::Cond: return a.y == b.y && a.x == b.x && a.z == b.z;
    }
    return false;
}

BasicForm BasicForm::node(const BasicForm& left, const Atom& a, const BasicForm& right) {
    return BasicForm(Term::cond(left.term(), Term::atom(a), right.term()));
}

std::optional<BasicForm> BasicForm::from_term(const Term& t) {
    if (!is_basic_form(t)) return std::nullopt;
    return BasicForm(t);
}

Alphabet::Alphabet(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {
    if (atoms_.empty()) throw std::invalid_argument("alphabet must be non-empty");
    std::set<Atom> seen;
    for (const auto& a : atoms_)
        if (!seen.insert(a).second) throw std::invalid_argument("duplicate atom in alphabet: " + a.name());
}

Alphabet Alphabet::from_names(const std::vector<std::string>& names) {
    std::vector<Atom> atoms;
    atoms.reserve(names.size());
    for (const auto& n : names) atoms.emplace_back(n);
    return Alphabet(std::move(atoms));
}

Alphabet Alphabet::from_set(const std::set<Atom>& atoms) {
    return Alphabet(std::vector<Atom>(atoms.begin(), atoms.end()));
}

bool Alphabet::contains(const Atom& a) const {
    return std::find(atoms_.begin(), atoms_.end(), a) != atoms_.end();
}

Alphabet Alphabet::with(const Atom& a) const {
    if (contains(a)) return *this;
    auto atoms = atoms_;
    atoms.push_back(a);
    return Alphabet(std::move(atoms));
}

bool is_basic_form(const Term& t) {
    switch (t.kind()) {
        case Term::Kind::True:
        case Term::Kind::False: return true;
        case Term::Kind::Atom: return false;
        case Term::Kind::Cond:
            return t.condition().is_atom() && is_basic_form(t.then_branch()) &&
                   is_basic_form(t.else_branch());
    }
    return false;
}

namespace {

void collect_atoms(const Term& t, std::set<Atom>& out) {
    if (t.is_atom()) {
        out.insert(t.atom());
    } else if (t.is_cond()) {
        collect_atoms(t.then_branch(), out);
        collect_atoms(t.condition(), out);
        collect_atoms(t.else_branch(), out);
    }
}

}  // namespace

std::set<Atom> atoms_of(const Term& t) {
    std::set<Atom> out;
    collect_atoms(t, out);
    return out;
}

std::size_t query_bound(const Term& t) {
    switch (t.kind()) {
        case Term::Kind::True:
        case Term::Kind::False: return 0;
        case Term::Kind::Atom: return 1;
        case Term::Kind::Cond:
            return query_bound(t.condition()) +
                   std::max(query_bound(t.then_branch()), query_bound(t.else_branch()));
    }
    return 0;
}

std::set<Atom> pos(const BasicForm& t) {
    std::set<Atom> out;
    for (auto cur = t; !cur.is_leaf(); cur = cur.left()) out.insert(cur.atom());
    return out;
}

std::set<Atom> neg(const BasicForm& t) {
    std::set<Atom> out;
    for (auto cur = t; !cur.is_leaf(); cur = cur.right()) out.insert(cur.atom());
    return out;
}

Term substitute_constant(const Term& t, const Atom& a, bool value) {
    switch (t.kind()) {
        case Term::Kind::True:
        case Term::Kind::False: return t;
        case Term::Kind::Atom: return t.atom() == a ? Term::leaf(value) : t;
        case Term::Kind::Cond:
            return Term::cond(substitute_constant(t.then_branch(), a, value),
                              substitute_constant(t.condition(), a, value),
                              substitute_constant(t.else_branch(), a, value));
    }
    return t;
}

Term land(Term x, Term y) { return Term::cond(std::move(y), std::move(x), Term::bottom()); }
Term lor(Term x, Term y) { return Term::cond(Term::top(), std::move(x), std::move(y)); }
Term lnot(Term x) { return Term::cond(Term::bottom(), std::move(x), Term::top()); }

}  // namespace hmalab
