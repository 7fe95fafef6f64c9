#include "hmalab/normalizers.hpp"

#include <algorithm>
#include <stdexcept>

#include "hmalab/errors.hpp"
#include "hmalab/rewrite.hpp"

namespace hmalab {

std::string to_string(Congruence k) {
    switch (k) {
        case Congruence::free: return "free";
        case Congruence::rp: return "rp";
        case Congruence::cr: return "cr";
        case Congruence::wm: return "wm";
        case Congruence::mem: return "mem";
        case Congruence::st: return "st";
    }
    return "?";
}

std::optional<Congruence> parse_congruence(std::string_view name) {
    for (auto k : kCongruences)
        if (to_string(k) == name) return k;
    if (name == "fr") return Congruence::free;
    return std::nullopt;
}

namespace {

Term expand_bare_atoms(const Term& nf) {
    if (nf.is_atom()) return Term::cond(Term::top(), nf, Term::bottom());
    if (!nf.is_cond()) return nf;
    return Term::cond(expand_bare_atoms(nf.then_branch()), nf.condition(), expand_bare_atoms(nf.else_branch()));
}

BasicForm must_be_basic(const Term& t) {
    auto bf = BasicForm::from_term(t);
    if (!bf) throw std::logic_error("normalizer produced a non-basic term");
    return *bf;
}

BasicForm compose(const BasicForm& x, const BasicForm& y, const BasicForm& z, const NodeFixup& fixup) {
    if (y.is_leaf()) return y.value() ? x : z;
    return fixup(compose(x, y.left(), z, fixup), y.atom(), compose(x, y.right(), z, fixup));
}

BasicForm prune_pos(const BasicForm& t, const Atom& a) {
    if (t.is_leaf()) return t;
    if (t.atom() == a) return prune_pos(t.left(), a);
    return BasicForm::node(prune_pos(t.left(), a), t.atom(), t.right());
}

BasicForm prune_neg(const BasicForm& t, const Atom& a) {
    if (t.is_leaf()) return t;
    if (t.atom() == a) return prune_neg(t.right(), a);
    return BasicForm::node(t.left(), t.atom(), prune_neg(t.right(), a));
}

// Resolves every test of `a` inside t as if it had replied `value`.
BasicForm assume(const BasicForm& t, const Atom& a, bool value) {
    if (t.is_leaf()) return t;
    if (t.atom() == a) return assume(value ? t.left() : t.right(), a, value);
    return BasicForm::node(assume(t.left(), a, value), t.atom(), assume(t.right(), a, value));
}

BasicForm mem_rec(const BasicForm& t) {
    if (t.is_leaf()) return t;
    const Atom& a = t.atom();
    auto l = basic_form(substitute_constant(t.left().term(), a, true));
    auto r = basic_form(substitute_constant(t.right().term(), a, false));
    return BasicForm::node(mem_rec(l), a, mem_rec(r));
}

BasicForm table_tree(const Term& t, const std::vector<Atom>& order, std::size_t level,
                     std::vector<std::pair<Atom, bool>>& assignment) {
    if (level == order.size()) return BasicForm::leaf(static_value(t, assignment));
    assignment.emplace_back(order[level], true);
    auto l = table_tree(t, order, level + 1, assignment);
    assignment.back().second = false;
    auto r = table_tree(t, order, level + 1, assignment);
    assignment.pop_back();
    return BasicForm::node(l, order[level], r);
}

}  // namespace

BasicForm plain_node(const BasicForm& l, const Atom& a, const BasicForm& r) { return BasicForm::node(l, a, r); }

BasicForm rp_node(const BasicForm& l, const Atom& a, const BasicForm& r) {
    auto left = !l.is_leaf() && l.atom() == a ? BasicForm::node(l.left(), a, l.left()) : l;
    auto right = !r.is_leaf() && r.atom() == a ? BasicForm::node(r.right(), a, r.right()) : r;
    return BasicForm::node(left, a, right);
}

BasicForm cr_node(const BasicForm& l, const Atom& a, const BasicForm& r) {
    auto left = l;
    while (!left.is_leaf() && left.atom() == a) left = left.left();
    auto right = r;
    while (!right.is_leaf() && right.atom() == a) right = right.right();
    return BasicForm::node(left, a, right);
}

BasicForm wm_node(const BasicForm& l, const Atom& a, const BasicForm& r) {
    return BasicForm::node(prune_pos(l, a), a, prune_neg(r, a));
}

BasicForm mem_node(const BasicForm& l, const Atom& a, const BasicForm& r) {
    return BasicForm::node(assume(l, a, true), a, assume(r, a, false));
}

BasicForm compose_basic(const Term& t, const NodeFixup& fixup) {
    switch (t.kind()) {
        case Term::Kind::True:
        case Term::Kind::False: return BasicForm::leaf(t.is_true());
        case Term::Kind::Atom: return fixup(BasicForm::leaf(true), t.atom(), BasicForm::leaf(false));
        case Term::Kind::Cond:
            return compose(compose_basic(t.then_branch(), fixup), compose_basic(t.condition(), fixup),
                           compose_basic(t.else_branch(), fixup), fixup);
    }
    throw std::logic_error("unreachable");
}

BasicForm basic_form(const Term& t) { return must_be_basic(expand_bare_atoms(cp_normal_form(t))); }
BasicForm rp_basic_form(const Term& t) { return compose_basic(t, rp_node); }
BasicForm cr_basic_form(const Term& t) { return compose_basic(t, cr_node); }
BasicForm wm_basic_form(const Term& t) { return compose_basic(t, wm_node); }
BasicForm mem_basic_form(const Term& t) { return mem_rec(basic_form(t)); }

bool static_value(const Term& t, const std::vector<std::pair<Atom, bool>>& assignment) {
    switch (t.kind()) {
        case Term::Kind::True: return true;
        case Term::Kind::False: return false;
        case Term::Kind::Atom: {
            auto it = std::find_if(assignment.begin(), assignment.end(),
                                   [&](const auto& p) { return p.first == t.atom(); });
            if (it == assignment.end()) throw std::invalid_argument("atom outside order: " + t.atom().name());
            return it->second;
        }
        case Term::Kind::Cond:
            return static_value(t.condition(), assignment) ? static_value(t.then_branch(), assignment)
                                                           : static_value(t.else_branch(), assignment);
    }
    return false;
}

BasicForm st_canonical(const Term& t, const Alphabet& order) {
    for (const auto& a : atoms_of(t))
        if (!order.contains(a)) throw std::invalid_argument("atom " + a.name() + " missing from order");
    std::vector<std::pair<Atom, bool>> assignment;
    return table_tree(t, order.atoms(), 0, assignment);
}

BasicForm normal_form(const Term& t, Congruence k, const std::optional<Alphabet>& order) {
    switch (k) {
        case Congruence::free: return basic_form(t);
        case Congruence::rp: return rp_basic_form(t);
        case Congruence::cr: return cr_basic_form(t);
        case Congruence::wm: return wm_basic_form(t);
        case Congruence::mem: return mem_basic_form(t);
        case Congruence::st: {
            if (order) return st_canonical(t, *order);
            auto atoms = atoms_of(t);
            if (atoms.empty()) return BasicForm::leaf(static_value(t, {}));
            return st_canonical(t, Alphabet::from_set(atoms));
        }
    }
    throw std::logic_error("unreachable");
}

bool is_rp_basic(const BasicForm& t) {
    if (t.is_leaf()) return true;
    for (const auto& c : {t.left(), t.right()}) {
        if (!is_rp_basic(c)) return false;
        if (!c.is_leaf() && c.atom() == t.atom() && !(c.left() == c.right())) return false;
    }
    return true;
}

bool is_cr_basic(const BasicForm& t) {
    if (t.is_leaf()) return true;
    for (const auto& c : {t.left(), t.right()}) {
        if (!is_cr_basic(c)) return false;
        if (!c.is_leaf() && c.atom() == t.atom()) return false;
    }
    return true;
}

bool is_wm_basic(const BasicForm& t) {
    if (t.is_leaf()) return true;
    if (pos(t.left()).contains(t.atom()) || neg(t.right()).contains(t.atom())) return false;
    return is_wm_basic(t.left()) && is_wm_basic(t.right());
}

namespace {

bool path_unique(const BasicForm& t, std::vector<Atom>& path) {
    if (t.is_leaf()) return true;
    if (std::find(path.begin(), path.end(), t.atom()) != path.end()) return false;
    path.push_back(t.atom());
    const bool ok = path_unique(t.left(), path) && path_unique(t.right(), path);
    path.pop_back();
    return ok;
}

bool full_tree(const BasicForm& t, const std::vector<Atom>& order, std::size_t level) {
    if (level == order.size()) return t.is_leaf();
    return !t.is_leaf() && t.atom() == order[level] && full_tree(t.left(), order, level + 1) &&
           full_tree(t.right(), order, level + 1);
}

void mem_forms(std::vector<Atom>& available, const std::function<void(const BasicForm&)>& visit) {
    visit(BasicForm::leaf(true));
    visit(BasicForm::leaf(false));
    for (std::size_t i = 0; i < available.size(); ++i) {
        const Atom a = available[i];
        std::vector<Atom> rest = available;
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
        std::vector<BasicForm> sub;
        mem_forms(rest, [&](const BasicForm& f) { sub.push_back(f); });
        for (const auto& l : sub)
            for (const auto& r : sub) visit(BasicForm::node(l, a, r));
    }
}

void core_strings(const std::vector<Atom>& atoms, std::vector<Atom>& prefix, std::vector<bool>& used,
                  std::vector<std::vector<Atom>>& out) {
    for (std::size_t i = 0; i < atoms.size(); ++i) {
        if (used[i]) continue;
        used[i] = true;
        prefix.push_back(atoms[i]);
        out.push_back(prefix);
        core_strings(atoms, prefix, used, out);
        prefix.pop_back();
        used[i] = false;
    }
}

}  // namespace

bool is_mem_basic(const BasicForm& t) {
    std::vector<Atom> path;
    return path_unique(t, path);
}

bool is_st_canonical(const BasicForm& t, const Alphabet& order) { return full_tree(t, order.atoms(), 0); }

BigInt count_mem(unsigned n) {
    BigInt a = 2;
    for (unsigned i = 1; i <= n; ++i) a = BigInt(i) * a * a + 2;
    return a;
}

BigInt count_core_strings(unsigned n) {
    BigInt b = 0;
    for (unsigned i = 1; i <= n; ++i) b = BigInt(i) * (b + 1);
    return b;
}

void for_each_mem_basic_form(const Alphabet& atoms, const std::function<void(const BasicForm&)>& visit) {
    if (atoms.size() > kMaxMemEnumerationAtoms)
        throw GuardViolation("mem-basic form enumeration is limited to " +
                             std::to_string(kMaxMemEnumerationAtoms) + " atoms, got " +
                             std::to_string(atoms.size()));
    auto available = atoms.atoms();
    mem_forms(available, visit);
}

std::vector<BasicForm> enumerate_mem_basic_forms(const Alphabet& atoms) {
    std::vector<BasicForm> out;
    for_each_mem_basic_form(atoms, [&](const BasicForm& f) { out.push_back(f); });
    return out;
}

std::vector<std::vector<Atom>> enumerate_core_strings(const Alphabet& atoms) {
    std::vector<std::vector<Atom>> out;
    std::vector<Atom> prefix;
    std::vector<bool> used(atoms.size(), false);
    core_strings(atoms.atoms(), prefix, used, out);
    return out;
}

}  // namespace hmalab
