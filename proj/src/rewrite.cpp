#include "hmalab/rewrite.hpp"

#include <stdexcept>

#include "hmalab/syntax.hpp"

namespace hmalab {

PatternTerm PatternTerm::parse(std::string_view text) { return PatternTerm(parse_term(text)); }

std::set<std::string> PatternTerm::variables() const {
    std::set<std::string> out;
    for (const auto& a : atoms_of(shape_)) out.insert(a.name());
    return out;
}

namespace {

bool match_into(const Term& p, const Term& t, Substitution& subst) {
    switch (p.kind()) {
        case Term::Kind::True: return t.is_true();
        case Term::Kind::False: return t.is_false();
        case Term::Kind::Atom: {
            auto [it, fresh] = subst.emplace(p.atom().name(), t);
            return fresh || it->second == t;
        }
        case Term::Kind::Cond:
            return t.is_cond() && match_into(p.condition(), t.condition(), subst) &&
                   match_into(p.then_branch(), t.then_branch(), subst) &&
                   match_into(p.else_branch(), t.else_branch(), subst);
    }
    return false;
}

Term instantiate_shape(const Term& p, const Substitution& subst) {
    switch (p.kind()) {
        case Term::Kind::True:
        case Term::Kind::False: return p;
        case Term::Kind::Atom: {
            auto it = subst.find(p.atom().name());
            if (it == subst.end()) throw std::logic_error("unbound rule variable " + p.atom().name());
            return it->second;
        }
        case Term::Kind::Cond:
            return Term::cond(instantiate_shape(p.then_branch(), subst), instantiate_shape(p.condition(), subst),
                              instantiate_shape(p.else_branch(), subst));
    }
    return p;
}

}  // namespace

std::optional<Substitution> match(const PatternTerm& pattern, const Term& t) {
    Substitution subst;
    if (!match_into(pattern.shape(), t, subst)) return std::nullopt;
    return subst;
}

Term instantiate(const PatternTerm& pattern, const Substitution& subst) {
    return instantiate_shape(pattern.shape(), subst);
}

std::string to_string(RuleId id) {
    switch (id) {
        case RuleId::CP1: return "CP1";
        case RuleId::CP2: return "CP2";
        case RuleId::CP3: return "CP3";
        case RuleId::CP4: return "CP4";
        case RuleId::TTT: return "TTT";
    }
    return "?";
}

namespace {

RewriteRule rule(std::string_view lhs, std::string_view rhs, RuleId id) {
    return {PatternTerm::parse(lhs), PatternTerm::parse(rhs), id};
}

std::vector<RewriteRule> cp_rules() {
    return {
        rule("x <| T |> y", "x", RuleId::CP1),
        rule("x <| F |> y", "y", RuleId::CP2),
        rule("T <| x |> F", "x", RuleId::CP3),
        rule("x <| (y <| z |> u) |> v", "(x <| y |> v) <| z |> (x <| u |> v)", RuleId::CP4),
    };
}

}  // namespace

const RewriteSystem& RewriteSystem::cp() {
    static const RewriteSystem system{SystemId::cp, cp_rules()};
    return system;
}

const RewriteSystem& RewriteSystem::cpt() {
    static const RewriteSystem system = [] {
        auto rules = cp_rules();
        rules.push_back(rule("T <| x |> T", "T", RuleId::TTT));
        return RewriteSystem{SystemId::cpt, std::move(rules)};
    }();
    return system;
}

std::string to_string(const Position& p) {
    if (p.empty()) return "root";
    std::string out;
    for (Step s : p) {
        if (!out.empty()) out += '.';
        out += s == Step::then_branch ? "then" : s == Step::condition ? "cond" : "else";
    }
    return out;
}

namespace {

const Term& child(const Term& t, Step s) {
    switch (s) {
        case Step::then_branch: return t.then_branch();
        case Step::condition: return t.condition();
        case Step::else_branch: return t.else_branch();
    }
    return t;
}

Term with_child(const Term& t, Step s, Term c) {
    switch (s) {
        case Step::then_branch: return Term::cond(std::move(c), t.condition(), t.else_branch());
        case Step::condition: return Term::cond(t.then_branch(), std::move(c), t.else_branch());
        case Step::else_branch: return Term::cond(t.then_branch(), t.condition(), std::move(c));
    }
    return t;
}

constexpr Step kChildren[] = {Step::then_branch, Step::condition, Step::else_branch};

std::optional<Contraction> contract_root(const Term& t, const RewriteSystem& system) {
    for (const auto& r : system.rules)
        if (auto s = match(r.lhs, t)) return Contraction{instantiate(r.rhs, *s), r.id, {}};
    return std::nullopt;
}

// Returns the contracted subterm in `result` and its position in `pos`.
std::optional<Contraction> find_step(const Term& t, const RewriteSystem& system, Strategy strategy,
                                     Position& pos) {
    if (strategy == Strategy::leftmost_outermost)
        if (auto c = contract_root(t, system)) return c;
    if (t.is_cond()) {
        for (Step s : kChildren) {
            pos.push_back(s);
            if (auto c = find_step(child(t, s), system, strategy, pos)) return c;
            pos.pop_back();
        }
    }
    if (strategy == Strategy::leftmost_innermost) return contract_root(t, system);
    return std::nullopt;
}

void collect_contractions(const Term& t, const RewriteSystem& system, Position& pos,
                          std::vector<Contraction>& out) {
    for (const auto& r : system.rules)
        if (auto s = match(r.lhs, t)) out.push_back({instantiate(r.rhs, *s), r.id, pos});
    if (!t.is_cond()) return;
    for (Step s : kChildren) {
        pos.push_back(s);
        collect_contractions(child(t, s), system, pos, out);
        pos.pop_back();
    }
}

}  // namespace

const Term& subterm_at(const Term& t, const Position& p) {
    const Term* cur = &t;
    for (Step s : p) cur = &child(*cur, s);
    return *cur;
}

Term replace_at(const Term& t, const Position& p, Term replacement) {
    if (p.empty()) return replacement;
    std::vector<const Term*> path{&t};
    for (std::size_t i = 0; i + 1 < p.size(); ++i) path.push_back(&child(*path.back(), p[i]));
    Term cur = std::move(replacement);
    for (std::size_t i = p.size(); i-- > 0;) cur = with_child(*path[i], p[i], std::move(cur));
    return cur;
}

std::optional<Contraction> rewrite_step(const Term& t, const RewriteSystem& system, Strategy strategy) {
    Position pos;
    auto c = find_step(t, system, strategy, pos);
    if (!c) return std::nullopt;
    return Contraction{replace_at(t, pos, std::move(c->result)), c->rule, std::move(pos)};
}

std::vector<Contraction> all_contractions(const Term& t, const RewriteSystem& system) {
    std::vector<Contraction> out;
    Position pos;
    collect_contractions(t, system, pos, out);
    for (auto& c : out) c.result = replace_at(t, c.position, std::move(c.result));
    return out;
}

Normalization normalize(const Term& t, const RewriteSystem& system, Strategy strategy, bool record_trace) {
    Normalization out{t, {}};
    WeightCache weights;
    while (auto c = rewrite_step(out.normal_form, system, strategy)) {
        if (record_trace) {
            auto w_before = weights.weight(out.normal_form);
            auto w_after = weights.weight(c->result);
            out.trace.push_back({c->position, c->rule, out.normal_form, c->result, std::move(w_before),
                                 std::move(w_after)});
        }
        out.normal_form = std::move(c->result);
    }
    return out;
}

namespace {

// Normalizes x <| y |> z whose three arguments are already CP normal forms.
Term cp_root(const Term& x, const Term& y, const Term& z) {
    if (y.is_true()) return x;
    if (y.is_false()) return z;
    if (y.is_cond())
        return cp_root(cp_root(x, y.then_branch(), z), y.condition(), cp_root(x, y.else_branch(), z));
    if (x.is_true() && z.is_false()) return y;
    return Term::cond(x, y, z);
}

}  // namespace

Term cp_normal_form(const Term& t) {
    if (!t.is_cond()) return t;
    return cp_root(cp_normal_form(t.then_branch()), cp_normal_form(t.condition()),
                   cp_normal_form(t.else_branch()));
}

bool is_cp_normal_shape(const Term& t) {
    if (!t.is_cond()) return true;
    if (!t.condition().is_atom()) return false;
    if (t.then_branch().is_true() && t.else_branch().is_false()) return false;
    return is_cp_normal_shape(t.then_branch()) && is_cp_normal_shape(t.else_branch());
}

std::string render_trace(const std::vector<TraceEntry>& trace) {
    std::string out;
    for (const auto& e : trace)
        out += "pos=" + to_string(e.position) + " rule=" + to_string(e.rule) + " w_before=" +
               e.w_before.to_string() + " w_after=" + e.w_after.to_string() + "\n";
    return out;
}

namespace {

CriticalPair pair(std::string label, std::string_view overlap, std::string_view left, std::string_view right,
                  std::optional<std::string_view> reduct = std::nullopt) {
    CriticalPair cp{std::move(label), PatternTerm::parse(overlap), PatternTerm::parse(left),
                    PatternTerm::parse(right), std::nullopt};
    if (reduct) cp.stated_reduct = PatternTerm::parse(*reduct);
    return cp;
}

}  // namespace

std::vector<CriticalPair> critical_pairs(SystemId system) {
    std::vector<CriticalPair> out{
        pair("CP1/CP3", "T <| T |> F", "T", "T"),
        pair("CP1/CP4", "x <| (y <| T |> u) |> v", "x <| y |> v", "(x <| y |> v) <| T |> (x <| u |> v)"),
        pair("CP2/CP3", "T <| F |> F", "F", "F"),
        pair("CP2/CP4", "x <| (y <| F |> u) |> v", "x <| u |> v", "(x <| y |> v) <| F |> (x <| u |> v)"),
        pair("CP3/CP4", "x <| (T <| z |> F) |> v", "x <| z |> v", "(x <| T |> v) <| z |> (x <| F |> v)"),
        pair("CP3/CP4", "T <| (y <| z |> u) |> F", "y <| z |> u", "(T <| y |> F) <| z |> (T <| u |> F)"),
        pair("CP4/CP4", "x <| (w <| (y <| z |> u) |> r) |> v",
             "(x <| w |> v) <| (y <| z |> u) |> (x <| r |> v)",
             "x <| ((w <| y |> r) <| z |> (w <| u |> r)) |> v",
             "((x <| w |> v) <| y |> (x <| r |> v)) <| z |> ((x <| w |> v) <| u |> (x <| r |> v))"),
    };
    if (system == SystemId::cpt) {
        out.push_back(pair("CP1/TTT", "T <| T |> T", "T", "T"));
        out.push_back(pair("CP2/TTT", "T <| F |> T", "T", "T"));
        out.push_back(pair("CP4/TTT", "T <| (y <| z |> u) |> T", "(T <| y |> T) <| z |> (T <| u |> T)", "T"));
        out.push_back(pair("CP4/TTT", "x <| (T <| z |> T) |> u", "(x <| T |> u) <| z |> (x <| T |> u)",
                           "x <| T |> u"));
    }
    return out;
}

JoinResult join(const CriticalPair& pair, const RewriteSystem& system) {
    auto l = normalize(pair.left.as_closed(), system, Strategy::leftmost_innermost, false).normal_form;
    auto r = normalize(pair.right.as_closed(), system, Strategy::leftmost_innermost, false).normal_form;
    const bool ok = l == r;
    return {ok, std::move(l), std::move(r)};
}

bool joinable(const CriticalPair& pair, const RewriteSystem& system) { return join(pair, system).joinable; }

namespace {

bool rename_match(const Term& a, const Term& b, std::map<Atom, Atom>& fwd, std::map<Atom, Atom>& back) {
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
        case Term::Kind::True:
        case Term::Kind::False: return true;
        case Term::Kind::Atom: {
            auto [f, fnew] = fwd.emplace(a.atom(), b.atom());
            auto [g, gnew] = back.emplace(b.atom(), a.atom());
            return f->second == b.atom() && g->second == a.atom();
        }
        case Term::Kind::Cond:
            return rename_match(a.then_branch(), b.then_branch(), fwd, back) &&
                   rename_match(a.condition(), b.condition(), fwd, back) &&
                   rename_match(a.else_branch(), b.else_branch(), fwd, back);
    }
    return false;
}

}  // namespace

bool equal_up_to_renaming(const Term& lhs, const Term& rhs) {
    std::map<Atom, Atom> fwd, back;
    return rename_match(lhs, rhs, fwd, back);
}

}  // namespace hmalab
