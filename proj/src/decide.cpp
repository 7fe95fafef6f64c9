#include "hmalab/decide.hpp"

#include <cmath>
#include <stdexcept>

#include "hmalab/errors.hpp"
#include "hmalab/syntax.hpp"

namespace hmalab {

std::string to_string(Method m) {
    switch (m) {
        case Method::canonical_form: return "canonical_form";
        case Method::oracle: return "oracle";
        case Method::both_agree: return "both_agree";
    }
    return "?";
}

Alphabet oracle_alphabet(const Term& t, const Term& u, const std::optional<Alphabet>& alphabet) {
    std::set<Atom> atoms = atoms_of(t);
    for (const auto& a : atoms_of(u)) atoms.insert(a);
    std::vector<Atom> list;
    if (alphabet) {
        for (const auto& a : atoms)
            if (!alphabet->contains(a)) throw std::invalid_argument("alphabet lacks atom " + a.name());
        list = alphabet->atoms();
    } else {
        list.assign(atoms.begin(), atoms.end());
    }
    // Without an explicit alphabet one atom the terms never evaluate stays available, so a
    // probe can always read the whole history (over exactly the term atoms, memorizing
    // states forget which atoms were evaluated once all of them were).
    const std::size_t wanted = alphabet ? std::max<std::size_t>(list.size(), 2) : std::max<std::size_t>(list.size() + 1, 2);
    for (char c = 'a'; list.size() < wanted && c <= 'z'; ++c) {
        Atom fresh(std::string(1, c));
        if (std::find(list.begin(), list.end(), fresh) == list.end()) list.push_back(fresh);
    }
    return Alphabet(std::move(list));
}

std::size_t oracle_depth(const Term& t, const Term& u, std::size_t probe_depth) {
    return query_bound(t) + query_bound(u) + probe_depth;
}

namespace {

using Assignment = std::map<AtomString, bool>;

enum class Outcome { same, differ, undecided };

// Evaluates terms against a partially decided valuation, reporting the first
// undecided entry instead of guessing it.
class LazyValuation {
public:
    LazyValuation(StateClass c, const Assignment& assignment) : class_(c), assignment_(assignment) {}

    std::optional<bool> run(const Term& t, AtomString& history) {
        switch (t.kind()) {
            case Term::Kind::True: return true;
            case Term::Kind::False: return false;
            case Term::Kind::Atom: {
                auto v = query(history_lookup(class_, history, AtomString{t.atom()}));
                if (v) history.push_back(t.atom());
                return v;
            }
            case Term::Kind::Cond: {
                auto c = run(t.condition(), history);
                if (!c) return std::nullopt;
                return run(*c ? t.then_branch() : t.else_branch(), history);
            }
        }
        return std::nullopt;
    }

    std::optional<bool> query(const AtomString& s) {
        auto r = resolve(class_, s, [this](const AtomString& k) -> std::optional<bool> {
            auto it = assignment_.find(k);
            if (it == assignment_.end()) return std::nullopt;
            return it->second;
        });
        if (!r.value) missing = r.missing;
        return r.value;
    }

    std::optional<AtomString> missing;

private:
    StateClass class_;
    const Assignment& assignment_;
};

class LazySearch {
public:
    LazySearch(StateClass c, Term t, Term u) : class_(c), t_(std::move(t)), u_(std::move(u)) {}

    // A decided prefix of some state that separates the terms, if any.
    std::optional<Assignment> find(const std::optional<AtomString>& probe) {
        assignment_.clear();
        return dfs(probe);
    }

private:
    Outcome check(const std::optional<AtomString>& probe, std::optional<AtomString>& missing) {
        LazyValuation val(class_, assignment_);
        AtomString h1, h2;
        auto r1 = val.run(t_, h1);
        if (!r1) return missing = val.missing, Outcome::undecided;
        auto r2 = val.run(u_, h2);
        if (!r2) return missing = val.missing, Outcome::undecided;
        if (!probe) return *r1 == *r2 ? Outcome::same : Outcome::differ;
        const auto k1 = history_lookup(class_, h1, *probe);
        const auto k2 = history_lookup(class_, h2, *probe);
        if (k1 == k2) return Outcome::same;
        auto v1 = val.query(k1);
        if (!v1) return missing = val.missing, Outcome::undecided;
        auto v2 = val.query(k2);
        if (!v2) return missing = val.missing, Outcome::undecided;
        return *v1 == *v2 ? Outcome::same : Outcome::differ;
    }

    std::optional<Assignment> dfs(const std::optional<AtomString>& probe) {
        std::optional<AtomString> missing;
        switch (check(probe, missing)) {
            case Outcome::same: return std::nullopt;
            case Outcome::differ: return assignment_;
            case Outcome::undecided: break;
        }
        if (assignment_.size() >= max_choices())
            throw GuardViolation("oracle search path needs more than " + std::to_string(max_choices()) +
                                 " valuation choices");
        for (bool choice : {false, true}) {
            assignment_[*missing] = choice;
            if (auto w = dfs(probe)) return w;
        }
        assignment_.erase(*missing);
        return std::nullopt;
    }

    StateClass class_;
    Term t_, u_;
    Assignment assignment_;
};

constexpr std::size_t kMaxWitnessEntries = std::size_t{1} << 20;

std::size_t domain_size_bound(StateClass c, const Alphabet& alphabet, std::size_t depth) {
    const double n = static_cast<double>(alphabet.size());
    switch (c) {
        case StateClass::FREE:
        case StateClass::RP: {
            double total = 0, layer = 1;
            for (std::size_t i = 0; i < depth && total <= kMaxWitnessEntries; ++i) total += (layer *= n);
            return static_cast<std::size_t>(std::min(total, 2.0 * kMaxWitnessEntries));
        }
        case StateClass::CR:
        case StateClass::WM: {
            double total = 0, layer = n;
            for (std::size_t i = 0; i < depth && total <= kMaxWitnessEntries; ++i, layer *= n - 1) total += layer;
            return static_cast<std::size_t>(std::min(total, 2.0 * kMaxWitnessEntries));
        }
        default: return admissible_strings(c, alphabet, depth).size();
    }
}

Witness materialize(StateClass c, const Alphabet& alphabet, std::size_t depth, const Assignment& decided,
                    std::optional<AtomString> probe) {
    if (domain_size_bound(c, alphabet, depth) > kMaxWitnessEntries)
        throw GuardViolation("witness table at depth " + std::to_string(depth) + " is too large to write out");
    const KeyLookup lookup = [&](const AtomString& k) -> std::optional<bool> {
        auto it = decided.find(k);
        return it == decided.end() ? false : it->second;
    };
    auto state = TruncatedState::build(c, alphabet, depth,
                                       [&](const AtomString& s) { return *resolve(c, s, lookup).value; });
    return {std::move(state), std::move(probe)};
}

}  // namespace

Verdict oracle_equivalent(const Term& t, const Term& u, Congruence k, const std::optional<Alphabet>& alphabet,
                          std::size_t probe_depth) {
    const StateClass c = state_class_of(k);
    const Alphabet atoms = oracle_alphabet(t, u, alphabet);
    const std::size_t depth = oracle_depth(t, u, probe_depth);
    LazySearch search(c, t, u);
    if (auto w = search.find(std::nullopt))
        return {false, Method::oracle, materialize(c, atoms, depth, *w, std::nullopt)};
    for (const auto& probe : admissible_strings(c, atoms, probe_depth))
        if (auto w = search.find(probe)) return {false, Method::oracle, materialize(c, atoms, depth, *w, probe)};
    return {true, Method::oracle, std::nullopt};
}

Verdict exhaustive_equivalent(const Term& t, const Term& u, Congruence k, const std::optional<Alphabet>& alphabet,
                              std::size_t probe_depth) {
    const StateClass c = state_class_of(k);
    const Alphabet atoms = oracle_alphabet(t, u, alphabet);
    const std::size_t depth = oracle_depth(t, u, probe_depth);
    const auto probes = admissible_strings(c, atoms, probe_depth);
    std::optional<Witness> found;
    for_each_state(c, atoms, depth, [&](const TruncatedState& f) {
        if (found) return;
        auto e1 = evaluate(t, f);
        auto e2 = evaluate(u, f);
        if (e1.reply != e2.reply) {
            found = Witness{f, std::nullopt};
            return;
        }
        for (const auto& p : probes)
            if (e1.state.at(p) != e2.state.at(p)) {
                found = Witness{f, p};
                return;
            }
    });
    if (found) return {false, Method::oracle, std::move(found)};
    return {true, Method::oracle, std::nullopt};
}

Verdict canonical_equivalent(const Term& t, const Term& u, Congruence k) {
    std::optional<Alphabet> order;
    if (k == Congruence::st) {
        auto atoms = atoms_of(t);
        for (const auto& a : atoms_of(u)) atoms.insert(a);
        if (!atoms.empty()) order = Alphabet::from_set(atoms);
    }
    const bool same = normal_form(t, k, order) == normal_form(u, k, order);
    return {same, Method::canonical_form, std::nullopt};
}

bool witness_separates(const Witness& w, const Term& t, const Term& u) {
    auto e1 = evaluate(t, w.state);
    auto e2 = evaluate(u, w.state);
    if (!w.probe) return e1.reply != e2.reply;
    return e1.state.at(*w.probe) != e2.state.at(*w.probe);
}

bool is_monotone(const Profile& p) {
    for (std::size_t i = 0; i + 1 < kCongruences.size(); ++i) {
        auto a = p.find(kCongruences[i]);
        auto b = p.find(kCongruences[i + 1]);
        if (a != p.end() && b != p.end() && a->second.equivalent && !b->second.equivalent) return false;
    }
    return true;
}

Profile equivalence_profile(const Term& t, const Term& u) {
    Profile out;
    for (auto k : kCongruences) {
        ProfileEntry e;
        e.canonical = canonical_equivalent(t, u, k).equivalent;
        try {
            e.oracle = oracle_equivalent(t, u, k).equivalent;
        } catch (const GuardViolation&) {
        }
        e.equivalent = e.oracle.value_or(e.canonical);
        out.emplace(k, e);
    }
    if (!is_monotone(out))
        throw std::logic_error("non-monotone equivalence profile for " + print_term(t) + " vs " + print_term(u));
    return out;
}

std::vector<LawReport> axiom_soundness_suite(Congruence k, std::size_t samples, std::uint64_t seed,
                                             const TermShape& shape) {
    const Alphabet atoms = Alphabet::from_names({"a", "b"});
    std::mt19937_64 rng(seed);
    std::vector<LawReport> out;
    for (const auto& law : checked_laws(k)) {
        LawReport report;
        report.name = law.name;
        for (std::size_t i = 0; i < samples; ++i) {
            auto binding = random_binding(law, rng, atoms, shape);
            auto lhs = instantiate_law_side(law.lhs, binding);
            auto rhs = instantiate_law_side(law.rhs, binding);
            try {
                auto v = oracle_equivalent(lhs, rhs, k, atoms);
                if (v.equivalent) {
                    ++report.passed;
                } else {
                    ++report.failed;
                    if (!report.first_failure)
                        report.first_failure = print_term(lhs) + " vs " + print_term(rhs) + " (probe " +
                                               v.witness->probe_text() + ")";
                }
            } catch (const GuardViolation&) {
                ++report.skipped;
            }
        }
        out.push_back(std::move(report));
    }
    return out;
}

}  // namespace hmalab
