#include "hmalab/semantics.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <sstream>

#include "hmalab/errors.hpp"

namespace hmalab {

StateClass state_class_of(Congruence k) {
    switch (k) {
        case Congruence::free: return StateClass::FREE;
        case Congruence::rp: return StateClass::RP;
        case Congruence::cr: return StateClass::CR;
        case Congruence::wm: return StateClass::WM;
        case Congruence::mem: return StateClass::MEM;
        case Congruence::st: return StateClass::ST;
    }
    return StateClass::FREE;
}

std::string to_string(StateClass c) {
    switch (c) {
        case StateClass::FREE: return "FREE";
        case StateClass::RP: return "RP";
        case StateClass::CR: return "CR";
        case StateClass::WM: return "WM";
        case StateClass::MEM: return "MEM";
        case StateClass::ST: return "ST";
    }
    return "?";
}

std::optional<StateClass> parse_state_class(std::string_view name) {
    for (auto c : {StateClass::FREE, StateClass::RP, StateClass::CR, StateClass::WM, StateClass::MEM,
                   StateClass::ST})
        if (to_string(c) == name) return c;
    return std::nullopt;
}

std::string to_string(const AtomString& s) {
    std::string out;
    for (const auto& a : s) {
        if (!out.empty()) out += '.';
        out += a.name();
    }
    return out;
}

AtomString parse_atom_string(std::string_view text) {
    AtomString out;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto dot = text.find('.', start);
        if (dot == std::string_view::npos) dot = text.size();
        out.emplace_back(std::string(text.substr(start, dot - start)));
        start = dot + 1;
    }
    return out;
}

AtomString contract_runs(const AtomString& s) {
    AtomString out;
    for (const auto& a : s)
        if (out.empty() || out.back() != a) out.push_back(a);
    return out;
}

AtomString leadsto(const Atom& a, const AtomString& s) {
    if (s.size() == 1 && s.front() == a) return s;
    if (!s.empty() && s.front() == a) return leadsto(a, AtomString(s.begin() + 1, s.end()));
    AtomString out{a};
    out.insert(out.end(), s.begin(), s.end());
    return out;
}

AtomString leadsto(const AtomString& prefix, const AtomString& s) {
    AtomString out = s;
    for (auto it = prefix.rbegin(); it != prefix.rend(); ++it) out = leadsto(*it, out);
    return out;
}

AtomString remove_atom(const AtomString& s, const Atom& a) {
    AtomString out;
    std::copy_if(s.begin(), s.end(), std::back_inserter(out), [&](const Atom& x) { return x != a; });
    return out;
}

bool in_cr(const AtomString& s) {
    return std::adjacent_find(s.begin(), s.end()) == s.end();
}

bool in_core(const AtomString& s) {
    std::set<Atom> seen(s.begin(), s.end());
    return seen.size() == s.size();
}

AtomString lookup_string(StateClass c, const Atom& a, const AtomString& s) {
    switch (c) {
        case StateClass::FREE:
        case StateClass::RP: {
            AtomString out{a};
            out.insert(out.end(), s.begin(), s.end());
            return out;
        }
        case StateClass::CR:
        case StateClass::WM: return leadsto(a, s);
        case StateClass::MEM: {
            if (!s.empty() && s.back() == a) return {a};
            AtomString out{a};
            auto rest = remove_atom(s, a);
            out.insert(out.end(), rest.begin(), rest.end());
            return out;
        }
        case StateClass::ST: return s;
    }
    return s;
}

AtomString history_lookup(StateClass c, const AtomString& history, const AtomString& s) {
    AtomString cur = s;
    for (auto it = history.rbegin(); it != history.rend(); ++it) cur = lookup_string(c, *it, cur);
    return cur;
}

namespace {

bool admissible_in(StateClass c, const AtomString& s) {
    switch (c) {
        case StateClass::FREE:
        case StateClass::RP: return true;
        case StateClass::CR:
        case StateClass::WM: return in_cr(s);
        case StateClass::MEM: return in_core(s);
        case StateClass::ST: return s.size() == 1;
    }
    return false;
}

bool is_free_key(StateClass c, const AtomString& s) {
    if (c == StateClass::RP) return s.size() < 2 || s[s.size() - 1] != s[s.size() - 2];
    return admissible_in(c, s);
}

}  // namespace

std::vector<AtomString> admissible_strings(StateClass c, const Alphabet& alphabet, std::size_t max_len) {
    if (c == StateClass::ST) max_len = std::min<std::size_t>(max_len, 1);
    if (c == StateClass::MEM) max_len = std::min(max_len, alphabet.size());
    std::vector<AtomString> out;
    std::vector<AtomString> layer{AtomString{}};
    for (std::size_t len = 1; len <= max_len; ++len) {
        std::vector<AtomString> next;
        for (const auto& prefix : layer)
            for (const auto& a : alphabet.atoms()) {
                auto s = prefix;
                s.push_back(a);
                if (admissible_in(c, s)) next.push_back(std::move(s));
            }
        out.insert(out.end(), next.begin(), next.end());
        layer = std::move(next);
    }
    return out;
}

std::vector<AtomString> free_keys(StateClass c, const Alphabet& alphabet, std::size_t max_len) {
    auto all = admissible_strings(c, alphabet, max_len);
    std::vector<AtomString> out;
    std::copy_if(all.begin(), all.end(), std::back_inserter(out),
                 [c](const AtomString& s) { return is_free_key(c, s); });
    return out;
}

namespace {

Resolution lookup_key(const KeyLookup& lookup, const AtomString& key) {
    if (auto v = lookup(key)) return {v, std::nullopt};
    return {std::nullopt, key};
}

// A weakly memorizing valuation is fixed by its values on reduced histories. Scanning
// a string, an atom that already replied inside the current run of equal replies is
// answered from memory and leaves the history unchanged.
Resolution resolve_wm(const AtomString& s, const KeyLookup& lookup) {
    AtomString history{s.front()};
    auto first = lookup_key(lookup, history);
    if (!first.value) return first;
    bool current = *first.value;
    std::set<Atom> block{s.front()};
    for (std::size_t i = 1; i < s.size(); ++i) {
        if (block.contains(s[i])) continue;
        history.push_back(s[i]);
        auto r = lookup_key(lookup, history);
        if (!r.value) return r;
        if (*r.value == current) {
            block.insert(s[i]);
        } else {
            block = {s[i]};
            current = *r.value;
        }
    }
    return {current, std::nullopt};
}

}  // namespace

Resolution resolve(StateClass c, const AtomString& s, const KeyLookup& lookup) {
    switch (c) {
        case StateClass::RP: {
            AtomString key = s;
            while (key.size() >= 2 && key[key.size() - 1] == key[key.size() - 2]) key.pop_back();
            return lookup_key(lookup, key);
        }
        case StateClass::WM: return resolve_wm(s, lookup);
        default: return lookup_key(lookup, s);
    }
}

TruncatedState::TruncatedState(StateClass c, Alphabet alphabet, std::size_t depth, Table table)
    : class_(c), alphabet_(std::move(alphabet)), depth_(depth), table_(std::move(table)) {
    auto domain = admissible_strings(class_, alphabet_, depth_);
    if (domain.size() != table_.size())
        throw ConstraintViolation("table has " + std::to_string(table_.size()) + " entries, domain has " +
                                  std::to_string(domain.size()));
    for (const auto& s : domain)
        if (!table_.contains(s)) throw ConstraintViolation("missing entry for " + to_string(s));
}

TruncatedState TruncatedState::build(StateClass c, const Alphabet& alphabet, std::size_t depth,
                                     const std::function<bool(const AtomString&)>& value) {
    Table table;
    for (auto& s : admissible_strings(c, alphabet, depth)) {
        const bool v = value(s);
        table.emplace(std::move(s), v);
    }
    return TruncatedState(c, alphabet, depth, std::move(table));
}

bool TruncatedState::at(const AtomString& s) const {
    auto it = table_.find(s);
    if (it != table_.end()) return it->second;
    if (s.size() > depth_) throw BudgetExhausted("string " + to_string(s) + " exceeds depth budget " +
                                                 std::to_string(depth_));
    throw std::out_of_range("string " + to_string(s) + " is not in the " + to_string(class_) + " domain");
}

namespace {

std::string show(const AtomString& s) { return s.empty() ? "ε" : to_string(s); }

std::optional<std::string> rp_violation(const TruncatedState& f) {
    for (const auto& [s, v] : f.table()) {
        if (s.size() < 2 || s[s.size() - 1] != s[s.size() - 2]) continue;
        AtomString shorter(s.begin(), s.end() - 1);
        if (f.at(shorter) != v) return "f(" + show(s) + ") != f(" + show(shorter) + ")";
    }
    return std::nullopt;
}

std::optional<std::string> wm_violation(const TruncatedState& f) {
    const std::size_t depth = f.depth_budget();
    if (depth < 3) return std::nullopt;
    std::vector<AtomString> prefixes{AtomString{}};
    for (auto& s : admissible_strings(StateClass::WM, f.alphabet(), depth - 3)) prefixes.push_back(std::move(s));
    const auto tails = admissible_strings(StateClass::WM, f.alphabet(), depth);
    for (const auto& rho : prefixes)
        for (const auto& a : f.alphabet().atoms()) {
            if (!rho.empty() && rho.back() == a) continue;
            for (const auto& b : f.alphabet().atoms()) {
                if (a == b) continue;
                AtomString ra = rho, rab = rho, raba = rho;
                ra.push_back(a);
                rab.insert(rab.end(), {a, b});
                raba.insert(raba.end(), {a, b, a});
                if (f.at(rab) != f.at(ra)) continue;
                if (f.at(raba) != f.at(ra))
                    return "f(" + show(rab) + ") = f(" + show(ra) + ") but f(" + show(raba) + ") differs";
                for (const auto& sigma : tails) {
                    auto x = leadsto(raba, sigma);
                    auto y = leadsto(rab, sigma);
                    if (x.size() > depth || y.size() > depth) continue;
                    if (f.at(x) != f.at(y))
                        return "f(" + show(rab) + ") = f(" + show(ra) + ") but f(" + show(x) + ") != f(" + show(y) +
                               ")";
                }
            }
        }
    return std::nullopt;
}

}  // namespace

std::optional<std::string> constraint_violation(const TruncatedState& f) {
    switch (f.state_class()) {
        case StateClass::RP: return rp_violation(f);
        case StateClass::WM: return wm_violation(f);
        default: return std::nullopt;
    }
}

bool class_constraint_check(const TruncatedState& f) { return !constraint_violation(f); }

std::size_t required_choices(StateClass c, const Alphabet& alphabet, std::size_t depth) {
    return free_keys(c, alphabet, depth).size();
}

std::size_t max_choices() {
    if (const char* env = std::getenv("HMALAB_MAX_CHOICES")) {
        char* end = nullptr;
        const unsigned long v = std::strtoul(env, &end, 10);
        if (end != env && *end == '\0') return v;
    }
    return 24;
}

namespace {

using Assignment = std::map<AtomString, bool>;

void enumerate_from(StateClass c, const Alphabet& alphabet, std::size_t depth, const std::vector<AtomString>& domain,
                    Assignment& assignment, const std::function<void(const TruncatedState&)>& visit) {
    const KeyLookup lookup = [&](const AtomString& k) -> std::optional<bool> {
        auto it = assignment.find(k);
        if (it == assignment.end()) return std::nullopt;
        return it->second;
    };
    TruncatedState::Table table;
    for (const auto& s : domain) {
        auto r = resolve(c, s, lookup);
        if (!r.value) {
            for (bool choice : {false, true}) {
                assignment[*r.missing] = choice;
                enumerate_from(c, alphabet, depth, domain, assignment, visit);
            }
            assignment.erase(*r.missing);
            return;
        }
        table.emplace(s, *r.value);
    }
    visit(TruncatedState(c, alphabet, depth, std::move(table)));
}

}  // namespace

void for_each_state(StateClass c, const Alphabet& alphabet, std::size_t depth,
                    const std::function<void(const TruncatedState&)>& visit) {
    const std::size_t needed = required_choices(c, alphabet, depth);
    if (needed > max_choices())
        throw GuardViolation("enumerating " + to_string(c) + " states at depth " + std::to_string(depth) +
                             " needs " + std::to_string(needed) + " choices (limit " +
                             std::to_string(max_choices()) + ")");
    const auto domain = admissible_strings(c, alphabet, depth);
    Assignment assignment;
    enumerate_from(c, alphabet, depth, domain, assignment, visit);
}

std::vector<TruncatedState> enumerate_states(StateClass c, const Alphabet& alphabet, std::size_t depth) {
    std::vector<TruncatedState> out;
    for_each_state(c, alphabet, depth, [&](const TruncatedState& f) { out.push_back(f); });
    return out;
}

namespace {

bool consumes_budget(StateClass c) { return c != StateClass::MEM && c != StateClass::ST; }

}  // namespace

TruncatedState apply_atom(const Atom& a, const TruncatedState& f) {
    const StateClass c = f.state_class();
    if (!f.alphabet().contains(a)) throw std::invalid_argument("atom " + a.name() + " is outside the alphabet");
    if (c == StateClass::ST) return f;
    std::size_t depth = f.depth_budget();
    if (consumes_budget(c)) {
        if (depth == 0) throw BudgetExhausted("cannot apply " + a.name() + " at depth budget 0");
        --depth;
    }
    return TruncatedState::build(c, f.alphabet(), depth,
                                 [&](const AtomString& s) { return f.at(lookup_string(c, a, s)); });
}

namespace {

Evaluation eval(const Term& t, const TruncatedState& f) {
    switch (t.kind()) {
        case Term::Kind::True: return {true, f};
        case Term::Kind::False: return {false, f};
        case Term::Kind::Atom: {
            const bool r = f.at(AtomString{t.atom()});
            return {r, apply_atom(t.atom(), f)};
        }
        case Term::Kind::Cond: {
            auto c = eval(t.condition(), f);
            return eval(c.reply ? t.then_branch() : t.else_branch(), c.state);
        }
    }
    return {false, f};
}

}  // namespace

Evaluation evaluate(const Term& t, const TruncatedState& f) {
    if (consumes_budget(f.state_class()) && query_bound(t) > f.depth_budget())
        throw BudgetExhausted("term needs depth " + std::to_string(query_bound(t)) + ", state has " +
                              std::to_string(f.depth_budget()));
    return eval(t, f);
}

bool reply(const Term& t, const TruncatedState& f) { return evaluate(t, f).reply; }
TruncatedState apply(const Term& t, const TruncatedState& f) { return evaluate(t, f).state; }

bool agree_on_common_domain(const TruncatedState& f, const TruncatedState& g) {
    if (f.state_class() != g.state_class() || !(f.alphabet() == g.alphabet())) return false;
    const auto& small = f.table().size() <= g.table().size() ? f : g;
    const auto& large = &small == &f ? g : f;
    return std::all_of(small.table().begin(), small.table().end(), [&](const auto& entry) {
        auto it = large.table().find(entry.first);
        return it == large.table().end() || it->second == entry.second;
    });
}

std::string write_state(const TruncatedState& f, const std::optional<std::string>& probe) {
    std::ostringstream out;
    out << "class: " << to_string(f.state_class()) << "\n";
    std::string names;
    for (const auto& a : f.alphabet().atoms()) names += (names.empty() ? "" : ",") + a.name();
    out << "alphabet: " << names << "\n";
    out << "depth: " << f.depth_budget() << "\n";
    if (probe) out << "probe: " << *probe << "\n";
    for (const auto& s : admissible_strings(f.state_class(), f.alphabet(), f.depth_budget()))
        out << to_string(s) << " = " << (f.at(s) ? 'T' : 'F') << "\n";
    return out.str();
}

namespace {

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

}  // namespace

StateFile read_state(std::string_view text) {
    std::optional<StateClass> cls;
    std::optional<Alphabet> alphabet;
    std::optional<std::size_t> depth;
    std::optional<std::string> probe;
    TruncatedState::Table table;
    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t line_no = 0;
    auto bad = [&](const std::string& why) {
        return ConstraintViolation("state file line " + std::to_string(line_no) + ": " + why);
    };
    while (std::getline(in, raw)) {
        ++line_no;
        const auto line = trim(raw);
        if (line.empty() || line.front() == '#') continue;
        if (auto colon = line.find(':'); colon != std::string::npos) {
            const auto key = trim(line.substr(0, colon));
            const auto value = trim(line.substr(colon + 1));
            try {
                if (key == "class") {
                    cls = parse_state_class(value);
                    if (!cls) throw bad("unknown class '" + value + "'");
                } else if (key == "alphabet") {
                    std::vector<std::string> names;
                    std::stringstream ss(value);
                    for (std::string item; std::getline(ss, item, ',');) names.push_back(trim(item));
                    alphabet = Alphabet::from_names(names);
                } else if (key == "depth") {
                    depth = std::stoul(value);
                } else if (key == "probe") {
                    probe = value;
                } else {
                    throw bad("unknown header '" + key + "'");
                }
            } catch (const ConstraintViolation&) {
                throw;
            } catch (const std::exception& e) {
                throw bad(e.what());
            }
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw bad("expected '<atoms> = T|F'");
        const auto lhs = trim(line.substr(0, eq));
        const auto rhs = trim(line.substr(eq + 1));
        if (rhs != "T" && rhs != "F") throw bad("value must be T or F");
        try {
            if (!table.emplace(parse_atom_string(lhs), rhs == "T").second) throw bad("duplicate entry " + lhs);
        } catch (const ConstraintViolation&) {
            throw;
        } catch (const std::exception& e) {
            throw bad(e.what());
        }
    }
    if (!cls || !alphabet || !depth) throw ConstraintViolation("state file needs class, alphabet and depth headers");
    TruncatedState f(*cls, *alphabet, *depth, std::move(table));
    if (auto v = constraint_violation(f)) throw ConstraintViolation(to_string(*cls) + " constraint violated: " + *v);
    return {std::move(f), std::move(probe)};
}

}  // namespace hmalab
