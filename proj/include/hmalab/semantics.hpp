#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hmalab/normalizers.hpp"
#include "hmalab/term.hpp"

namespace hmalab {

enum class StateClass { FREE, RP, CR, WM, MEM, ST };

StateClass state_class_of(Congruence k);
std::string to_string(StateClass c);
std::optional<StateClass> parse_state_class(std::string_view name);

// Non-empty in every state domain; the empty vector only appears as the result of remove_atom.
using AtomString = std::vector<Atom>;

std::string to_string(const AtomString& s);  // dot-separated
AtomString parse_atom_string(std::string_view text);

AtomString contract_runs(const AtomString& s);
AtomString leadsto(const Atom& a, const AtomString& s);
AtomString leadsto(const AtomString& prefix, const AtomString& s);  // fold of the atom-wise version
AtomString remove_atom(const AtomString& s, const Atom& a);
bool in_cr(const AtomString& s);
bool in_core(const AtomString& s);

// The string f is consulted at when a•f is queried at s.
AtomString lookup_string(StateClass c, const Atom& a, const AtomString& s);
// After the atoms of `history` were applied in order, a query at s reads f at this string.
AtomString history_lookup(StateClass c, const AtomString& history, const AtomString& s);

std::vector<AtomString> admissible_strings(StateClass c, const Alphabet& alphabet, std::size_t max_len);
// Strings on which a class-c valuation is chosen freely (the rest follow from them).
std::vector<AtomString> free_keys(StateClass c, const Alphabet& alphabet, std::size_t max_len);

// Lookup of a free key; nullopt means "not decided yet".
using KeyLookup = std::function<std::optional<bool>(const AtomString&)>;
struct Resolution {
    std::optional<bool> value;
    std::optional<AtomString> missing;  // the undecided key that blocked resolution
};
// f(s) for a class-c valuation given by its free choices.
Resolution resolve(StateClass c, const AtomString& s, const KeyLookup& lookup);

class TruncatedState {
public:
    using Table = std::map<AtomString, bool>;

    // Domain must equal admissible_strings(c, alphabet, depth); class constraints are not checked here.
    TruncatedState(StateClass c, Alphabet alphabet, std::size_t depth, Table table);
    static TruncatedState build(StateClass c, const Alphabet& alphabet, std::size_t depth,
                                const std::function<bool(const AtomString&)>& value);

    StateClass state_class() const { return class_; }
    const Alphabet& alphabet() const { return alphabet_; }
    std::size_t depth_budget() const { return depth_; }
    const Table& table() const { return table_; }

    bool at(const AtomString& s) const;

    friend bool operator==(const TruncatedState&, const TruncatedState&) = default;

private:
    StateClass class_;
    Alphabet alphabet_;
    std::size_t depth_;
    Table table_;
};

// nullopt when the table satisfies its class constraint, otherwise the first violation.
std::optional<std::string> constraint_violation(const TruncatedState& f);
bool class_constraint_check(const TruncatedState& f);

// Number of free boolean choices a full enumeration would make.
std::size_t required_choices(StateClass c, const Alphabet& alphabet, std::size_t depth);
std::size_t max_choices();  // 24 unless HMALAB_MAX_CHOICES says otherwise
void for_each_state(StateClass c, const Alphabet& alphabet, std::size_t depth,
                    const std::function<void(const TruncatedState&)>& visit);
std::vector<TruncatedState> enumerate_states(StateClass c, const Alphabet& alphabet, std::size_t depth);

TruncatedState apply_atom(const Atom& a, const TruncatedState& f);

struct Evaluation {
    bool reply;
    TruncatedState state;
};
Evaluation evaluate(const Term& t, const TruncatedState& f);
bool reply(const Term& t, const TruncatedState& f);
TruncatedState apply(const Term& t, const TruncatedState& f);

// Compares two states on the strings both domains cover.
bool agree_on_common_domain(const TruncatedState& f, const TruncatedState& g);

struct StateFile {
    TruncatedState state;
    std::optional<std::string> probe;  // "reply" or a dotted atom string
};
std::string write_state(const TruncatedState& f, const std::optional<std::string>& probe = std::nullopt);
// Throws ConstraintViolation on malformed or class-invalid tables.
StateFile read_state(std::string_view text);

}  // namespace hmalab
