#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "hmalab/normalizers.hpp"
#include "hmalab/rewrite.hpp"
#include "hmalab/semantics.hpp"
#include "hmalab/term.hpp"

namespace hmalab {

// ---- laws -------------------------------------------------------------------

// Equation over term variables; names listed in atom_vars range over atoms only.
struct Law {
    std::string name;
    PatternTerm lhs;
    PatternTerm rhs;
    std::vector<std::string> atom_vars;
};

// The axioms of CP_K itself (cumulative over CP and the class axioms).
std::vector<Law> axioms(Congruence k);
// axioms(k) plus the consequences checked alongside them.
std::vector<Law> checked_laws(Congruence k);
std::string render_law(const Law& law);

// ---- random terms -------------------------------------------------------------

struct TermShape {
    std::size_t max_depth = 3;
    double leaf_bias = 0.35;  // chance of stopping early at an inner level
    double constant_bias = 0.3;  // chance a leaf is T or F rather than an atom
};

Term random_term(std::mt19937_64& rng, const Alphabet& atoms, const TermShape& shape = {});
Term instantiate_law_side(const PatternTerm& side, const std::map<std::string, Term>& binding);
std::map<std::string, Term> random_binding(const Law& law, std::mt19937_64& rng, const Alphabet& atoms,
                                           const TermShape& shape);

// ---- verdicts -----------------------------------------------------------------

enum class Method { canonical_form, oracle, both_agree };
std::string to_string(Method m);

struct Witness {
    TruncatedState state;
    std::optional<AtomString> probe;  // absent: the replies differ
    std::string probe_text() const { return probe ? to_string(*probe) : "reply"; }
};

struct Verdict {
    bool equivalent = false;
    Method method = Method::oracle;
    std::optional<Witness> witness;
};

inline constexpr std::size_t kDefaultProbeDepth = 2;

// `alphabet` topped up to two atoms, or the atoms of both terms plus one fresh atom.
Alphabet oracle_alphabet(const Term& t, const Term& u, const std::optional<Alphabet>& alphabet = std::nullopt);
std::size_t oracle_depth(const Term& t, const Term& u, std::size_t probe_depth = kDefaultProbeDepth);

// Quantifies over every class-K truncated state by deciding only the valuation entries an
// evaluation actually consults. Throws GuardViolation when one search path needs more
// than max_choices() entries.
Verdict oracle_equivalent(const Term& t, const Term& u, Congruence k,
                          const std::optional<Alphabet>& alphabet = std::nullopt,
                          std::size_t probe_depth = kDefaultProbeDepth);
// Same question answered by materializing every state via enumerate_states.
Verdict exhaustive_equivalent(const Term& t, const Term& u, Congruence k,
                              const std::optional<Alphabet>& alphabet = std::nullopt,
                              std::size_t probe_depth = kDefaultProbeDepth);
Verdict canonical_equivalent(const Term& t, const Term& u, Congruence k);

// Replays the witness through reply/apply.
bool witness_separates(const Witness& w, const Term& t, const Term& u);

struct ProfileEntry {
    bool equivalent = false;
    bool canonical = false;
    std::optional<bool> oracle;  // absent when the guard refused
    bool agree() const { return !oracle || *oracle == canonical; }
};

using Profile = std::map<Congruence, ProfileEntry>;

// Oracle verdicts are authoritative where available. Throws std::logic_error on a
// profile that is not monotone along free < rp < cr < wm < mem < st.
Profile equivalence_profile(const Term& t, const Term& u);
bool is_monotone(const Profile& p);

struct LawReport {
    std::string name;
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::size_t skipped = 0;  // guard refusals
    std::optional<std::string> first_failure;
};

std::vector<LawReport> axiom_soundness_suite(Congruence k, std::size_t samples, std::uint64_t seed = 1,
                                             const TermShape& shape = {1, 0.5, 0.5});

}  // namespace hmalab
