#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hmalab/term.hpp"
#include "hmalab/weight.hpp"

namespace hmalab {

// A term whose atom leaves stand for rule variables. Reading a pattern as a
// closed term turns each variable into an opaque constant.
class PatternTerm {
public:
    explicit PatternTerm(Term shape) : shape_(std::move(shape)) {}
    static PatternTerm parse(std::string_view text);

    const Term& shape() const { return shape_; }
    const Term& as_closed() const { return shape_; }
    std::set<std::string> variables() const;

    friend bool operator==(const PatternTerm&, const PatternTerm&) = default;

private:
    Term shape_;
};

using Substitution = std::map<std::string, Term>;

std::optional<Substitution> match(const PatternTerm& pattern, const Term& t);
Term instantiate(const PatternTerm& pattern, const Substitution& subst);

enum class RuleId { CP1, CP2, CP3, CP4, TTT };
std::string to_string(RuleId id);

struct RewriteRule {
    PatternTerm lhs;
    PatternTerm rhs;
    RuleId id;
};

enum class SystemId { cp, cpt };

struct RewriteSystem {
    SystemId id;
    std::vector<RewriteRule> rules;

    static const RewriteSystem& cp();
    static const RewriteSystem& cpt();
    static const RewriteSystem& get(SystemId id) { return id == SystemId::cp ? cp() : cpt(); }
};

enum class Step { then_branch, condition, else_branch };
using Position = std::vector<Step>;
std::string to_string(const Position& p);

const Term& subterm_at(const Term& t, const Position& p);
Term replace_at(const Term& t, const Position& p, Term replacement);

enum class Strategy { leftmost_innermost, leftmost_outermost };

struct Contraction {
    Term result;
    RuleId rule;
    Position position;
};

std::optional<Contraction> rewrite_step(const Term& t, const RewriteSystem& system,
                                        Strategy strategy = Strategy::leftmost_innermost);
// Every one-step reduct at every position, in traversal order.
std::vector<Contraction> all_contractions(const Term& t, const RewriteSystem& system);

struct TraceEntry {
    Position position;
    RuleId rule;
    Term before;
    Term after;
    Weight w_before;
    Weight w_after;
};

struct Normalization {
    Term normal_form;
    std::vector<TraceEntry> trace;
};

Normalization normalize(const Term& t, const RewriteSystem& system,
                        Strategy strategy = Strategy::leftmost_innermost, bool record_trace = true);
// Normal form under CP computed bottom-up without a trace.
Term cp_normal_form(const Term& t);
bool is_cp_normal_shape(const Term& t);
std::string render_trace(const std::vector<TraceEntry>& trace);

struct CriticalPair {
    std::string label;
    PatternTerm overlap;
    PatternTerm left;
    PatternTerm right;
    std::optional<PatternTerm> stated_reduct;
};

std::vector<CriticalPair> critical_pairs(SystemId system);

struct JoinResult {
    bool joinable;
    Term left_normal;
    Term right_normal;
};

JoinResult join(const CriticalPair& pair, const RewriteSystem& system);
bool joinable(const CriticalPair& pair, const RewriteSystem& system);
bool equal_up_to_renaming(const Term& lhs, const Term& rhs);

}  // namespace hmalab
