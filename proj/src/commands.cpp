#include <fstream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hmalab/cli.hpp"
#include "hmalab/decide.hpp"
#include "hmalab/errors.hpp"
#include "hmalab/normalizers.hpp"
#include "hmalab/rewrite.hpp"
#include "hmalab/semantics.hpp"
#include "hmalab/syntax.hpp"

namespace hmalab {

namespace {

using json = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

struct Context {
    bool as_json = false;
    std::ostream& out;
};

json envelope(const std::string& command) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = command;
    return j;
}

std::vector<std::string> split_names(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');)
        if (!item.empty()) out.push_back(item);
    return out;
}

Congruence congruence_arg(const std::string& name) {
    auto k = parse_congruence(name);
    if (!k) throw CLI::ValidationError("--congruence", "unknown congruence '" + name + "'");
    return *k;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConstraintViolation("cannot read state file " + path);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

json state_json(const TruncatedState& f) {
    json table = json::object();
    for (const auto& s : admissible_strings(f.state_class(), f.alphabet(), f.depth_budget()))
        table[to_string(s)] = f.at(s) ? "T" : "F";
    json alphabet = json::array();
    for (const auto& a : f.alphabet().atoms()) alphabet.push_back(a.name());
    return {{"class", to_string(f.state_class())}, {"alphabet", alphabet}, {"depth", f.depth_budget()},
            {"table", table}};
}

int cmd_normalize(Context& ctx, const std::string& text, const std::string& congruence, const std::string& order) {
    const Term t = parse_term(text);
    const Congruence k = congruence_arg(congruence);
    std::optional<Alphabet> atoms;
    if (!order.empty()) atoms = Alphabet::from_names(split_names(order));
    const BasicForm bf = normal_form(t, k, atoms);
    if (ctx.as_json) {
        auto j = envelope("normalize");
        j["congruence"] = to_string(k);
        j["input"] = print_term(t);
        j["normal_form"] = print_term(bf.term());
        ctx.out << j.dump() << "\n";
    } else {
        ctx.out << print_term(bf.term()) << "\n";
    }
    return exit_ok;
}

struct EquivOptions {
    std::string congruence = "free";
    bool profile = false;
    bool witness = false;
    std::string witness_out;
    std::size_t probe_depth = kDefaultProbeDepth;
};

int cmd_equiv(Context& ctx, const std::string& lhs_text, const std::string& rhs_text, const EquivOptions& opt) {
    const Term t = parse_term(lhs_text);
    const Term u = parse_term(rhs_text);
    if (opt.profile) {
        const Profile p = equivalence_profile(t, u);
        auto j = envelope("equiv");
        json entries = json::object();
        for (const auto& [k, e] : p) {
            entries[to_string(k)] = {{"equivalent", e.equivalent},
                                     {"canonical", e.canonical},
                                     {"oracle", e.oracle ? json(*e.oracle) : json(nullptr)}};
            if (!ctx.as_json)
                ctx.out << to_string(k) << ": " << (e.equivalent ? "equivalent" : "inequivalent")
                        << (e.agree() ? "" : " (canonical forms disagree)") << "\n";
        }
        j["profile"] = entries;
        if (ctx.as_json) ctx.out << j.dump() << "\n";
        return exit_ok;
    }
    const Congruence k = congruence_arg(opt.congruence);
    Verdict canonical = canonical_equivalent(t, u, k);
    std::optional<Verdict> oracle;
    try {
        oracle = oracle_equivalent(t, u, k, std::nullopt, opt.probe_depth);
    } catch (const GuardViolation&) {
    }
    Verdict verdict = oracle ? *oracle : canonical;
    if (oracle && oracle->equivalent == canonical.equivalent) verdict.method = Method::both_agree;

    if (verdict.witness && !opt.witness_out.empty()) {
        std::ofstream file(opt.witness_out);
        file << write_state(verdict.witness->state, verdict.witness->probe_text());
    }
    if (ctx.as_json) {
        auto j = envelope("equiv");
        j["congruence"] = to_string(k);
        j["equivalent"] = verdict.equivalent;
        j["method"] = to_string(verdict.method);
        j["canonical_equivalent"] = canonical.equivalent;
        j["oracle_equivalent"] = oracle ? json(oracle->equivalent) : json(nullptr);
        if (verdict.witness && opt.witness) {
            auto w = state_json(verdict.witness->state);
            w["probe"] = verdict.witness->probe_text();
            j["witness"] = w;
        }
        ctx.out << j.dump() << "\n";
    } else {
        ctx.out << to_string(k) << ": " << (verdict.equivalent ? "equivalent" : "inequivalent") << " ("
                << to_string(verdict.method) << ")\n";
        if (oracle && oracle->equivalent != canonical.equivalent)
            ctx.out << "note: canonical forms " << (canonical.equivalent ? "coincide" : "differ")
                    << ", oracle verdict used\n";
        if (verdict.witness && opt.witness) ctx.out << write_state(verdict.witness->state, verdict.witness->probe_text());
    }
    return verdict.equivalent ? exit_ok : exit_inequivalent;
}

int cmd_eval(Context& ctx, const std::string& text, const std::string& state_path) {
    const Term t = parse_term(text);
    const StateFile file = read_state(read_file(state_path));
    const Evaluation e = evaluate(t, file.state);
    if (ctx.as_json) {
        auto j = envelope("eval");
        j["reply"] = e.reply ? "T" : "F";
        j["state"] = state_json(e.state);
        ctx.out << j.dump() << "\n";
    } else {
        ctx.out << "reply: " << (e.reply ? "T" : "F") << "\n" << write_state(e.state);
    }
    return exit_ok;
}

struct TrsOptions {
    std::string system = "cp";
    std::string term;
    bool critical = false;
    std::string strategy = "innermost";
};

int cmd_trs(Context& ctx, const TrsOptions& opt) {
    const SystemId id = opt.system == "cpt" ? SystemId::cpt : SystemId::cp;
    const RewriteSystem& system = RewriteSystem::get(id);
    if (!opt.critical) {
        if (opt.term.empty()) throw CLI::ValidationError("trs", "give --term or --critical-pairs");
        const Term t = parse_term(opt.term);
        const Strategy strategy =
            opt.strategy == "outermost" ? Strategy::leftmost_outermost : Strategy::leftmost_innermost;
        const Normalization n = normalize(t, system, strategy, true);
        if (ctx.as_json) {
            auto j = envelope("trs");
            j["system"] = opt.system;
            json steps = json::array();
            for (const auto& e : n.trace)
                steps.push_back({{"pos", to_string(e.position)},
                                 {"rule", to_string(e.rule)},
                                 {"w_before", e.w_before.to_string()},
                                 {"w_after", e.w_after.to_string()},
                                 {"term", print_term(e.after)}});
            j["trace"] = steps;
            j["normal_form"] = print_term(n.normal_form);
            ctx.out << j.dump() << "\n";
        } else {
            ctx.out << render_trace(n.trace) << "normal form: " << print_term(n.normal_form) << "\n";
        }
        return exit_ok;
    }
    bool all = true;
    json rows = json::array();
    for (const auto& cp : critical_pairs(id)) {
        const JoinResult r = join(cp, system);
        all = all && r.joinable;
        if (ctx.as_json) {
            rows.push_back({{"rules", cp.label},
                            {"overlap", print_term(cp.overlap.shape())},
                            {"left", print_term(cp.left.shape())},
                            {"right", print_term(cp.right.shape())},
                            {"left_normal", print_term(r.left_normal)},
                            {"right_normal", print_term(r.right_normal)},
                            {"joinable", r.joinable}});
        } else {
            ctx.out << cp.label << " on " << print_term(cp.overlap.shape()) << ": <" << print_term(cp.left.shape())
                    << ", " << print_term(cp.right.shape()) << "> -> " << print_term(r.left_normal) << " | "
                    << print_term(r.right_normal) << " " << (r.joinable ? "joinable" : "NOT joinable") << "\n";
        }
    }
    if (ctx.as_json) {
        auto j = envelope("trs");
        j["system"] = opt.system;
        j["critical_pairs"] = rows;
        j["all_joinable"] = all;
        ctx.out << j.dump() << "\n";
    } else {
        ctx.out << (all ? "all pairs joinable" : "some pairs are not joinable") << "\n";
    }
    return all ? exit_ok : exit_inequivalent;
}

struct CountOptions {
    std::optional<unsigned> mem;
    std::optional<unsigned> core;
    std::string enumerate_mem;
};

int cmd_count(Context& ctx, const CountOptions& opt) {
    auto j = envelope("count");
    if (opt.mem) {
        const auto n = count_mem(*opt.mem);
        j["mem"] = n.str();
        if (!ctx.as_json) ctx.out << n << "\n";
    }
    if (opt.core) {
        const auto n = count_core_strings(*opt.core);
        j["core"] = n.str();
        if (!ctx.as_json) ctx.out << n << "\n";
    }
    if (!opt.enumerate_mem.empty()) {
        const Alphabet atoms = Alphabet::from_names(split_names(opt.enumerate_mem));
        std::size_t count = 0;
        json forms = json::array();
        for_each_mem_basic_form(atoms, [&](const BasicForm& f) {
            ++count;
            if (ctx.as_json) forms.push_back(print_term(f.term()));
            else ctx.out << print_term(f.term()) << "\n";
        });
        const auto expected = count_mem(static_cast<unsigned>(atoms.size()));
        if (BigInt(count) != expected)
            throw std::logic_error("enumeration produced " + std::to_string(count) + " forms, expected " +
                                   expected.str());
        j["forms"] = forms;
        j["count"] = count;
        if (!ctx.as_json) ctx.out << "count: " << count << "\n";
    }
    if (ctx.as_json) ctx.out << j.dump() << "\n";
    return exit_ok;
}

int cmd_axioms(Context& ctx, const std::string& only) {
    auto j = envelope("axioms");
    for (auto k : kCongruences) {
        if (!only.empty() && congruence_arg(only) != k) continue;
        const std::string title = k == Congruence::free ? "CP" : "CP" + to_string(k);
        json laws = json::array();
        if (!ctx.as_json) ctx.out << title << ":\n";
        for (const auto& law : axioms(k)) {
            laws.push_back(render_law(law));
            if (!ctx.as_json) ctx.out << "  " << render_law(law) << "\n";
        }
        j[title] = laws;
    }
    if (ctx.as_json) ctx.out << j.dump() << "\n";
    return exit_ok;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Proposition algebra workbench: normal forms, valuation semantics, equivalence."};
    app.require_subcommand(1);
    std::string output = "text";
    app.add_option("--output", output, "Output mode")->check(CLI::IsMember({"text", "json"}));

    std::string term_a, term_b, congruence = "free", order, state_path, only;
    auto* normalize_cmd = app.add_subcommand("normalize", "Print the basic form of a term under a congruence");
    normalize_cmd->add_option("term", term_a)->required();
    normalize_cmd->add_option("-c,--congruence", congruence)->check(CLI::IsMember({"free", "fr", "rp", "cr", "wm", "mem", "st"}));
    normalize_cmd->add_option("--order", order, "Comma-separated atom order for st");

    EquivOptions eq;
    auto* equiv_cmd = app.add_subcommand("equiv", "Decide whether two terms are congruent");
    equiv_cmd->add_option("lhs", term_a)->required();
    equiv_cmd->add_option("rhs", term_b)->required();
    auto* equiv_k = equiv_cmd->add_option("-c,--congruence", eq.congruence)
                        ->check(CLI::IsMember({"free", "fr", "rp", "cr", "wm", "mem", "st"}));
    equiv_cmd->add_flag("--profile", eq.profile, "Verdicts for all six congruences")->excludes(equiv_k);
    equiv_cmd->add_flag("--witness", eq.witness, "Print the separating state");
    equiv_cmd->add_option("--witness-out", eq.witness_out, "Write the separating state to a file");
    equiv_cmd->add_option("--probe-depth", eq.probe_depth)->check(CLI::Range(1, 4));

    auto* eval_cmd = app.add_subcommand("eval", "Evaluate a term against a state file");
    eval_cmd->add_option("term", term_a)->required();
    eval_cmd->add_option("--state", state_path)->required();

    TrsOptions trs;
    auto* trs_cmd = app.add_subcommand("trs", "Rewriting traces and critical pairs");
    trs_cmd->add_option("--system", trs.system)->check(CLI::IsMember({"cp", "cpt"}));
    trs_cmd->add_option("--term", trs.term);
    trs_cmd->add_flag("--critical-pairs", trs.critical);
    trs_cmd->add_option("--strategy", trs.strategy)->check(CLI::IsMember({"innermost", "outermost"}));

    CountOptions count;
    auto* count_cmd = app.add_subcommand("count", "Counting results for memorizing congruence");
    count_cmd->add_option("--mem", count.mem);
    count_cmd->add_option("--core", count.core);
    count_cmd->add_option("--enumerate-mem", count.enumerate_mem, "Comma-separated alphabet");

    auto* axioms_cmd = app.add_subcommand("axioms", "Print the axiom tables");
    axioms_cmd->add_option("-c,--congruence", only);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_parse_error;
    }

    Context ctx{output == "json", out};
    try {
        if (*normalize_cmd) return cmd_normalize(ctx, term_a, congruence, order);
        if (*equiv_cmd) return cmd_equiv(ctx, term_a, term_b, eq);
        if (*eval_cmd) return cmd_eval(ctx, term_a, state_path);
        if (*trs_cmd) return cmd_trs(ctx, trs);
        if (*count_cmd) return cmd_count(ctx, count);
        if (*axioms_cmd) return cmd_axioms(ctx, only);
    } catch (const SyntaxError& e) {
        err << "parse error: " << e.what() << "\n";
        return exit_parse_error;
    } catch (const CLI::ValidationError& e) {
        err << e.what() << "\n";
        return exit_parse_error;
    } catch (const GuardViolation& e) {
        err << "guard: " << e.what() << "\n";
        return exit_guard;
    } catch (const ConstraintViolation& e) {
        err << "invalid state: " << e.what() << "\n";
        return exit_guard;
    } catch (const BudgetExhausted& e) {
        err << "insufficient depth: " << e.what() << "\n";
        return exit_depth;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return exit_parse_error;
    }
    return exit_parse_error;
}

}  // namespace hmalab
