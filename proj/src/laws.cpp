#include <algorithm>
#include <stdexcept>

#include "hmalab/decide.hpp"
#include "hmalab/syntax.hpp"

namespace hmalab {

namespace {

Law law(std::string name, std::string_view lhs, std::string_view rhs, std::vector<std::string> atom_vars = {}) {
    return {std::move(name), PatternTerm::parse(lhs), PatternTerm::parse(rhs), std::move(atom_vars)};
}

std::vector<Law> cp_axioms() {
    return {
        law("CP1", "x <| T |> y", "x"),
        law("CP2", "x <| F |> y", "y"),
        law("CP3", "T <| x |> F", "x"),
        law("CP4", "x <| (y <| z |> u) |> v", "(x <| y |> v) <| z |> (x <| u |> v)"),
    };
}

std::vector<Law> cr_axioms() {
    return {
        law("CPcr1", "(x <| a |> y) <| a |> z", "x <| a |> z", {"a"}),
        law("CPcr2", "x <| a |> (y <| a |> z)", "x <| a |> z", {"a"}),
    };
}

void append(std::vector<Law>& out, std::vector<Law> more) {
    for (auto& l : more) out.push_back(std::move(l));
}

}  // namespace

std::vector<Law> axioms(Congruence k) {
    auto out = cp_axioms();
    switch (k) {
        case Congruence::free: break;
        case Congruence::rp:
            append(out, {
                            law("CPrp1", "(x <| a |> y) <| a |> z", "(x <| a |> x) <| a |> z", {"a"}),
                            law("CPrp2", "x <| a |> (y <| a |> z)", "x <| a |> (z <| a |> z)", {"a"}),
                        });
            break;
        case Congruence::cr: append(out, cr_axioms()); break;
        case Congruence::wm:
            append(out, cr_axioms());
            append(out, {
                            law("CPwm1", "((x <| a |> y) <| b |> z) <| a |> v", "(x <| b |> z) <| a |> v",
                                {"a", "b"}),
                            law("CPwm2", "x <| a |> (y <| b |> (z <| a |> v))", "x <| a |> (y <| b |> v)",
                                {"a", "b"}),
                        });
            break;
        case Congruence::mem:
            out.push_back(law("CPmem", "x <| y |> (z <| u |> (v <| y |> w))", "x <| y |> (z <| u |> w)"));
            break;
        case Congruence::st:
            append(out, {
                            law("CPstat", "(x <| y |> z) <| u |> v", "(x <| u |> v) <| y |> (z <| u |> v)"),
                            law("CPcontr", "(x <| y |> z) <| y |> u", "x <| y |> u"),
                        });
            break;
    }
    return out;
}

std::vector<Law> checked_laws(Congruence k) {
    auto out = axioms(k);
    switch (k) {
        case Congruence::free:
            out.push_back(law("CP-swap", "y <| x |> z", "z <| (F <| x |> T) |> y"));
            break;
        case Congruence::mem:
            append(out, {
                            law("CPmem-inner", "x <| y |> ((z <| y |> u) <| v |> w)", "x <| y |> (u <| v |> w)"),
                            law("CPmem-left", "(x <| y |> (z <| u |> v)) <| u |> w", "(x <| y |> z) <| u |> w"),
                            law("CPmem-outer", "((x <| y |> z) <| u |> v) <| y |> w", "(x <| u |> v) <| y |> w"),
                            law("CPmem-contr-right", "x <| y |> (v <| y |> w)", "x <| y |> w"),
                            law("CPmem-contr-left", "(x <| y |> z) <| y |> w", "x <| y |> w"),
                        });
            break;
        case Congruence::st:
            append(out, {
                            law("CPstat'", "x <| y |> (z <| u |> v)", "(x <| y |> z) <| u |> (x <| y |> v)"),
                            law("CPcontr'", "x <| y |> (z <| y |> u)", "x <| y |> u"),
                            law("st-idem", "x <| y |> x", "x"),
                        });
            break;
        default: break;
    }
    return out;
}

std::string render_law(const Law& law) {
    return law.name + ": " + print_term(law.lhs.shape()) + " = " + print_term(law.rhs.shape());
}

Term random_term(std::mt19937_64& rng, const Alphabet& atoms, const TermShape& shape) {
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::uniform_int_distribution<std::size_t> pick(0, atoms.size() - 1);
    auto leaf = [&]() -> Term {
        if (coin(rng) < shape.constant_bias) return Term::leaf(coin(rng) < 0.5);
        return Term::atom(atoms.atoms()[pick(rng)]);
    };
    auto gen = [&](auto&& self, std::size_t depth) -> Term {
        if (depth == 0 || coin(rng) < shape.leaf_bias) return leaf();
        Term x = self(self, depth - 1);
        Term y = self(self, depth - 1);
        Term z = self(self, depth - 1);
        return Term::cond(std::move(x), std::move(y), std::move(z));
    };
    return gen(gen, shape.max_depth);
}

Term instantiate_law_side(const PatternTerm& side, const std::map<std::string, Term>& binding) {
    return instantiate(side, binding);
}

std::map<std::string, Term> random_binding(const Law& law, std::mt19937_64& rng, const Alphabet& atoms,
                                           const TermShape& shape) {
    std::map<std::string, Term> binding;
    std::uniform_int_distribution<std::size_t> pick(0, atoms.size() - 1);
    auto vars = law.lhs.variables();
    for (const auto& v : law.rhs.variables()) vars.insert(v);
    for (const auto& v : vars) {
        const bool atom_only = std::find(law.atom_vars.begin(), law.atom_vars.end(), v) != law.atom_vars.end();
        binding.emplace(v, atom_only ? Term::atom(atoms.atoms()[pick(rng)]) : random_term(rng, atoms, shape));
    }
    return binding;
}

}  // namespace hmalab
