#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hmalab/term.hpp"
#include "hmalab/weight.hpp"

namespace hmalab {

// Ordered from finest to coarsest identification.
enum class Congruence { free, rp, cr, wm, mem, st };

inline constexpr std::array<Congruence, 6> kCongruences{Congruence::free, Congruence::rp, Congruence::cr,
                                                        Congruence::wm,   Congruence::mem, Congruence::st};

std::string to_string(Congruence k);
std::optional<Congruence> parse_congruence(std::string_view name);

BasicForm basic_form(const Term& t);
BasicForm rp_basic_form(const Term& t);
BasicForm cr_basic_form(const Term& t);
BasicForm wm_basic_form(const Term& t);
BasicForm mem_basic_form(const Term& t);
BasicForm st_canonical(const Term& t, const Alphabet& order);

// Dispatch; st uses `order` or, when absent, the atoms of t by name.
BasicForm normal_form(const Term& t, Congruence k, const std::optional<Alphabet>& order = std::nullopt);

// Conditional composition of basic forms, resolving each new node with `fixup`.
using NodeFixup = std::function<BasicForm(const BasicForm&, const Atom&, const BasicForm&)>;
BasicForm compose_basic(const Term& t, const NodeFixup& fixup);
BasicForm plain_node(const BasicForm& l, const Atom& a, const BasicForm& r);
BasicForm rp_node(const BasicForm& l, const Atom& a, const BasicForm& r);
BasicForm cr_node(const BasicForm& l, const Atom& a, const BasicForm& r);
BasicForm wm_node(const BasicForm& l, const Atom& a, const BasicForm& r);
BasicForm mem_node(const BasicForm& l, const Atom& a, const BasicForm& r);

// Shape validators for each refinement.
bool is_rp_basic(const BasicForm& t);
bool is_cr_basic(const BasicForm& t);
bool is_wm_basic(const BasicForm& t);
bool is_mem_basic(const BasicForm& t);
bool is_st_canonical(const BasicForm& t, const Alphabet& order);

bool static_value(const Term& t, const std::vector<std::pair<Atom, bool>>& assignment);

BigInt count_mem(unsigned n);
BigInt count_core_strings(unsigned n);
void for_each_mem_basic_form(const Alphabet& atoms, const std::function<void(const BasicForm&)>& visit);
std::vector<BasicForm> enumerate_mem_basic_forms(const Alphabet& atoms);
std::vector<std::vector<Atom>> enumerate_core_strings(const Alphabet& atoms);

inline constexpr std::size_t kMaxMemEnumerationAtoms = 3;

}  // namespace hmalab
