#pragma once

#include <map>
#include <string>

#include "cyclo_hecke/table.hpp"

namespace cyclo_hecke {

using Bindings = std::map<std::string, CycloRational>;

// q = 1 with u_i = zeta_r^(i-1) (H(r,n)) or y_k = zeta_r^k (H(r,p,n)): the group algebra point.
Bindings group_bindings(const CharacterTable& table);

// Substitutes constants for the bound variables; the result lives over the remaining variables.
// A vanishing denominator raises SpecializationPole naming the row and column of the entry.
CharacterTable specialize_table(const CharacterTable& table, const Bindings& bindings);

// `name=value` with value in the coefficient grammar (`1`, `-1`, `z^1`, `1/2 + -z^2`, ...).
std::pair<std::string, CycloRational> parse_binding(const std::string& text, const CycloField& field);

}  // namespace cyclo_hecke
