#include "cyclo_hecke/specialize.hpp"

#include "cyclo_hecke/serialize.hpp"
#include "cyclo_hecke/table_io.hpp"

namespace cyclo_hecke {

Bindings group_bindings(const CharacterTable& table) {
  const CycloField& field = table.ring->field();
  Bindings b;
  for (const auto& name : table.ring->vars()) {
    if (name == "q") {
      b.emplace(name, CycloRational::one(field));
    } else if (name.size() > 1 && name[0] == 'u') {
      b.emplace(name, root_of_unity(table.r, std::stoi(name.substr(1)) - 1));
    } else if (name.size() > 1 && name[0] == 'y') {
      b.emplace(name, root_of_unity(table.r, std::stoi(name.substr(1))));
    } else {
      throw std::invalid_argument("no group value for parameter " + name);
    }
  }
  for (auto& [name, value] : b) {
    if (value.order() != field.order()) {
      if (value.order() != 1) throw std::invalid_argument("table field cannot hold the r-th roots of unity");
      value = CycloRational(field, value.coeffs()[0]);
    }
  }
  return b;
}

CharacterTable specialize_table(const CharacterTable& table, const Bindings& bindings) {
  std::vector<std::string> rest;
  for (const auto& name : table.ring->vars())
    if (!bindings.count(name)) rest.push_back(name);
  for (const auto& [name, value] : bindings)
    if (table.ring->index_of(name) < 0) throw std::invalid_argument("table has no parameter " + name);
  CharacterTable out = table;
  out.ring = Ring::get(table.ring->order(), rest);
  Substitution s(table.ring, out.ring);
  for (const auto& [name, value] : bindings) s.bind(name, value);
  for (size_t i = 0; i < table.rows.size(); ++i) {
    for (size_t c = 0; c < table.cols.size(); ++c) {
      try {
        out.entries[i][c] = substitute(table.entries[i][c], s);
      } catch (const SpecializationPole& e) {
        throw SpecializationPole("pole at row " + row_name(table.rows[i]) + ", column " + column_name(table.cols[c]) + ": " +
                                 e.what());
      }
    }
  }
  return out;
}

std::pair<std::string, CycloRational> parse_binding(const std::string& text, const CycloField& field) {
  auto eq = text.find('=');
  if (eq == std::string::npos || eq == 0) throw ParseError("binding must look like name=value: " + text);
  return {text.substr(0, eq), parse_cyclo(text.substr(eq + 1), field)};
}

}  // namespace cyclo_hecke
