#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cyclo_hecke/element.hpp"

namespace cyclo_hecke {

struct RowLabel {
  MultiPartition shape;
  std::optional<int> j;  // set for H(r,p,n) rows
  int f = 1;
  int k_size = 1;
  bool operator==(const RowLabel&) const = default;
};

struct ColumnLabel {
  StandardElementSpec spec;
  std::optional<bool> tilde;  // set for H(r,p,n) columns
  bool operator==(const ColumnLabel&) const = default;
};

struct CharacterTable {
  int r = 1;
  int p = 1;
  int n = 0;
  const Ring* ring = nullptr;
  std::vector<RowLabel> rows;
  std::vector<ColumnLabel> cols;
  std::vector<std::vector<RationalFn>> entries;  // entries[row][col]
};

// Word of a column as an algebra element (R-blocks for H(r,n), S-blocks for H(r,p,n)).
AlgebraWord column_word(const ColumnLabel& col);

}  // namespace cyclo_hecke
