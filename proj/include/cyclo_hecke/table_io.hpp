#pragma once

#include <optional>
#include <string>

#include "cyclo_hecke/table.hpp"

namespace cyclo_hecke {

enum class TableFormat { text, csv, json };

// Accepts `text`, `csv` or `json`.
TableFormat parse_format(const std::string& name);

// `2,1|-` for H(r,n) rows, `1|1 j=1` for H(r,p,n) rows.
std::string row_name(const RowLabel& row);
// `ell=1,3 i=0,0`, with ` tilde=0|1` appended for H(r,p,n) columns.
std::string column_name(const ColumnLabel& col);

std::string write_table(const CharacterTable& table, TableFormat format);
// Reads the JSON form; the ring is rebuilt from the recorded variable names and order N.
CharacterTable read_table_json(const std::string& text);

// The H(r,n) table when p = 1, the H(r,p,n) table otherwise. Throws std::invalid_argument when
// p does not divide r or n < 1.
CharacterTable compute_table(int r, int p, int n, int jobs = 1);

// FNV-1a hash of (r, p, n, format version), as 16 hex digits.
std::string table_cache_key(int r, int p, int n);
std::optional<CharacterTable> load_cached_table(const std::string& dir, int r, int p, int n);
// Writes through a temporary file and a rename, so readers never see a partial table.
void store_cached_table(const std::string& dir, const CharacterTable& table);
// compute_table behind the cache in `dir` (no caching when dir is empty).
CharacterTable cached_table(const std::string& dir, int r, int p, int n, int jobs = 1);

}  // namespace cyclo_hecke
