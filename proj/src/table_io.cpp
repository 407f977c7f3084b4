#include "cyclo_hecke/table_io.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "cyclo_hecke/clifford.hpp"
#include "cyclo_hecke/serialize.hpp"

namespace cyclo_hecke {

namespace {

using Json = nlohmann::ordered_json;

// Bump when table contents or their serialization change.
constexpr int kTableVersion = 1;

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::vector<std::vector<std::string>> cells(const CharacterTable& table) {
  std::vector<std::vector<std::string>> out;
  for (const auto& row : table.entries) {
    out.emplace_back();
    for (const auto& e : row) out.back().push_back(to_string(e));
  }
  return out;
}

std::string algebra_name(const CharacterTable& t) {
  std::ostringstream os;
  if (t.p == 1)
    os << "H(" << t.r << "," << t.n << ")";
  else
    os << "H(" << t.r << "," << t.p << "," << t.n << ")";
  return os.str();
}

std::string write_text(const CharacterTable& t) {
  auto body = cells(t);
  std::vector<std::string> header{""};
  for (const auto& c : t.cols) header.push_back(column_name(c));
  std::vector<std::vector<std::string>> grid{header};
  for (size_t i = 0; i < t.rows.size(); ++i) {
    grid.push_back({row_name(t.rows[i])});
    grid.back().insert(grid.back().end(), body[i].begin(), body[i].end());
  }
  std::vector<size_t> width(header.size(), 0);
  for (const auto& line : grid)
    for (size_t c = 0; c < line.size(); ++c) width[c] = std::max(width[c], line[c].size());
  std::ostringstream os;
  os << algebra_name(t) << "  N=" << t.ring->order() << "\n";
  for (const auto& line : grid) {
    std::string out;
    for (size_t c = 0; c < line.size(); ++c) {
      if (c > 0) out += "  ";
      out += line[c] + std::string(width[c] - line[c].size(), ' ');
    }
    while (!out.empty() && out.back() == ' ') out.pop_back();
    os << out << "\n";
  }
  return os.str();
}

std::string write_csv(const CharacterTable& t) {
  auto body = cells(t);
  std::ostringstream os;
  os << "row";
  for (const auto& c : t.cols) os << "," << csv_field(column_name(c));
  os << "\n";
  for (size_t i = 0; i < t.rows.size(); ++i) {
    os << csv_field(row_name(t.rows[i]));
    for (const auto& e : body[i]) os << "," << csv_field(e);
    os << "\n";
  }
  return os.str();
}

Json to_json(const CharacterTable& t) {
  Json j;
  j["algebra"] = {{"r", t.r}, {"p", t.p}, {"n", t.n}, {"N", t.ring->order()}, {"vars", t.ring->vars()}};
  j["rows"] = Json::array();
  for (const auto& row : t.rows) {
    Json jr;
    jr["shape"] = to_string(row.shape);
    if (row.j) jr["j"] = *row.j;
    jr["f_lambda"] = row.f;
    jr["K_size"] = row.k_size;
    j["rows"].push_back(jr);
  }
  j["cols"] = Json::array();
  for (const auto& col : t.cols) {
    Json jc;
    jc["ell"] = col.spec.ell;
    jc["i"] = col.spec.exps;
    if (col.tilde) jc["tilde"] = *col.tilde;
    j["cols"].push_back(jc);
  }
  j["entries"] = cells(t);
  return j;
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::filesystem::path cache_file(const std::string& dir, int r, int p, int n) {
  return std::filesystem::path(dir) / ("table-" + table_cache_key(r, p, n) + ".json");
}

}  // namespace

TableFormat parse_format(const std::string& name) {
  if (name == "text") return TableFormat::text;
  if (name == "csv") return TableFormat::csv;
  if (name == "json") return TableFormat::json;
  throw std::invalid_argument("unknown format " + name + " (expected text, csv or json)");
}

std::string row_name(const RowLabel& row) {
  std::string s = to_string(row.shape);
  if (row.j) s += " j=" + std::to_string(*row.j);
  return s;
}

std::string column_name(const ColumnLabel& col) {
  std::string s = to_string(col.spec);
  if (col.tilde) s += std::string(" tilde=") + (*col.tilde ? "1" : "0");
  return s;
}

std::string write_table(const CharacterTable& table, TableFormat format) {
  switch (format) {
    case TableFormat::text:
      return write_text(table);
    case TableFormat::csv:
      return write_csv(table);
    case TableFormat::json:
      return to_json(table).dump(2) + "\n";
  }
  throw std::logic_error("unhandled table format");
}

CharacterTable read_table_json(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("table JSON: ") + e.what());
  }
  try {
    CharacterTable t;
    const Json& alg = j.at("algebra");
    t.r = alg.at("r").get<int>();
    t.p = alg.at("p").get<int>();
    t.n = alg.at("n").get<int>();
    t.ring = Ring::get(alg.at("N").get<int>(), alg.at("vars").get<std::vector<std::string>>());
    for (const Json& jr : j.at("rows")) {
      RowLabel row;
      row.shape = parse_shape(jr.at("shape").get<std::string>());
      if (jr.contains("j")) row.j = jr.at("j").get<int>();
      row.f = jr.at("f_lambda").get<int>();
      row.k_size = jr.at("K_size").get<int>();
      t.rows.push_back(row);
    }
    for (const Json& jc : j.at("cols")) {
      ColumnLabel col;
      col.spec.ell = jc.at("ell").get<std::vector<int>>();
      col.spec.exps = jc.at("i").get<std::vector<int>>();
      if (jc.contains("tilde")) col.tilde = jc.at("tilde").get<bool>();
      t.cols.push_back(col);
    }
    const Json& entries = j.at("entries");
    if (entries.size() != t.rows.size()) throw ParseError("table JSON: entry rows do not match the row labels");
    for (const Json& line : entries) {
      if (line.size() != t.cols.size()) throw ParseError("table JSON: entry columns do not match the column labels");
      t.entries.emplace_back();
      for (const Json& e : line) t.entries.back().push_back(parse_rational_fn(e.get<std::string>(), t.ring));
    }
    return t;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("table JSON: ") + e.what());
  }
}

CharacterTable compute_table(int r, int p, int n, int jobs) {
  if (r < 1 || p < 1 || n < 1) throw std::invalid_argument("need r, p, n >= 1");
  if (r % p != 0) throw std::invalid_argument("p must divide r");
  return p == 1 ? character_table_hrn(r, n, jobs) : character_table_hrpn(r, p, n, jobs);
}

std::string table_cache_key(int r, int p, int n) {
  std::ostringstream key;
  key << "cyclo-hecke/table/v" << kTableVersion << "/r=" << r << "/p=" << p << "/n=" << n;
  std::ostringstream hex;
  hex << std::hex;
  hex.width(16);
  hex.fill('0');
  hex << fnv1a(key.str());
  return hex.str();
}

std::optional<CharacterTable> load_cached_table(const std::string& dir, int r, int p, int n) {
  std::ifstream in(cache_file(dir, r, p, n));
  if (!in) return std::nullopt;
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    CharacterTable t = read_table_json(buf.str());
    if (t.r != r || t.p != p || t.n != n) return std::nullopt;
    return t;
  } catch (const std::exception&) {
    return std::nullopt;  // unreadable entries are recomputed and overwritten
  }
}

void store_cached_table(const std::string& dir, const CharacterTable& table) {
  std::filesystem::create_directories(dir);
  auto target = cache_file(dir, table.r, table.p, table.n);
  auto tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
    out << write_table(table, TableFormat::json);
  }
  std::filesystem::rename(tmp, target);
}

CharacterTable cached_table(const std::string& dir, int r, int p, int n, int jobs) {
  if (dir.empty()) return compute_table(r, p, n, jobs);
  if (auto hit = load_cached_table(dir, r, p, n)) return *hit;
  CharacterTable t = compute_table(r, p, n, jobs);
  store_cached_table(dir, t);
  return t;
}

}  // namespace cyclo_hecke
