#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "cyclo_hecke/serialize.hpp"
#include "cyclo_hecke/specialize.hpp"
#include "cyclo_hecke/table_io.hpp"

using namespace cyclo_hecke;

namespace {

bool same_table(const CharacterTable& a, const CharacterTable& b) {
  return a.r == b.r && a.p == b.p && a.n == b.n && a.ring == b.ring && a.rows == b.rows && a.cols == b.cols &&
         a.entries == b.entries;
}

std::filesystem::path scratch_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("cyclo-hecke-test-" + name);
  std::filesystem::remove_all(dir);
  return dir;
}

}  // namespace

TEST_CASE("json round trip") {
  for (auto [r, p, n] : {std::tuple{2, 1, 2}, std::tuple{1, 1, 3}, std::tuple{2, 2, 2}, std::tuple{4, 2, 2}}) {
    CharacterTable t = compute_table(r, p, n);
    std::string json = write_table(t, TableFormat::json);
    CharacterTable back = read_table_json(json);
    CHECK(same_table(t, back));
    CHECK(write_table(back, TableFormat::json) == json);
  }
}

TEST_CASE("output is deterministic") {
  CharacterTable a = compute_table(2, 1, 2, 1);
  CharacterTable b = compute_table(2, 1, 2, 3);
  for (auto f : {TableFormat::text, TableFormat::csv, TableFormat::json}) CHECK(write_table(a, f) == write_table(b, f));
}

TEST_CASE("text and csv layout") {
  CharacterTable t = compute_table(1, 1, 2);
  std::string text = write_table(t, TableFormat::text);
  CHECK(text.rfind("H(1,2)  N=1\n", 0) == 0);
  std::string csv = write_table(t, TableFormat::csv);
  CHECK(csv.rfind("row,", 0) == 0);
  // row labels such as 1,1 contain commas and must be quoted
  CHECK(csv.find("\"1,1\",") != std::string::npos);
  CHECK(parse_format("csv") == TableFormat::csv);
  CHECK_THROWS_AS(parse_format("xml"), std::invalid_argument);
}

TEST_CASE("malformed json is a parse error") {
  CHECK_THROWS_AS(read_table_json("{"), ParseError);
  CHECK_THROWS_AS(read_table_json("{\"algebra\": {}}"), ParseError);
  CharacterTable t = compute_table(1, 1, 2);
  std::string json = write_table(t, TableFormat::json);
  auto pos = json.find("\"entries\"");
  CHECK_THROWS_AS(read_table_json(json.substr(0, pos) + "\"entries\": []}"), ParseError);
}

TEST_CASE("cache key") {
  // FNV-1a of "cyclo-hecke/table/v1/r=2/p=1/n=2", computed outside this library
  CHECK(table_cache_key(2, 1, 2) == "6734316e951c1aae");
  CHECK(table_cache_key(2, 1, 2) != table_cache_key(2, 2, 2));
}

TEST_CASE("cached tables equal fresh ones") {
  auto dir = scratch_dir("cache");
  CHECK_FALSE(load_cached_table(dir.string(), 2, 2, 2).has_value());
  CharacterTable first = cached_table(dir.string(), 2, 2, 2);
  auto hit = load_cached_table(dir.string(), 2, 2, 2);
  REQUIRE(hit.has_value());
  CHECK(same_table(*hit, compute_table(2, 2, 2)));
  CHECK(same_table(cached_table(dir.string(), 2, 2, 2), first));
  // a damaged entry is ignored and rewritten
  for (const auto& e : std::filesystem::directory_iterator(dir)) std::ofstream(e.path()) << "garbage";
  CHECK_FALSE(load_cached_table(dir.string(), 2, 2, 2).has_value());
  CHECK(same_table(cached_table(dir.string(), 2, 2, 2), first));
  CHECK(load_cached_table(dir.string(), 2, 2, 2).has_value());
  std::filesystem::remove_all(dir);
}

TEST_CASE("compute_table rejects bad parameters") {
  CHECK_THROWS_AS(compute_table(3, 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(compute_table(2, 1, 0), std::invalid_argument);
}

TEST_CASE("group bindings") {
  CharacterTable t = compute_table(3, 1, 2);
  Bindings b = group_bindings(t);
  REQUIRE(b.size() == 4);
  CHECK(b.at("q") == CycloRational::one(t.ring->field()));
  CHECK(b.at("u1") == CycloRational::one(t.ring->field()));
  CHECK(b.at("u3") == root_of_unity(3, 2));
  CharacterTable t2 = compute_table(4, 2, 2);
  Bindings b2 = group_bindings(t2);
  CHECK(b2.at("y1") == root_of_unity(4, 1));
}

TEST_CASE("specialization keeps unbound parameters") {
  CharacterTable t = compute_table(2, 1, 2);
  const CycloField& field = t.ring->field();
  auto [name, value] = parse_binding("q=1", field);
  CHECK(name == "q");
  CharacterTable s = specialize_table(t, Bindings{{name, value}});
  CHECK(s.ring->vars() == std::vector<std::string>{"u1", "u2"});
  CharacterTable full = specialize_table(s, Bindings{{"u1", CycloRational::one(field)}, {"u2", -CycloRational::one(field)}});
  CHECK(same_table(full, specialize_table(t, group_bindings(t))));
  CHECK_THROWS_AS(specialize_table(t, Bindings{{"w", value}}), std::invalid_argument);
  CHECK_THROWS_AS(parse_binding("q", field), ParseError);
}

TEST_CASE("poles name the entry") {
  CharacterTable t = compute_table(1, 1, 2);
  const Ring* ring = t.ring;
  LaurentPoly q = LaurentPoly::variable(ring, "q");
  t.entries[0][1] = RationalFn::quotient(LaurentPoly::constant(ring, 1), LaurentPoly::constant(ring, 1) - q);
  try {
    specialize_table(t, Bindings{{"q", CycloRational::one(ring->field())}});
    FAIL("expected a pole");
  } catch (const SpecializationPole& e) {
    CHECK(std::string(e.what()).find("row " + row_name(t.rows[0]) + ", column " + column_name(t.cols[1])) !=
          std::string::npos);
  }
}
