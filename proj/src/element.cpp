#include "cyclo_hecke/element.hpp"

#include <sstream>
#include <stdexcept>

namespace cyclo_hecke {

std::vector<int> StandardElementSpec::block_sizes() const {
  std::vector<int> out;
  int prev = 0;
  for (int l : ell) {
    out.push_back(l - prev);
    prev = l;
  }
  return out;
}

void validate(const StandardElementSpec& spec, int n) {
  if (spec.ell.empty() || spec.ell.size() != spec.exps.size()) throw std::invalid_argument("element needs one exponent per block");
  int prev = 0;
  for (int l : spec.ell) {
    if (l <= prev) throw std::invalid_argument("ell must be strictly increasing and positive");
    prev = l;
  }
  if (prev != n) throw std::invalid_argument("last ell must equal n = " + std::to_string(n));
}

AlgebraWord element_word(const StandardElementSpec& spec) {
  AlgebraWord w;
  int start = 1;
  for (size_t b = 0; b < spec.ell.size(); ++b) {
    if (spec.exps[b] != 0) w.append('t', start, spec.exps[b]);
    for (int j = start + 1; j <= spec.ell[b]; ++j) w.append('T', j);
    start = spec.ell[b] + 1;
  }
  return w;
}

AlgebraWord gp_element_word(const GPElementSpec& spec) {
  const auto& s = spec.blocks;
  AlgebraWord w;
  int start = 1;
  for (size_t b = 0; b < s.ell.size(); ++b) {
    if (s.exps[b] != 0) w.append('S', start, s.exps[b]);
    if (b == 0 && spec.tilde) {
      if (s.ell[0] < 2) throw std::invalid_argument("tilde form needs ell_1 >= 2");
      w.append('a', 1);
      for (int j = 3; j <= s.ell[0]; ++j) w.append('a', j);
    } else {
      for (int j = start + 1; j <= s.ell[b]; ++j) w.append('a', j);
    }
    start = s.ell[b] + 1;
  }
  return w;
}

namespace {

std::vector<int> parse_ints(const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, ',')) {
    size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(part, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad integer list '" + text + "'");
    }
    if (used != part.size()) throw std::invalid_argument("bad integer list '" + text + "'");
    out.push_back(v);
  }
  return out;
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

}  // namespace

GPElementSpec parse_gp_element(const std::string& text) {
  GPElementSpec out;
  bool have_ell = false, have_i = false;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    size_t eq = tok.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("expected key=value, got '" + tok + "'");
    std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
    if (key == "ell") {
      out.blocks.ell = parse_ints(val);
      have_ell = true;
    } else if (key == "i") {
      out.blocks.exps = parse_ints(val);
      have_i = true;
    } else if (key == "tilde") {
      if (val != "0" && val != "1") throw std::invalid_argument("tilde must be 0 or 1");
      out.tilde = val == "1";
    } else if (key == "alpha") {
      auto v = parse_ints(val);
      if (v.size() != 1 || v[0] < 0) throw std::invalid_argument("alpha must be a non-negative integer");
      out.alpha = v[0];
    } else {
      throw std::invalid_argument("unknown key '" + key + "'");
    }
  }
  if (!have_ell) throw std::invalid_argument("element needs ell=...");
  if (!have_i) out.blocks.exps.assign(out.blocks.ell.size(), 0);
  validate(out.blocks, out.blocks.n());
  return out;
}

StandardElementSpec parse_element(const std::string& text) {
  GPElementSpec g = parse_gp_element(text);
  if (g.tilde || g.alpha != 0) throw std::invalid_argument("tilde and alpha apply only to H(r,p,n) elements");
  return g.blocks;
}

std::string to_string(const StandardElementSpec& spec) { return "ell=" + join(spec.ell) + " i=" + join(spec.exps); }

std::string to_string(const GPElementSpec& spec) {
  return to_string(spec.blocks) + " tilde=" + (spec.tilde ? "1" : "0") + " alpha=" + std::to_string(spec.alpha);
}

}  // namespace cyclo_hecke
