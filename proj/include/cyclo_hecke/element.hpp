#pragma once

#include <string>
#include <vector>

#include "cyclo_hecke/seminormal.hpp"

namespace cyclo_hecke {

// Blocks (ell[j-1]+1 .. ell[j]) with exponents exps[j]; ell strictly increasing, last entry n.
struct StandardElementSpec {
  std::vector<int> ell;
  std::vector<int> exps;

  int n() const { return ell.empty() ? 0 : ell.back(); }
  std::vector<int> block_sizes() const;
  auto operator<=>(const StandardElementSpec&) const = default;
};

// Throws std::invalid_argument unless ell is a valid sequence ending at n with one exponent per block.
void validate(const StandardElementSpec& spec, int n);

// Product of the blocks t_k^i T_{k+1} ... T_l.
AlgebraWord element_word(const StandardElementSpec& spec);

// H(r,p,n) element: S~ or S first block, then S blocks; alpha selects the sigma power.
struct GPElementSpec {
  bool tilde = false;
  StandardElementSpec blocks;
  int alpha = 0;
  auto operator<=>(const GPElementSpec&) const = default;
};

// S_1^i a_1 a_3 ... a_l (tilde first block) or S_k^i a_{k+1} ... a_l.
AlgebraWord gp_element_word(const GPElementSpec& spec);

// Grammar: `ell=3,4,8,10 i=0,2,3,1`, optionally followed by `tilde=0|1 alpha=A`.
GPElementSpec parse_gp_element(const std::string& text);
StandardElementSpec parse_element(const std::string& text);
std::string to_string(const StandardElementSpec& spec);
std::string to_string(const GPElementSpec& spec);

}  // namespace cyclo_hecke
