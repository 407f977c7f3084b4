#pragma once

#include "cyclo_hecke/mn.hpp"

namespace cyclo_hecke {

// Order of eps^(alpha f) as a root of unity: k_size / gcd(alpha, k_size).
int gamma_of(int alpha, int k_size);

struct ReducedWord {
  StandardElementSpec r_word;  // exponents (i_1 p - i_2 - ... - i_m, i_2, ..., i_m)
  int prefactor = 0;           // the bitrace picks up eps^(alpha f * prefactor)
};

// Conjugates an S-word into R-blocks by a power of t_1. The prefactor is 1 - (i_2 + ... + i_m)
// for the tilde form and -(i_2 + ... + i_m) otherwise.
ReducedWord reduce_to_R(const GPElementSpec& spec, int p);

// (q^g - q^-g) / (q - q^-1)
LaurentPoly quantum_integer(const LaurentPoly& q, int gamma);

// prod_{i=1}^{gamma-1} (q / (1 - omega^-i) + q^-1 / (1 - omega^i)) for a primitive gamma-th root omega.
LaurentPoly c_block(const Ring* ring, const CycloRational& omega, int gamma);
LaurentPoly C_constant(const Ring* ring, const CycloRational& omega, int gamma, int nbar);

// The (d, p/gamma)-partition keeping the first p/gamma partitions of every necklace.
MultiPartition bar_shape(const MultiPartition& lambda, int p, int gamma);

struct LacedTableau {
  StandardTableau tableau;
  std::vector<int> rho;  // rho[m-1] for m = 1..n/gamma
  std::vector<int> d;
  StandardTableau bar;
};

// Tableaux L of shape lambda with sigma^-kappa L = w_1 L, each with its quotient data. ell_bar
// are the block ends divided by gamma (used for the d coordinates); empty means one block.
std::vector<LacedTableau> kappa_laced_tableaux(const MultiPartition& lambda, int p, int kappa, std::vector<int> ell_bar = {});

// w_j L for w_j the increasing product of s_i over i >= j with gamma not dividing i - 1.
std::vector<Box> apply_w(const std::vector<Box>& cells, int j, int gamma);

// Twisted bitrace of an R-word (exponent sum divisible by p) from the vanishing cases and the
// reduction to the quotient algebra H(r/gamma, n/gamma).
RationalFn bitrace_closed(const HeckeParams& params, const MultiPartition& lambda, const StandardElementSpec& r_word, int alpha);

// Character of V^(lambda, j) on an S-word (spec.alpha is ignored).
RationalFn chi_irreducible(const HeckeParams& params, const MultiPartition& lambda, int j, const GPElementSpec& spec);

// Least shape of each sigma-orbit, in multipartitions_of order.
std::vector<MultiPartition> orbit_representatives(int r, int p, int n);

// Class data with color sum divisible by p, as S-words; tilde variants when ell_1 >= 2.
std::vector<ColumnLabel> hrpn_columns(int r, int p, int n);

CharacterTable character_table_hrpn(int r, int p, int n, int jobs = 1);

}  // namespace cyclo_hecke
