#pragma once

#include <string>
#include <vector>

#include "cyclo_hecke/table.hpp"

namespace cyclo_hecke {

// Monomial matrix: column i has the single entry zeta_r^exps[i] in row perm[i].
struct GroupElement {
  int r = 1;
  std::vector<int> perm;
  std::vector<int> exps;

  static GroupElement identity(int r, int n);
  int n() const { return static_cast<int>(perm.size()); }
  GroupElement operator*(const GroupElement& o) const;
  GroupElement inverse() const;
  auto operator<=>(const GroupElement&) const = default;
};

// s_0 = diag(zeta^p, 1, ...), s_1 = zeta E_12 + zeta^-1 E_21 and the transpositions s_j, j >= 2.
std::vector<GroupElement> reflection_generators(int r, int p, int n);
// Closure of the generators, sorted.
std::vector<GroupElement> generate_group(int r, int p, int n);

struct ConjugacyClass {
  GroupElement representative;  // least element of the class
  int size = 0;
};
std::vector<ConjugacyClass> conjugacy_classes(const std::vector<GroupElement>& group);

// Image of an algebra word at q = 1: T_1 -> diag(zeta, 1, ...), T_i -> (i-1 i); a_0 = T_1^p,
// a_1 = T_1^-1 T_2 T_1, a_i = T_i, and t_i, S_i expand as in the algebra.
GroupElement word_at_q1(const AlgebraWord& w, int r, int p, int n);

struct OrthogonalityReport {
  bool ok = true;
  std::string failure;  // first violated identity
  int group_order = 0;
  int classes = 0;
};

// For a table specialized to the group point: every class is hit by some column, columns in one
// class agree, and rows and columns satisfy the orthogonality relations with conj: zeta -> zeta^-1.
OrthogonalityReport check_orthogonality(const CharacterTable& specialized);

}  // namespace cyclo_hecke
