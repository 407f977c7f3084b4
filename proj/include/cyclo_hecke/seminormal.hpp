#pragma once

#include <map>
#include <string>
#include <vector>

#include "cyclo_hecke/params.hpp"

namespace cyclo_hecke {

class Matrix {
 public:
  Matrix() = default;
  Matrix(int dim, const Ring* ring);
  static Matrix identity(int dim, const Ring* ring);
  static Matrix diagonal(const std::vector<RationalFn>& entries, const Ring* ring);

  int dim() const { return dim_; }
  const Ring* ring() const { return ring_; }
  RationalFn& operator()(int row, int col) { return cells_[row * dim_ + col]; }
  const RationalFn& operator()(int row, int col) const { return cells_[row * dim_ + col]; }

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Matrix& o) const;
  Matrix scaled(const RationalFn& c) const;
  std::vector<RationalFn> apply(const std::vector<RationalFn>& v) const;
  bool is_zero() const;
  bool is_diagonal() const;
  bool operator==(const Matrix& o) const;

 private:
  int dim_ = 0;
  const Ring* ring_ = nullptr;
  std::vector<RationalFn> cells_;
};

struct Letter {
  char kind = 'T';  // 'T', 't', 'a', 'S'
  int index = 1;
  int exp = 1;
  bool operator==(const Letter&) const = default;
};

// Letters multiply left to right; the word acts on column vectors, rightmost letter first.
struct AlgebraWord {
  std::vector<Letter> letters;

  AlgebraWord& append(char kind, int index, int exp = 1);
  AlgebraWord& append(const AlgebraWord& w);
  bool operator==(const AlgebraWord&) const = default;
};

// Whitespace-separated tokens such as `T3`, `t2^-1`, `a0`, `S4^2`.
AlgebraWord parse_word(const std::string& text);
std::string to_string(const AlgebraWord& w);

// Young's seminormal form of V^lambda. Column L of a generator matrix holds the image of v_L.
class SeminormalRep {
 public:
  SeminormalRep(MultiPartition shape, HeckeParams params);

  const MultiPartition& shape() const { return shape_; }
  const HeckeParams& params() const { return params_; }
  const Ring* ring() const { return params_.ring(); }
  int n() const { return n_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<StandardTableau>& basis() const { return basis_; }
  // -1 when the filling is not a standard tableau of this shape.
  int index_of(const std::vector<Box>& cells) const;
  const LaurentPoly& content(int tableau, int entry) const { return contents_[tableau][entry - 1]; }

  const Matrix& T(int i) const { return T_.at(i); }
  Matrix T_inverse(int i) const;
  // a_0 = T_1^p, a_1 = T_1^-1 T_2 T_1 and a_i = T_i, from the explicit action on tableaux.
  const Matrix& a(int i) const { return a_.at(i); }
  Matrix a_inverse(int i) const;
  // T_i ... T_2 T_1 T_2 ... T_i, checked against the diagonal of contents ct(L(i)).
  Matrix hoefsmit_matrix(int i) const;
  // S_1 = a_0, S_2 = a_1 a_2, S_i = a_i ... a_3 a_1 a_2 a_3 ... a_i, checked against its diagonal.
  Matrix s_matrix(int i) const;

  // Overrides a generator image (used to build negative controls).
  void replace_T(int i, Matrix m);
  void replace_a(int i, Matrix m);

  // Image of w applied to the basis vector v_col.
  std::vector<RationalFn> apply_word(const AlgebraWord& w, int col) const;
  std::vector<RationalFn> apply_word(const AlgebraWord& w, std::vector<RationalFn> v) const;

 private:
  struct SparseOp {
    std::vector<std::vector<std::pair<int, RationalFn>>> cols;
  };
  static SparseOp sparse(const Matrix& m);
  void apply_primitive(char kind, int index, bool inverse, std::vector<RationalFn>& v) const;
  void rebuild_sparse();

  MultiPartition shape_;
  HeckeParams params_;
  int n_;
  std::vector<StandardTableau> basis_;
  std::map<std::vector<Box>, int> index_;
  std::vector<std::vector<LaurentPoly>> contents_;
  std::vector<Matrix> T_;  // index 1..n
  std::vector<Matrix> a_;  // index 0..n
  std::vector<SparseOp> T_sparse_, T_inv_sparse_, a_sparse_, a_inv_sparse_;
};

// Rejects letters outside the rep's generator range.
Matrix word_matrix(const SeminormalRep& rep, const AlgebraWord& w);
RationalFn trace_of(const SeminormalRep& rep, const AlgebraWord& w);
// Sum over L of the coefficient of v_{sigma^{-alpha f} L} in w v_L.
RationalFn twisted_bitrace(const SeminormalRep& rep, const AlgebraWord& w, int alpha);
// Permutation matrix of sigma^power on the basis, defined when sigma^power fixes the shape.
Matrix sigma_matrix(const SeminormalRep& rep, int power);

struct RelationReport {
  bool ok = true;
  std::string failed;  // first violated relation
};

// Relations (1)-(5) on the T_i; for p > 1 also the a-generator definitions and sigma-equivariance.
RelationReport verify_relations(const SeminormalRep& rep);

}  // namespace cyclo_hecke
