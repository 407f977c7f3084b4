#pragma once

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cyclo_hecke/params.hpp"
#include "cyclo_hecke/rational_fn.hpp"

namespace cyclo_hecke {

class PoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Finite poset on labelled boxes, optionally with an adjoined minimum (the "hat") stored last.
class ShapePoset {
 public:
  // covers (i, j) mean boxes[i] < boxes[j]; the order is their transitive closure.
  ShapePoset(std::vector<Box> boxes, const std::vector<std::pair<int, int>>& covers, bool hat);
  // Boxes ordered so that smaller elements sit up and to the left.
  static ShapePoset of_shape(const MultiPartition& shape, bool hat);
  static ShapePoset chain(std::vector<Box> order, bool hat);

  int size() const { return static_cast<int>(leq_.size()); }
  int box_count() const { return static_cast<int>(boxes_.size()); }
  bool has_hat() const { return hat_; }
  int hat() const { return hat_ ? box_count() : -1; }
  const std::vector<Box>& boxes() const { return boxes_; }
  int index_of(const Box& b) const;

  bool leq(int a, int b) const { return leq_[a][b]; }
  bool less(int a, int b) const { return a != b && leq_[a][b]; }
  // Minimal elements among the boxes (the hat excluded).
  std::vector<int> minimal_boxes() const;
  // Least upper bound of two elements, or -1.
  int join(int a, int b) const;
  // Connected components of the comparability graph on the boxes.
  int connected_components() const;

 private:
  std::vector<Box> boxes_;
  bool hat_;
  std::vector<std::vector<char>> leq_;
};

class MobiusTable {
 public:
  explicit MobiusTable(int size) : size_(size), values_(size * size, 0) {}
  int size() const { return size_; }
  int operator()(int a, int b) const { return values_[a * size_ + b]; }
  int& at(int a, int b) { return values_[a * size_ + b]; }

 private:
  int size_;
  std::vector<int> values_;
};

MobiusTable mobius(const ShapePoset& poset);

// Values for the box variables x_b and for q.
struct BoxVariables {
  const Ring* ring = nullptr;
  LaurentPoly q;
  std::map<Box, LaurentPoly> x;

  // A fresh variable x1, x2, ... per box (in box order) and q, over the rationals.
  static BoxVariables generic(const MultiPartition& shape);
  // x_b = ct(b).
  static BoxVariables contents(const HeckeParams& params, const MultiPartition& shape);
};

// Product of wt(a, b)^mu(a, b) over a < b: wt = (1 - x_a / x_b) / (q - q^-1) between boxes and
// wt(hat, a) = x_a^-k. Throws PoleError when a vanishing weight has a negative exponent.
RationalFn delta_poset(const ShapePoset& poset, int k, const BoxVariables& vars);

// Diagonal, row and column adjacency product for the poset of a (skew) shape, without the hat.
RationalFn delta_poset_product(const MultiPartition& shape, const BoxVariables& vars);

// Every total order of the boxes refining the poset, as box sequences.
std::vector<std::vector<Box>> linear_extensions(const ShapePoset& poset);

// x_{first}^k times prod (q - q^-1) / (1 - x_prev / x_next) along the chain.
RationalFn chain_delta(const std::vector<Box>& chain, int k, const BoxVariables& vars);

// Sum of chain_delta over all linear extensions, accumulated over order ideals.
RationalFn linear_extension_sum(const MultiPartition& shape, int k, const BoxVariables& vars);
// The same sums for k = 0..max_k, sharing the k-independent part of every chain.
std::vector<RationalFn> linear_extension_sums(const MultiPartition& shape, int max_k, const BoxVariables& vars);

struct PosetCorners {
  std::vector<Box> sharp;  // left to right along the boundary
  std::vector<Box> dull;
  int cc = 0;
};

// Sharp corners are the minimal boxes; dull corners are joins of adjacent sharp corners. Throws
// std::logic_error if these disagree with the box geometry.
PosetCorners poset_corners(const MultiPartition& shape);

// Right side of the theorem: (q - q^-1)^(cc-1) Delta(P) for k = 0, and for k >= 1
// Delta(P) (-q + q^-1)^(cc-1) prod x_s prod x_d^-1 sum_t (-1)^t e_t(x_DC) h_{k-t-cc}(x_SC).
RationalFn poset_theorem_rhs(const MultiPartition& shape, int k, const BoxVariables& vars);

bool verify_poset_theorem(const MultiPartition& shape, int k, const BoxVariables& vars);
// The values of k in 0..max_k for which the theorem fails.
std::vector<int> verify_poset_theorem_upto(const MultiPartition& shape, int max_k, const BoxVariables& vars);

}  // namespace cyclo_hecke
