#pragma once

#include <compare>
#include <string>
#include <vector>

namespace cyclo_hecke {

// Weakly decreasing positive parts; empty for the empty partition.
using Partition = std::vector<int>;

bool is_partition(const Partition& p);
int partition_size(const Partition& p);
// All partitions of n in reverse lexicographic order: (n), (n-1,1), ...
std::vector<Partition> partitions_of(int n);

struct Box {
  int comp = 0;  // 0-based component of the multipartition
  int row = 1;
  int col = 1;
  auto operator<=>(const Box&) const = default;
};

// An r-tuple of partitions, optionally skew (outer / inner componentwise).
class MultiPartition {
 public:
  MultiPartition() = default;
  explicit MultiPartition(std::vector<Partition> outer);
  MultiPartition(std::vector<Partition> outer, std::vector<Partition> inner);

  int r() const { return static_cast<int>(outer_.size()); }
  const std::vector<Partition>& outer() const { return outer_; }
  const std::vector<Partition>& inner() const { return inner_; }
  bool is_skew() const;
  int size() const;
  bool contains(const Box& b) const;
  // Boxes ordered by component, row, column.
  std::vector<Box> boxes() const;
  // The skew shape this / smaller (smaller must be a straight shape contained in this).
  MultiPartition skew_by(const MultiPartition& smaller) const;

  auto operator<=>(const MultiPartition&) const = default;

 private:
  std::vector<Partition> outer_;
  std::vector<Partition> inner_;  // same length as outer_, all empty for straight shapes
};

// Shape grammar: components split by `|`, parts by `,`, empty component `-`, skew `outer/inner`.
MultiPartition parse_shape(const std::string& text);
std::string to_string(const MultiPartition& shape);

// All r-partitions of n: size distributions with the first component largest first, then each
// component's partitions in reverse lexicographic order.
std::vector<MultiPartition> multipartitions_of(int r, int n);

// Skew shapes with r components and at most max_boxes boxes in total, where each component has
// a box in every row and every column of its bounding box, which starts at row 1, column 1.
std::vector<MultiPartition> skew_shapes(int r, int max_boxes);

struct StandardTableau {
  MultiPartition shape;
  std::vector<Box> cells;  // cells[e-1] holds entry e

  const Box& at(int entry) const { return cells[entry - 1]; }
  int size() const { return static_cast<int>(cells.size()); }
  auto operator<=>(const StandardTableau&) const = default;
};

bool is_standard(const MultiPartition& shape, const std::vector<Box>& cells);
// All standard tableaux, ordered lexicographically on the box sequence.
std::vector<StandardTableau> enumerate_tableaux(const MultiPartition& shape);
// Number of standard tableaux by recursive removal of maximal boxes.
long long count_tableaux(const MultiPartition& shape);

struct StripComponent {
  std::vector<Box> boxes;
  int rows = 0;
  int cols = 0;
};

struct StripAnalysis {
  bool is_broken_border_strip = false;
  std::vector<StripComponent> components;
  std::vector<Box> sharp;  // no box above, none to the left
  std::vector<Box> dull;   // box above and to the left, none to the north-west
  int cc = 0;
};

StripAnalysis strip_analysis(const MultiPartition& shape);

// Chains of straight shapes from the empty shape to lambda with the given step sizes.
std::vector<std::vector<MultiPartition>> shape_chains(const MultiPartition& lambda, const std::vector<int>& block_sizes);
// Straight shapes mu contained in lambda with |mu| = size.
std::vector<MultiPartition> subshapes(const MultiPartition& lambda, int size);

// Component index k*p + l moves to k*p + ((l + power) mod p).
int sigma_component(int comp, int p, int power);
MultiPartition sigma_shift(const MultiPartition& shape, int p, int power);
StandardTableau sigma_shift(const StandardTableau& t, int p, int power);

struct Stabilizer {
  int f = 1;       // least f >= 1 with sigma^f fixing the shape
  int k_size = 1;  // p / f
};
Stabilizer stabilizer(const MultiPartition& shape, int p);

}  // namespace cyclo_hecke
