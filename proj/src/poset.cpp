#include "cyclo_hecke/poset.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "cyclo_hecke/serialize.hpp"

namespace cyclo_hecke {

namespace {

std::string box_name(const Box& b) {
  return "(" + std::to_string(b.comp) + "," + std::to_string(b.row) + "," + std::to_string(b.col) + ")";
}

LaurentPoly q_diff(const BoxVariables& vars) { return vars.q - vars.q.monomial_inverse(); }

const LaurentPoly& var_of(const BoxVariables& vars, const Box& b) {
  auto it = vars.x.find(b);
  if (it == vars.x.end()) throw std::invalid_argument("no variable for box " + box_name(b));
  return it->second;
}

// 1 - x_a / x_b
LaurentPoly one_minus_ratio(const BoxVariables& vars, const Box& a, const Box& b) {
  return LaurentPoly::constant(vars.ring, 1) - var_of(vars, a) * var_of(vars, b).monomial_inverse();
}

// (q - q^-1) / (1 - x_a / x_b)
RationalFn inverse_weight(const BoxVariables& vars, const Box& a, const Box& b) {
  LaurentPoly d = one_minus_ratio(vars, a, b);
  if (d.is_zero()) throw PoleError("weight of " + box_name(a) + " < " + box_name(b) + " vanishes");
  return RationalFn::quotient(q_diff(vars), d);
}

RationalFn one(const BoxVariables& vars) { return RationalFn(LaurentPoly::constant(vars.ring, 1)); }

}  // namespace

ShapePoset::ShapePoset(std::vector<Box> boxes, const std::vector<std::pair<int, int>>& covers, bool hat)
    : boxes_(std::move(boxes)), hat_(hat) {
  const int n = box_count();
  const int size = n + (hat ? 1 : 0);
  leq_.assign(size, std::vector<char>(size, 0));
  for (int i = 0; i < size; ++i) leq_[i][i] = 1;
  for (const auto& [a, b] : covers) {
    if (a < 0 || b < 0 || a >= n || b >= n) throw std::out_of_range("cover relation outside the boxes");
    leq_[a][b] = 1;
  }
  if (hat)
    for (int i = 0; i < n; ++i) leq_[n][i] = 1;
  for (int m = 0; m < size; ++m)
    for (int i = 0; i < size; ++i)
      if (leq_[i][m])
        for (int j = 0; j < size; ++j)
          if (leq_[m][j]) leq_[i][j] = 1;
  for (int i = 0; i < size; ++i)
    for (int j = i + 1; j < size; ++j)
      if (leq_[i][j] && leq_[j][i]) throw std::invalid_argument("cover relations contain a cycle");
}

ShapePoset ShapePoset::of_shape(const MultiPartition& shape, bool hat) {
  std::vector<Box> boxes = shape.boxes();
  std::vector<std::pair<int, int>> covers;
  auto find = [&](const Box& b) {
    auto it = std::lower_bound(boxes.begin(), boxes.end(), b);
    return it != boxes.end() && *it == b ? static_cast<int>(it - boxes.begin()) : -1;
  };
  std::sort(boxes.begin(), boxes.end());
  for (int i = 0; i < static_cast<int>(boxes.size()); ++i) {
    const Box& b = boxes[i];
    for (const Box& next : {Box{b.comp, b.row, b.col + 1}, Box{b.comp, b.row + 1, b.col}}) {
      int j = find(next);
      if (j >= 0) covers.emplace_back(i, j);
    }
  }
  return ShapePoset(std::move(boxes), covers, hat);
}

ShapePoset ShapePoset::chain(std::vector<Box> order, bool hat) {
  std::vector<std::pair<int, int>> covers;
  for (int i = 1; i < static_cast<int>(order.size()); ++i) covers.emplace_back(i - 1, i);
  return ShapePoset(std::move(order), covers, hat);
}

int ShapePoset::index_of(const Box& b) const {
  for (int i = 0; i < box_count(); ++i)
    if (boxes_[i] == b) return i;
  return -1;
}

std::vector<int> ShapePoset::minimal_boxes() const {
  std::vector<int> out;
  for (int i = 0; i < box_count(); ++i) {
    bool minimal = true;
    for (int j = 0; j < box_count() && minimal; ++j)
      if (less(j, i)) minimal = false;
    if (minimal) out.push_back(i);
  }
  return out;
}

int ShapePoset::join(int a, int b) const {
  std::vector<int> upper;
  for (int c = 0; c < size(); ++c)
    if (leq(a, c) && leq(b, c)) upper.push_back(c);
  for (int m : upper)
    if (std::all_of(upper.begin(), upper.end(), [&](int c) { return leq(m, c); })) return m;
  return -1;
}

int ShapePoset::connected_components() const {
  const int n = box_count();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](int i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (less(i, j)) parent[root(i)] = root(j);
  int count = 0;
  for (int i = 0; i < n; ++i)
    if (root(i) == i) ++count;
  return count;
}

MobiusTable mobius(const ShapePoset& poset) {
  const int size = poset.size();
  // increasing size of the down-set is a linear extension
  std::vector<int> order(size), below(size, 0);
  std::iota(order.begin(), order.end(), 0);
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j)
      if (poset.leq(j, i)) ++below[i];
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return below[a] < below[b]; });
  MobiusTable mu(size);
  for (int a = 0; a < size; ++a) {
    for (int b : order) {
      if (!poset.leq(a, b)) continue;
      if (a == b) {
        mu.at(a, b) = 1;
        continue;
      }
      int sum = 0;
      for (int x = 0; x < size; ++x)
        if (poset.leq(a, x) && poset.less(x, b)) sum += mu(a, x);
      mu.at(a, b) = -sum;
    }
  }
  return mu;
}

BoxVariables BoxVariables::generic(const MultiPartition& shape) {
  std::vector<Box> boxes = shape.boxes();
  std::sort(boxes.begin(), boxes.end());
  std::vector<std::string> names;
  for (size_t i = 0; i < boxes.size(); ++i) names.push_back("x" + std::to_string(i + 1));
  names.push_back("q");
  BoxVariables v;
  v.ring = Ring::get(1, names);
  v.q = LaurentPoly::variable(v.ring, "q");
  for (size_t i = 0; i < boxes.size(); ++i) v.x.emplace(boxes[i], LaurentPoly::variable(v.ring, names[i]));
  return v;
}

BoxVariables BoxVariables::contents(const HeckeParams& params, const MultiPartition& shape) {
  BoxVariables v;
  v.ring = params.ring();
  v.q = params.q();
  for (const Box& b : shape.boxes()) v.x.emplace(b, params.content(b));
  return v;
}

RationalFn delta_poset(const ShapePoset& poset, int k, const BoxVariables& vars) {
  MobiusTable mu = mobius(poset);
  const auto& boxes = poset.boxes();
  RationalFn out = one(vars);
  for (int a = 0; a < poset.size(); ++a) {
    for (int b = 0; b < poset.box_count(); ++b) {
      const int m = mu(a, b);
      if (a == b || m == 0) continue;
      if (a == poset.hat()) {
        const LaurentPoly& x = var_of(vars, boxes[b]);
        out *= RationalFn((-k * m >= 0 ? x : x.monomial_inverse()).pow(std::abs(k * m)));
        continue;
      }
      LaurentPoly d = one_minus_ratio(vars, boxes[a], boxes[b]);
      if (d.is_zero()) {
        if (m < 0) throw PoleError("weight of " + box_name(boxes[a]) + " < " + box_name(boxes[b]) + " vanishes");
        return RationalFn(LaurentPoly(vars.ring));
      }
      if (m > 0)
        out *= RationalFn::quotient(d, q_diff(vars)).pow(m);
      else
        out *= RationalFn::quotient(q_diff(vars), d).pow(-m);
    }
  }
  return out;
}

RationalFn delta_poset_product(const MultiPartition& shape, const BoxVariables& vars) {
  RationalFn out = one(vars);
  for (const Box& a : shape.boxes()) {
    for (const Box& b : {Box{a.comp, a.row, a.col + 1}, Box{a.comp, a.row + 1, a.col}})
      if (shape.contains(b)) out *= inverse_weight(vars, a, b);
    Box diag{a.comp, a.row + 1, a.col + 1};
    if (shape.contains(diag)) out *= RationalFn::quotient(one_minus_ratio(vars, a, diag), q_diff(vars));
  }
  return out;
}

std::vector<std::vector<Box>> linear_extensions(const ShapePoset& poset) {
  const int n = poset.box_count();
  std::vector<std::vector<Box>> out;
  std::vector<int> seq;
  std::vector<char> used(n, 0);
  auto extend = [&](auto&& self) -> void {
    if (static_cast<int>(seq.size()) == n) {
      std::vector<Box> chain;
      for (int i : seq) chain.push_back(poset.boxes()[i]);
      out.push_back(std::move(chain));
      return;
    }
    for (int c = 0; c < n; ++c) {
      if (used[c]) continue;
      bool ready = true;
      for (int b = 0; b < n && ready; ++b)
        if (!used[b] && poset.less(b, c)) ready = false;
      if (!ready) continue;
      used[c] = 1;
      seq.push_back(c);
      self(self);
      seq.pop_back();
      used[c] = 0;
    }
  };
  extend(extend);
  return out;
}

RationalFn chain_delta(const std::vector<Box>& chain, int k, const BoxVariables& vars) {
  if (chain.empty()) return one(vars);
  const LaurentPoly& first = var_of(vars, chain.front());
  LaurentPoly num = (k >= 0 ? first : first.monomial_inverse()).pow(std::abs(k));
  RationalFn::FactorMap den;
  for (size_t i = 1; i < chain.size(); ++i) {
    RationalFn f = inverse_weight(vars, chain[i - 1], chain[i]);
    num = num * f.num();
    for (const auto& [b, m] : f.factors()) den[b] += m;
  }
  return RationalFn::from_parts(std::move(num), std::move(den));
}

std::vector<RationalFn> linear_extension_sums(const MultiPartition& shape, int max_k, const BoxVariables& vars) {
  ShapePoset poset = ShapePoset::of_shape(shape, false);
  const int n = poset.box_count();
  if (n == 0) throw std::invalid_argument("linear extension sum of an empty shape");
  if (n > 20) throw std::invalid_argument("too many boxes for the order-ideal sum");
  const auto& boxes = poset.boxes();
  std::vector<unsigned> below(n, 0);
  for (int c = 0; c < n; ++c)
    for (int b = 0; b < n; ++b)
      if (poset.less(b, c)) below[c] |= 1u << b;
  std::vector<std::vector<RationalFn>> factor(n, std::vector<RationalFn>(n));
  std::vector<std::vector<char>> have_factor(n, std::vector<char>(n, 0));
  // built on first use: pairs that never sit next to each other in a chain may have vanishing weight
  auto step = [&](int b, int c) -> const RationalFn& {
    if (!have_factor[b][c]) {
      factor[b][c] = inverse_weight(vars, boxes[b], boxes[c]);
      have_factor[b][c] = 1;
    }
    return factor[b][c];
  };

  // tail[ideal][last]: sum over the ways to finish a chain whose placed boxes form `ideal`, ending at `last`
  const unsigned full = (1u << n) - 1;
  std::vector<std::vector<RationalFn>> tail(full + 1, std::vector<RationalFn>(n));
  for (int b = 0; b < n; ++b) tail[full][b] = one(vars);
  for (unsigned ideal = full - 1; ideal >= 1; --ideal) {
    bool is_ideal = true;
    for (int b = 0; b < n && is_ideal; ++b)
      if ((ideal >> b & 1u) && (below[b] & ~ideal) != 0) is_ideal = false;
    if (!is_ideal) continue;
    for (int b = 0; b < n; ++b) {
      // b must be maximal in the ideal to have been placed last
      if (!(ideal >> b & 1u)) continue;
      bool maximal = true;
      for (int c = 0; c < n && maximal; ++c)
        if ((ideal >> c & 1u) && poset.less(b, c)) maximal = false;
      if (!maximal) continue;
      RationalSum sum(vars.ring);
      for (int c = 0; c < n; ++c)
        if (!(ideal >> c & 1u) && (below[c] & ~ideal) == 0) sum.add(step(b, c) * tail[ideal | (1u << c)][c]);
      tail[ideal][b] = sum.value();
    }
  }
  std::vector<RationalFn> out;
  for (int k = 0; k <= max_k; ++k) {
    RationalSum total(vars.ring);
    for (int c = 0; c < n; ++c) {
      if (below[c] != 0) continue;
      const LaurentPoly& x = var_of(vars, boxes[c]);
      total.add(RationalFn(x.pow(k)) * tail[1u << c][c]);
    }
    out.push_back(total.value());
  }
  return out;
}

RationalFn linear_extension_sum(const MultiPartition& shape, int k, const BoxVariables& vars) {
  if (k < 0) throw std::invalid_argument("linear extension sum needs k >= 0");
  return linear_extension_sums(shape, k, vars).back();
}

PosetCorners poset_corners(const MultiPartition& shape) {
  ShapePoset poset = ShapePoset::of_shape(shape, false);
  const auto& boxes = poset.boxes();
  PosetCorners out;
  std::vector<int> sharp = poset.minimal_boxes();
  // boundary order: component by component, then left to right
  std::sort(sharp.begin(), sharp.end(), [&](int a, int b) {
    if (boxes[a].comp != boxes[b].comp) return boxes[a].comp < boxes[b].comp;
    return boxes[a].col < boxes[b].col;
  });
  std::set<Box> dull_joins;
  for (size_t i = 1; i < sharp.size(); ++i) {
    int j = poset.join(sharp[i - 1], sharp[i]);
    if (j >= 0) dull_joins.insert(boxes[j]);
  }
  std::set<Box> dull_geometric;
  for (const Box& b : boxes) {
    if (shape.contains({b.comp, b.row, b.col - 1}) && shape.contains({b.comp, b.row - 1, b.col}) &&
        !shape.contains({b.comp, b.row - 1, b.col - 1}))
      dull_geometric.insert(b);
  }
  if (dull_joins != dull_geometric)
    throw std::logic_error("dull corners from joins differ from the box geometry for " + to_string(shape));
  for (int s : sharp) out.sharp.push_back(boxes[s]);
  out.dull.assign(dull_joins.begin(), dull_joins.end());
  out.cc = poset.connected_components();
  if (out.cc != static_cast<int>(out.sharp.size()) - static_cast<int>(out.dull.size()))
    throw std::logic_error("corner count does not match the components of " + to_string(shape));
  return out;
}

RationalFn poset_theorem_rhs(const MultiPartition& shape, int k, const BoxVariables& vars) {
  if (shape.size() == 0) throw std::invalid_argument("poset theorem needs a nonempty shape");
  if (k < 0) throw std::invalid_argument("poset theorem needs k >= 0");
  PosetCorners corners = poset_corners(shape);
  RationalFn delta = delta_poset(ShapePoset::of_shape(shape, false), k, vars);
  LaurentPoly scale = q_diff(vars).pow(corners.cc - 1);
  if (k == 0) return delta * RationalFn(scale);
  if ((corners.cc - 1) % 2 != 0) scale = -scale;
  std::vector<LaurentPoly> xs, xd;
  for (const Box& s : corners.sharp) {
    xs.push_back(var_of(vars, s));
    scale *= xs.back();
  }
  for (const Box& d : corners.dull) {
    xd.push_back(var_of(vars, d));
    scale *= xd.back().monomial_inverse();
  }
  LaurentPoly sum(vars.ring);
  for (int t = 0; t <= static_cast<int>(xd.size()); ++t) {
    LaurentPoly term = elementary(xd, t, vars.ring) * complete_homogeneous(xs, k - t - corners.cc, vars.ring);
    sum += t % 2 == 0 ? term : -term;
  }
  return delta * RationalFn(scale * sum);
}

bool verify_poset_theorem(const MultiPartition& shape, int k, const BoxVariables& vars) {
  return linear_extension_sum(shape, k, vars) == poset_theorem_rhs(shape, k, vars);
}

std::vector<int> verify_poset_theorem_upto(const MultiPartition& shape, int max_k, const BoxVariables& vars) {
  std::vector<RationalFn> sums = linear_extension_sums(shape, max_k, vars);
  std::vector<int> failed;
  for (int k = 0; k <= max_k; ++k)
    if (sums[k] != poset_theorem_rhs(shape, k, vars)) failed.push_back(k);
  return failed;
}

}  // namespace cyclo_hecke
