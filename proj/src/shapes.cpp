#include "cyclo_hecke/shapes.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace cyclo_hecke {

bool is_partition(const Partition& p) {
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i] < 1) return false;
    if (i > 0 && p[i] > p[i - 1]) return false;
  }
  return true;
}

int partition_size(const Partition& p) { return std::accumulate(p.begin(), p.end(), 0); }

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  Partition cur;
  std::function<void(int, int)> rec = [&](int left, int max_part) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int part = std::min(left, max_part); part >= 1; --part) {
      cur.push_back(part);
      rec(left - part, part);
      cur.pop_back();
    }
  };
  if (n < 0) return out;
  rec(n, n);
  return out;
}

namespace {

int row_len(const Partition& p, int row) { return row >= 1 && row <= static_cast<int>(p.size()) ? p[row - 1] : 0; }

}  // namespace

MultiPartition::MultiPartition(std::vector<Partition> outer) : MultiPartition(std::move(outer), {}) {}

MultiPartition::MultiPartition(std::vector<Partition> outer, std::vector<Partition> inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
  if (inner_.empty()) inner_.resize(outer_.size());
  if (inner_.size() != outer_.size()) throw std::invalid_argument("inner and outer shapes need the same number of components");
  for (size_t k = 0; k < outer_.size(); ++k) {
    if (!is_partition(outer_[k]) || !is_partition(inner_[k])) throw std::invalid_argument("component is not a partition");
    if (inner_[k].size() > outer_[k].size()) throw std::invalid_argument("inner shape not contained in outer shape");
    for (size_t i = 0; i < inner_[k].size(); ++i)
      if (inner_[k][i] > outer_[k][i]) throw std::invalid_argument("inner shape not contained in outer shape");
  }
}

bool MultiPartition::is_skew() const {
  return std::any_of(inner_.begin(), inner_.end(), [](const Partition& p) { return !p.empty(); });
}

int MultiPartition::size() const {
  int n = 0;
  for (size_t k = 0; k < outer_.size(); ++k) n += partition_size(outer_[k]) - partition_size(inner_[k]);
  return n;
}

bool MultiPartition::contains(const Box& b) const {
  if (b.comp < 0 || b.comp >= r() || b.row < 1 || b.col < 1) return false;
  return b.col <= row_len(outer_[b.comp], b.row) && b.col > row_len(inner_[b.comp], b.row);
}

std::vector<Box> MultiPartition::boxes() const {
  std::vector<Box> out;
  for (int k = 0; k < r(); ++k)
    for (int i = 1; i <= static_cast<int>(outer_[k].size()); ++i)
      for (int j = row_len(inner_[k], i) + 1; j <= outer_[k][i - 1]; ++j) out.push_back({k, i, j});
  return out;
}

MultiPartition MultiPartition::skew_by(const MultiPartition& smaller) const {
  if (is_skew() || smaller.is_skew() || smaller.r() != r()) throw std::invalid_argument("skew_by needs straight shapes of equal r");
  return MultiPartition(outer_, smaller.outer_);
}

MultiPartition parse_shape(const std::string& text) {
  auto parse_tuple = [](const std::string& s) {
    std::vector<Partition> comps;
    std::string comp;
    size_t start = 0;
    while (true) {
      size_t bar = s.find('|', start);
      comp = s.substr(start, bar == std::string::npos ? std::string::npos : bar - start);
      Partition p;
      if (comp != "-" && !comp.empty()) {
        std::stringstream cs(comp);
        std::string part;
        while (std::getline(cs, part, ',')) {
          size_t used = 0;
          int v = 0;
          try {
            v = std::stoi(part, &used);
          } catch (const std::exception&) {
            throw std::invalid_argument("bad part '" + part + "' in shape");
          }
          if (used != part.size()) throw std::invalid_argument("bad part '" + part + "' in shape");
          p.push_back(v);
        }
      }
      if (!is_partition(p)) throw std::invalid_argument("component '" + comp + "' is not a partition");
      comps.push_back(p);
      if (bar == std::string::npos) break;
      start = bar + 1;
    }
    return comps;
  };
  size_t slash = text.find('/');
  if (slash == std::string::npos) return MultiPartition(parse_tuple(text));
  auto outer = parse_tuple(text.substr(0, slash));
  auto inner = parse_tuple(text.substr(slash + 1));
  if (inner.size() != outer.size()) throw std::invalid_argument("skew shape needs matching component counts");
  return MultiPartition(outer, inner);
}

std::string to_string(const MultiPartition& shape) {
  auto tuple = [](const std::vector<Partition>& comps) {
    std::string s;
    for (size_t k = 0; k < comps.size(); ++k) {
      if (k > 0) s += "|";
      if (comps[k].empty()) {
        s += "-";
        continue;
      }
      for (size_t i = 0; i < comps[k].size(); ++i) s += (i ? "," : "") + std::to_string(comps[k][i]);
    }
    return s;
  };
  std::string s = tuple(shape.outer());
  if (shape.is_skew()) s += "/" + tuple(shape.inner());
  return s;
}

std::vector<MultiPartition> multipartitions_of(int r, int n) {
  std::vector<MultiPartition> out;
  std::vector<int> sizes(r, 0);
  std::function<void(int, int)> distribute = [&](int k, int left) {
    if (k == r - 1) {
      sizes[k] = left;
      std::vector<std::vector<Partition>> choices;
      for (int s : sizes) choices.push_back(partitions_of(s));
      std::vector<Partition> cur(r);
      std::function<void(int)> pick = [&](int c) {
        if (c == r) {
          out.emplace_back(cur);
          return;
        }
        for (const auto& p : choices[c]) {
          cur[c] = p;
          pick(c + 1);
        }
      };
      pick(0);
      return;
    }
    for (int s = left; s >= 0; --s) {
      sizes[k] = s;
      distribute(k + 1, left - s);
    }
  };
  if (r >= 1 && n >= 0) distribute(0, n);
  return out;
}

namespace {

// Single-component skew shapes with exactly `size` boxes, rows given as column intervals [a, b].
std::vector<std::pair<Partition, Partition>> compact_skew(int size) {
  std::vector<std::pair<Partition, Partition>> out;
  if (size == 0) {
    out.push_back({{}, {}});
    return out;
  }
  Partition outer, inner;
  std::function<void(int, int, int)> rec = [&](int a, int b, int left) {
    if (left == 0) {
      if (a == 1) {
        Partition in = inner;
        while (!in.empty() && in.back() == 0) in.pop_back();
        out.push_back({outer, in});
      }
      return;
    }
    for (int nb = std::min(b, a - 1 + left); nb >= std::max(1, a - 1); --nb) {
      for (int na = std::min(a, nb); na >= 1; --na) {
        int len = nb - na + 1;
        if (len > left) continue;
        outer.push_back(nb);
        inner.push_back(na - 1);
        rec(na, nb, left - len);
        outer.pop_back();
        inner.pop_back();
      }
    }
  };
  for (int b = size; b >= 1; --b)
    for (int a = b; a >= 1; --a) {
      int len = b - a + 1;
      if (len > size) continue;
      outer.push_back(b);
      inner.push_back(a - 1);
      rec(a, b, size - len);
      outer.pop_back();
      inner.pop_back();
    }
  return out;
}

}  // namespace

std::vector<MultiPartition> skew_shapes(int r, int max_boxes) {
  std::vector<std::vector<std::pair<Partition, Partition>>> by_size;
  for (int s = 0; s <= max_boxes; ++s) by_size.push_back(compact_skew(s));
  std::vector<MultiPartition> out;
  std::vector<Partition> outer(r), inner(r);
  std::function<void(int, int)> rec = [&](int k, int left) {
    if (k == r) {
      out.emplace_back(outer, inner);
      return;
    }
    for (int s = 0; s <= left; ++s)
      for (const auto& [o, i] : by_size[s]) {
        outer[k] = o;
        inner[k] = i;
        rec(k + 1, left - s);
      }
  };
  rec(0, max_boxes);
  return out;
}

bool is_standard(const MultiPartition& shape, const std::vector<Box>& cells) {
  auto boxes = shape.boxes();
  if (boxes.size() != cells.size()) return false;
  std::map<Box, int> entry;
  for (size_t e = 0; e < cells.size(); ++e) {
    if (!shape.contains(cells[e]) || !entry.emplace(cells[e], static_cast<int>(e)).second) return false;
  }
  for (const auto& [b, e] : entry) {
    Box left{b.comp, b.row, b.col - 1}, up{b.comp, b.row - 1, b.col};
    if (shape.contains(left) && entry[left] > e) return false;
    if (shape.contains(up) && entry[up] > e) return false;
  }
  return true;
}

std::vector<StandardTableau> enumerate_tableaux(const MultiPartition& shape) {
  std::vector<StandardTableau> out;
  const std::vector<Box> boxes = shape.boxes();
  const int n = static_cast<int>(boxes.size());
  std::map<Box, int> index;
  for (int i = 0; i < n; ++i) index[boxes[i]] = i;
  // predecessors that must be filled first
  std::vector<std::vector<int>> needs(n);
  for (int i = 0; i < n; ++i) {
    const Box& b = boxes[i];
    for (Box nb : {Box{b.comp, b.row, b.col - 1}, Box{b.comp, b.row - 1, b.col}})
      if (shape.contains(nb)) needs[i].push_back(index[nb]);
  }
  std::vector<bool> filled(n, false);
  std::vector<Box> seq;
  seq.reserve(n);
  std::function<void()> rec = [&]() {
    if (static_cast<int>(seq.size()) == n) {
      out.push_back({shape, seq});
      return;
    }
    for (int i = 0; i < n; ++i) {
      if (filled[i]) continue;
      bool ok = std::all_of(needs[i].begin(), needs[i].end(), [&](int j) { return filled[j]; });
      if (!ok) continue;
      filled[i] = true;
      seq.push_back(boxes[i]);
      rec();
      seq.pop_back();
      filled[i] = false;
    }
  };
  rec();
  return out;
}

long long count_tableaux(const MultiPartition& shape) {
  std::map<std::vector<Partition>, long long> memo;
  const auto& inner = shape.inner();
  std::function<long long(std::vector<Partition>&)> rec = [&](std::vector<Partition>& outer) -> long long {
    auto it = memo.find(outer);
    if (it != memo.end()) return it->second;
    long long total = 0;
    bool any = false;
    for (size_t k = 0; k < outer.size(); ++k) {
      for (size_t i = 0; i < outer[k].size(); ++i) {
        int len = outer[k][i];
        int inner_len = i < inner[k].size() ? inner[k][i] : 0;
        int below = i + 1 < outer[k].size() ? outer[k][i + 1] : 0;
        if (len > inner_len && below < len) {
          any = true;
          --outer[k][i];
          total += rec(outer);
          ++outer[k][i];
        }
      }
    }
    if (!any) total = 1;
    memo[outer] = total;
    return total;
  };
  std::vector<Partition> outer = shape.outer();
  return rec(outer);
}

StripAnalysis strip_analysis(const MultiPartition& shape) {
  StripAnalysis sa;
  const auto boxes = shape.boxes();
  sa.is_broken_border_strip = true;
  for (const Box& b : boxes)
    if (shape.contains({b.comp, b.row + 1, b.col + 1})) sa.is_broken_border_strip = false;

  std::map<Box, int> index;
  for (size_t i = 0; i < boxes.size(); ++i) index[boxes[i]] = static_cast<int>(i);
  std::vector<int> parent(boxes.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (size_t i = 0; i < boxes.size(); ++i) {
    const Box& b = boxes[i];
    for (Box nb : {Box{b.comp, b.row, b.col + 1}, Box{b.comp, b.row + 1, b.col}})
      if (shape.contains(nb)) parent[find(static_cast<int>(i))] = find(index[nb]);
  }
  std::map<int, int> comp_of_root;
  for (size_t i = 0; i < boxes.size(); ++i) {
    int root = find(static_cast<int>(i));
    auto [it, inserted] = comp_of_root.try_emplace(root, static_cast<int>(sa.components.size()));
    if (inserted) sa.components.emplace_back();
    sa.components[it->second].boxes.push_back(boxes[i]);
  }
  for (auto& c : sa.components) {
    std::set<int> rows, cols;
    for (const Box& b : c.boxes) {
      rows.insert(b.row);
      cols.insert(b.col);
    }
    c.rows = static_cast<int>(rows.size());
    c.cols = static_cast<int>(cols.size());
  }
  for (const Box& b : boxes) {
    bool left = shape.contains({b.comp, b.row, b.col - 1});
    bool up = shape.contains({b.comp, b.row - 1, b.col});
    bool nw = shape.contains({b.comp, b.row - 1, b.col - 1});
    if (!left && !up) sa.sharp.push_back(b);
    if (left && up && !nw) sa.dull.push_back(b);
  }
  sa.cc = static_cast<int>(sa.components.size());
  return sa;
}

std::vector<MultiPartition> subshapes(const MultiPartition& lambda, int size) {
  std::vector<MultiPartition> out;
  if (lambda.is_skew()) throw std::invalid_argument("subshapes needs a straight shape");
  const auto& outer = lambda.outer();
  const int r = lambda.r();
  std::vector<Partition> cur(r);
  std::function<void(int, size_t, int, int)> rec = [&](int k, size_t row, int max_part, int left) {
    if (k == r) {
      if (left == 0) out.emplace_back(cur);
      return;
    }
    // finish this component, or extend it by another row
    rec(k + 1, 0, 1 << 30, left);
    if (row >= outer[k].size()) return;
    int cap = std::min({max_part, outer[k][row], left});
    for (int part = cap; part >= 1; --part) {
      cur[k].push_back(part);
      rec(k, row + 1, part, left - part);
      cur[k].pop_back();
    }
  };
  rec(0, 0, 1 << 30, size);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<MultiPartition>> shape_chains(const MultiPartition& lambda, const std::vector<int>& block_sizes) {
  int total = std::accumulate(block_sizes.begin(), block_sizes.end(), 0);
  if (total != lambda.size()) throw std::invalid_argument("block sizes must sum to the shape size");
  std::vector<std::vector<MultiPartition>> out;
  std::vector<MultiPartition> chain{lambda};
  std::function<void(const MultiPartition&, int, int)> rec = [&](const MultiPartition& top, int block, int remaining) {
    if (block < 0) {
      std::vector<MultiPartition> forward(chain.rbegin(), chain.rend());
      out.push_back(forward);
      return;
    }
    for (const auto& mu : subshapes(top, remaining - block_sizes[block])) {
      chain.push_back(mu);
      rec(mu, block - 1, remaining - block_sizes[block]);
      chain.pop_back();
    }
  };
  rec(lambda, static_cast<int>(block_sizes.size()) - 1, total);
  return out;
}

int sigma_component(int comp, int p, int power) {
  int k = comp / p, l = comp % p;
  return k * p + (((l + power) % p) + p) % p;
}

MultiPartition sigma_shift(const MultiPartition& shape, int p, int power) {
  if (p < 1 || shape.r() % p != 0) throw std::invalid_argument("sigma_shift needs p dividing r");
  std::vector<Partition> outer(shape.r()), inner(shape.r());
  for (int c = 0; c < shape.r(); ++c) {
    int to = sigma_component(c, p, power);
    outer[to] = shape.outer()[c];
    inner[to] = shape.inner()[c];
  }
  return MultiPartition(outer, inner);
}

StandardTableau sigma_shift(const StandardTableau& t, int p, int power) {
  StandardTableau out{sigma_shift(t.shape, p, power), t.cells};
  for (Box& b : out.cells) b.comp = sigma_component(b.comp, p, power);
  return out;
}

Stabilizer stabilizer(const MultiPartition& shape, int p) {
  for (int f = 1; f <= p; ++f)
    if (p % f == 0 && sigma_shift(shape, p, f) == shape) return {f, p / f};
  return {p, 1};
}

}  // namespace cyclo_hecke
