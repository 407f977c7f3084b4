#include "cyclo_hecke/mn.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <stdexcept>

#include "cyclo_hecke/parallel.hpp"

namespace cyclo_hecke {

namespace {

std::atomic<bool> delta_sign_bug{false};

// (q - q^-1) / (1 - prev / next)
RationalFn adjacent_factor(const HeckeParams& params, const LaurentPoly& prev, const LaurentPoly& next) {
  return RationalFn::quotient(params.q_diff() * next, next - prev);
}

LaurentPoly monomial_pow(const LaurentPoly& m, int k) { return k >= 0 ? m.pow(k) : m.monomial_inverse().pow(-k); }

// Coefficients c_j with x^k = sum_j c_j x^j modulo prod_c (x - u_c), by Lagrange interpolation.
std::vector<RationalFn> reduce_power(const HeckeParams& params, int k) {
  const Ring* ring = params.ring();
  const int r = params.r();
  std::vector<RationalFn> coeffs(r, RationalFn(LaurentPoly(ring)));
  for (int c = 0; c < r; ++c) {
    // prod_{c' != c} (x - u_c') as coefficients in x
    std::vector<LaurentPoly> poly{LaurentPoly::constant(ring, 1)};
    RationalFn scale(monomial_pow(params.u(c), k));
    for (int o = 0; o < r; ++o) {
      if (o == c) continue;
      std::vector<LaurentPoly> next(poly.size() + 1, LaurentPoly(ring));
      for (size_t j = 0; j < poly.size(); ++j) {
        next[j + 1] += poly[j];
        next[j] -= poly[j] * params.u(o);
      }
      poly = std::move(next);
      scale *= RationalFn::quotient(LaurentPoly::constant(ring, 1), params.u(c) - params.u(o));
    }
    for (int j = 0; j < r; ++j) coeffs[j] += scale * RationalFn(poly[j]);
  }
  return coeffs;
}

}  // namespace

namespace testing {
void inject_delta_sign_bug(bool on) { delta_sign_bug = on; }
}  // namespace testing

RationalFn delta_tableau(const HeckeParams& params, const StandardTableau& L, int k) {
  if (L.size() == 0) throw std::invalid_argument("delta of an empty tableau");
  LaurentPoly num = monomial_pow(params.content(L.at(1)), k);
  RationalFn::FactorMap den;
  for (int e = 2; e <= L.size(); ++e) {
    RationalFn f = adjacent_factor(params, params.content(L.at(e - 1)), params.content(L.at(e)));
    num = num * f.num();
    for (const auto& [b, m] : f.factors()) den[b] += m;
  }
  return RationalFn::from_parts(std::move(num), std::move(den));
}

RationalFn delta_shape_bruteforce(const HeckeParams& params, const MultiPartition& shape, int k) {
  if (shape.size() == 0) throw std::invalid_argument("delta of an empty shape");
  RationalSum total(params.ring());
  for (const auto& L : enumerate_tableaux(shape)) total.add(delta_tableau(params, L, k));
  return total.value();
}

RationalFn delta_shape_closed(const HeckeParams& params, const MultiPartition& shape, int k) {
  const Ring* ring = params.ring();
  if (shape.size() == 0) throw std::invalid_argument("delta of an empty shape");
  if (k < 0 || k > params.r() - 1) throw std::invalid_argument("closed form needs 0 <= k <= r-1");
  StripAnalysis sa = strip_analysis(shape);
  if (!sa.is_broken_border_strip) return RationalFn(LaurentPoly(ring));
  const LaurentPoly& q = params.q();
  const LaurentPoly minus_qinv = -q.monomial_inverse();
  LaurentPoly strips = LaurentPoly::constant(ring, 1);
  for (const auto& bs : sa.components) strips *= q.pow(bs.cols - 1) * minus_qinv.pow(bs.rows - 1);
  if (k == 0) {
    LaurentPoly v = params.q_diff().pow(sa.cc - 1) * strips;
    return RationalFn(delta_sign_bug ? -v : v);
  }
  std::vector<LaurentPoly> sharp, dull;
  LaurentPoly corners = LaurentPoly::constant(ring, 1);
  for (const Box& b : sa.sharp) {
    sharp.push_back(params.content(b));
    corners *= sharp.back();
  }
  for (const Box& b : sa.dull) {
    dull.push_back(params.content(b));
    corners *= dull.back().monomial_inverse();
  }
  LaurentPoly sum(ring);
  for (int t = 0; t <= static_cast<int>(dull.size()); ++t) {
    LaurentPoly term = elementary(dull, t, ring) * complete_homogeneous(sharp, k - t - sa.cc, ring);
    if (t % 2) sum -= term;
    else sum += term;
  }
  return RationalFn((-params.q_diff()).pow(sa.cc - 1) * corners * sum * strips);
}

RationalFn mn_character(const HeckeParams& params, const MultiPartition& lambda, const StandardElementSpec& spec) {
  const Ring* ring = params.ring();
  validate(spec, lambda.size());
  if (lambda.is_skew()) throw std::invalid_argument("characters need a straight shape");
  for (size_t b = 1; b < spec.exps.size(); ++b)
    if (spec.exps[b] < 0 || spec.exps[b] > params.r() - 1) throw std::invalid_argument("block exponents after the first must lie in [0, r-1]");
  const int k1 = spec.exps[0];
  const bool reduce = k1 < 0 || k1 > params.r() - 1;
  std::vector<RationalFn> first_coeffs;
  if (reduce) first_coeffs = reduce_power(params, k1);

  std::map<std::pair<MultiPartition, int>, RationalFn> memo;
  auto delta = [&](const MultiPartition& s, int k) -> const RationalFn& {
    auto key = std::make_pair(s, k);
    auto it = memo.find(key);
    if (it == memo.end()) it = memo.emplace(key, delta_shape_closed(params, s, k)).first;
    return it->second;
  };

  RationalFn total{LaurentPoly(ring)};
  for (const auto& chain : shape_chains(lambda, spec.block_sizes())) {
    RationalFn term{LaurentPoly(ring)};
    if (reduce) {
      for (int j = 0; j < params.r(); ++j)
        if (!first_coeffs[j].is_zero()) term += first_coeffs[j] * delta(chain[1], j);
    } else {
      term = delta(chain[1], k1);
    }
    for (size_t b = 1; b < spec.exps.size() && !term.is_zero(); ++b) term *= delta(chain[b + 1].skew_by(chain[b]), spec.exps[b]);
    total += term;
  }
  return total;
}

StandardElementSpec class_to_standard_element(const ClassLabel& c) {
  StandardElementSpec spec;
  int acc = 0;
  for (int color = 0; color < c.r(); ++color) {
    Partition parts = c.outer()[color];
    std::sort(parts.rbegin(), parts.rend());
    for (int s : parts) {
      acc += s;
      spec.ell.push_back(acc);
      spec.exps.push_back(color);
    }
  }
  return spec;
}

AlgebraWord column_word(const ColumnLabel& col) {
  if (!col.tilde) return element_word(col.spec);
  return gp_element_word(GPElementSpec{*col.tilde, col.spec, 0});
}

CharacterTable character_table_hrn(int r, int n, int jobs) {
  if (r < 1 || n < 1) throw std::invalid_argument("need r >= 1 and n >= 1");
  HeckeParams params = HeckeParams::hrn(r);
  CharacterTable table;
  table.r = r;
  table.p = 1;
  table.n = n;
  table.ring = params.ring();
  auto shapes = multipartitions_of(r, n);
  for (const auto& lam : shapes) table.rows.push_back(RowLabel{lam, std::nullopt, 1, 1});
  for (const auto& c : shapes) table.cols.push_back(ColumnLabel{class_to_standard_element(c), std::nullopt});
  const int ncols = static_cast<int>(table.cols.size());
  table.entries.assign(table.rows.size(), std::vector<RationalFn>(ncols));
  parallel_for(static_cast<int>(table.rows.size()) * ncols, jobs, [&](int cell) {
    const int row = cell / ncols, col = cell % ncols;
    table.entries[row][col] = mn_character(params, table.rows[row].shape, table.cols[col].spec);
  });
  return table;
}

}  // namespace cyclo_hecke
