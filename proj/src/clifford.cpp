#include "cyclo_hecke/clifford.hpp"

#include <numeric>
#include <set>
#include <stdexcept>

#include "cyclo_hecke/parallel.hpp"

namespace cyclo_hecke {

int gamma_of(int alpha, int k_size) {
  if (k_size < 1 || alpha < 0 || alpha >= k_size) throw std::invalid_argument("alpha must lie in [0, K_size)");
  return k_size / std::gcd(alpha, k_size);
}

ReducedWord reduce_to_R(const GPElementSpec& spec, int p) {
  validate(spec.blocks, spec.blocks.n());
  if (spec.tilde && spec.blocks.ell[0] < 2) throw std::invalid_argument("tilde form needs ell_1 >= 2");
  ReducedWord out;
  out.r_word = spec.blocks;
  int rest = 0;
  for (size_t b = 1; b < spec.blocks.exps.size(); ++b) rest += spec.blocks.exps[b];
  out.r_word.exps[0] = spec.blocks.exps[0] * p - rest;
  out.prefactor = (spec.tilde ? 1 : 0) - rest;
  return out;
}

LaurentPoly quantum_integer(const LaurentPoly& q, int gamma) {
  if (gamma < 1) throw std::invalid_argument("gamma must be positive");
  LaurentPoly out(q.ring());
  for (int j = 0; j < gamma; ++j) out += q.pow(gamma - 1 - 2 * j);
  return out;
}

LaurentPoly c_block(const Ring* ring, const CycloRational& omega, int gamma) {
  const LaurentPoly q = LaurentPoly::variable(ring, "q");
  const LaurentPoly qinv = q.monomial_inverse();
  const CycloRational one = CycloRational::one(omega.field());
  LaurentPoly out = LaurentPoly::constant(ring, 1);
  for (int i = 1; i < gamma; ++i) {
    CycloRational w = omega.pow(i);
    out *= q * (one - w.inverse()).inverse() + qinv * (one - w).inverse();
  }
  return out;
}

LaurentPoly C_constant(const Ring* ring, const CycloRational& omega, int gamma, int nbar) {
  return c_block(ring, omega, gamma).pow(nbar);
}

MultiPartition bar_shape(const MultiPartition& lambda, int p, int gamma) {
  if (lambda.is_skew() || lambda.r() % p != 0 || p % gamma != 0) throw std::invalid_argument("bar_shape needs gamma | p | r");
  const int d = lambda.r() / p, pbar = p / gamma;
  std::vector<Partition> parts;
  for (int k = 0; k < d; ++k)
    for (int tau = 0; tau < pbar; ++tau) parts.push_back(lambda.outer()[k * p + tau]);
  return MultiPartition(parts);
}

std::vector<Box> apply_w(const std::vector<Box>& cells, int j, int gamma) {
  std::vector<Box> out = cells;
  const int n = static_cast<int>(cells.size());
  for (int i = n; i >= std::max(j, 2); --i)
    if ((i - 1) % gamma != 0) std::swap(out[i - 2], out[i - 1]);
  return out;
}

std::vector<LacedTableau> kappa_laced_tableaux(const MultiPartition& lambda, int p, int kappa, std::vector<int> ell_bar) {
  const int gamma = p / std::gcd(((kappa % p) + p) % p, p);
  const int n = lambda.size();
  if (n % gamma != 0) throw std::invalid_argument("gamma must divide n");
  if (sigma_shift(lambda, p, kappa) != lambda) throw std::invalid_argument("sigma^kappa must fix the shape");
  const int nbar = n / gamma, pbar = p / gamma;
  if (ell_bar.empty()) ell_bar = {nbar};
  std::set<int> starts{1};
  for (int e : ell_bar)
    if (e < nbar) starts.insert(e + 1);
  const MultiPartition bar = bar_shape(lambda, p, gamma);
  std::vector<LacedTableau> out;
  for (const auto& L : enumerate_tableaux(lambda)) {
    if (sigma_shift(L, p, -kappa).cells != apply_w(L.cells, 1, gamma)) continue;
    LacedTableau lt;
    lt.tableau = L;
    lt.bar.shape = bar;
    for (int m = 1; m <= nbar; ++m) {
      const Box& b = L.at(m * gamma);
      const int k = b.comp / p, l = b.comp % p;
      lt.rho.push_back(l / pbar);
      lt.bar.cells.push_back(Box{k * pbar + l % pbar, b.row, b.col});
    }
    for (int m = 1; m <= nbar; ++m) {
      int v = starts.count(m) ? lt.rho[m - 1] : lt.rho[m - 2] - lt.rho[m - 1];
      lt.d.push_back(((v % gamma) + gamma) % gamma);
    }
    out.push_back(std::move(lt));
  }
  return out;
}

RationalFn bitrace_closed(const HeckeParams& params, const MultiPartition& lambda, const StandardElementSpec& r_word, int alpha) {
  const Ring* ring = params.ring();
  const int p = params.p();
  validate(r_word, lambda.size());
  int sum = std::accumulate(r_word.exps.begin(), r_word.exps.end(), 0);
  if (((sum % p) + p) % p != 0) throw std::invalid_argument("exponent sum must be divisible by p");
  Stabilizer st = stabilizer(lambda, p);
  const int gamma = gamma_of(alpha, st.k_size);
  const int kappa = alpha * st.f;
  const RationalFn zero{LaurentPoly(ring)};
  for (int l : r_word.ell)
    if (l % gamma != 0) return zero;
  for (int e : r_word.exps)
    if (e % gamma != 0) return zero;
  if (gamma == 1) return mn_character(params, lambda, r_word);
  const int nbar = lambda.size() / gamma;
  const int m = static_cast<int>(r_word.ell.size());
  StandardElementSpec bar_word;
  for (int b = 0; b < m; ++b) {
    bar_word.ell.push_back(r_word.ell[b] / gamma);
    bar_word.exps.push_back(r_word.exps[b] / gamma);
  }
  HeckeParams bar = params.bar(gamma);
  RationalFn inner = mn_character(bar, bar_shape(lambda, p, gamma), bar_word);
  LaurentPoly C = C_constant(ring, params.epsilon().pow(kappa), gamma, nbar);
  LaurentPoly gamma_pow = LaurentPoly::constant(ring, 1);
  for (int i = 0; i < nbar; ++i) gamma_pow *= LaurentPoly::constant(ring, gamma);
  // gamma^nbar / [gamma]^(nbar - m); [gamma] is a Laurent polynomial, so divide factor by factor
  RationalFn out = RationalFn(C * gamma_pow) * inner;
  const LaurentPoly qg = params.q().pow(gamma), qdiff = params.q_diff();
  for (int i = 0; i < nbar - m; ++i) out *= RationalFn::quotient(qdiff, qg - qg.monomial_inverse());
  return out;
}

RationalFn chi_irreducible(const HeckeParams& params, const MultiPartition& lambda, int j, const GPElementSpec& spec) {
  const Ring* ring = params.ring();
  Stabilizer st = stabilizer(lambda, params.p());
  if (j < 0 || j >= st.k_size) throw std::invalid_argument("j must lie in [0, K_size)");
  ReducedWord red = reduce_to_R(spec, params.p());
  const CycloRational eps = params.epsilon();
  RationalFn total{LaurentPoly(ring)};
  for (int alpha = 0; alpha < st.k_size; ++alpha) {
    const int kappa = alpha * st.f;
    CycloRational weight = eps.pow(kappa * red.prefactor - j * kappa);
    RationalFn b = bitrace_closed(params, lambda, red.r_word, alpha);
    if (!b.is_zero()) total += RationalFn(LaurentPoly::constant(ring, weight)) * b;
  }
  CycloRational scale(eps.field(), Rational(1, st.k_size));
  return RationalFn(LaurentPoly::constant(ring, scale)) * total;
}

std::vector<MultiPartition> orbit_representatives(int r, int p, int n) {
  std::vector<MultiPartition> out;
  std::set<MultiPartition> seen;
  for (const auto& lam : multipartitions_of(r, n)) {
    if (seen.count(lam)) continue;
    for (int s = 0; s < p; ++s) seen.insert(sigma_shift(lam, p, s));
    out.push_back(lam);
  }
  return out;
}

std::vector<ColumnLabel> hrpn_columns(int r, int p, int n) {
  if (p < 1 || r % p != 0) throw std::invalid_argument("p must divide r");
  const int d = r / p;
  std::vector<ColumnLabel> out;
  for (const auto& c : multipartitions_of(r, n)) {
    StandardElementSpec spec = class_to_standard_element(c);
    int sum = std::accumulate(spec.exps.begin(), spec.exps.end(), 0);
    if (sum % p != 0) continue;
    spec.exps[0] = (sum / p) % d;
    out.push_back(ColumnLabel{spec, false});
    if (spec.ell[0] >= 2) out.push_back(ColumnLabel{spec, true});
  }
  return out;
}

CharacterTable character_table_hrpn(int r, int p, int n, int jobs) {
  if (r < 1 || p < 1 || n < 1 || r % p != 0) throw std::invalid_argument("need p | r and n >= 1");
  if (p == 1) return character_table_hrn(r, n, jobs);
  HeckeParams params = HeckeParams::hrpn(r, p);
  CharacterTable table;
  table.r = r;
  table.p = p;
  table.n = n;
  table.ring = params.ring();
  for (const auto& lam : orbit_representatives(r, p, n)) {
    Stabilizer st = stabilizer(lam, p);
    for (int j = 0; j < st.k_size; ++j) table.rows.push_back(RowLabel{lam, j, st.f, st.k_size});
  }
  table.cols = hrpn_columns(r, p, n);
  const int ncols = static_cast<int>(table.cols.size());
  table.entries.assign(table.rows.size(), std::vector<RationalFn>(ncols));
  parallel_for(static_cast<int>(table.rows.size()) * ncols, jobs, [&](int cell) {
    const int row = cell / ncols, col = cell % ncols;
    const RowLabel& rl = table.rows[row];
    table.entries[row][col] = chi_irreducible(params, rl.shape, *rl.j, GPElementSpec{*table.cols[col].tilde, table.cols[col].spec, 0});
  });
  return table;
}

}  // namespace cyclo_hecke
