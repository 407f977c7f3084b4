#include "cyclo_hecke/seminormal.hpp"

#include <sstream>
#include <stdexcept>

namespace cyclo_hecke {

Matrix::Matrix(int dim, const Ring* ring) : dim_(dim), ring_(ring), cells_(static_cast<size_t>(dim) * dim, RationalFn(LaurentPoly(ring))) {}

Matrix Matrix::identity(int dim, const Ring* ring) {
  Matrix m(dim, ring);
  for (int i = 0; i < dim; ++i) m(i, i) = RationalFn(LaurentPoly::constant(ring, 1));
  return m;
}

Matrix Matrix::diagonal(const std::vector<RationalFn>& entries, const Ring* ring) {
  Matrix m(static_cast<int>(entries.size()), ring);
  for (int i = 0; i < m.dim_; ++i) m(i, i) = entries[i];
  return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
  Matrix r = *this;
  for (size_t i = 0; i < cells_.size(); ++i) r.cells_[i] += o.cells_[i];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  Matrix r = *this;
  for (size_t i = 0; i < cells_.size(); ++i) r.cells_[i] -= o.cells_[i];
  return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (dim_ != o.dim_) throw std::invalid_argument("matrix size mismatch");
  Matrix r(dim_, ring_);
  for (int i = 0; i < dim_; ++i)
    for (int k = 0; k < dim_; ++k) {
      const RationalFn& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (int j = 0; j < dim_; ++j) {
        const RationalFn& b = o(k, j);
        if (!b.is_zero()) r(i, j) += a * b;
      }
    }
  return r;
}

Matrix Matrix::scaled(const RationalFn& c) const {
  Matrix r = *this;
  for (auto& x : r.cells_)
    if (!x.is_zero()) x *= c;
  return r;
}

std::vector<RationalFn> Matrix::apply(const std::vector<RationalFn>& v) const {
  std::vector<RationalFn> out(dim_, RationalFn(LaurentPoly(ring_)));
  for (int j = 0; j < dim_; ++j) {
    if (v[j].is_zero()) continue;
    for (int i = 0; i < dim_; ++i)
      if (!(*this)(i, j).is_zero()) out[i] += (*this)(i, j) * v[j];
  }
  return out;
}

bool Matrix::is_zero() const {
  for (const auto& x : cells_)
    if (!x.is_zero()) return false;
  return true;
}

bool Matrix::is_diagonal() const {
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j)
      if (i != j && !(*this)(i, j).is_zero()) return false;
  return true;
}

bool Matrix::operator==(const Matrix& o) const {
  if (dim_ != o.dim_) return false;
  for (size_t i = 0; i < cells_.size(); ++i)
    if (cells_[i] != o.cells_[i]) return false;
  return true;
}

AlgebraWord& AlgebraWord::append(char kind, int index, int exp) {
  letters.push_back({kind, index, exp});
  return *this;
}

AlgebraWord& AlgebraWord::append(const AlgebraWord& w) {
  letters.insert(letters.end(), w.letters.begin(), w.letters.end());
  return *this;
}

AlgebraWord parse_word(const std::string& text) {
  AlgebraWord w;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok.size() < 2 || std::string("TtaS").find(tok[0]) == std::string::npos)
      throw std::invalid_argument("bad word token '" + tok + "'");
    size_t caret = tok.find('^');
    std::string idx = tok.substr(1, caret == std::string::npos ? std::string::npos : caret - 1);
    std::string ex = caret == std::string::npos ? "1" : tok.substr(caret + 1);
    size_t used_i = 0, used_e = 0;
    int index = 0, exp = 0;
    try {
      index = std::stoi(idx, &used_i);
      exp = std::stoi(ex, &used_e);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad word token '" + tok + "'");
    }
    if (used_i != idx.size() || used_e != ex.size() || idx[0] == '-' || idx[0] == '+')
      throw std::invalid_argument("bad word token '" + tok + "'");
    w.append(tok[0], index, exp);
  }
  return w;
}

std::string to_string(const AlgebraWord& w) {
  std::string s;
  for (const auto& l : w.letters) {
    if (!s.empty()) s += " ";
    s += l.kind + std::to_string(l.index);
    if (l.exp != 1) s += "^" + std::to_string(l.exp);
  }
  return s;
}

SeminormalRep::SeminormalRep(MultiPartition shape, HeckeParams params)
    : shape_(std::move(shape)), params_(std::move(params)), n_(shape_.size()) {
  if (shape_.r() != params_.r()) throw std::invalid_argument("shape has the wrong number of components for these parameters");
  basis_ = enumerate_tableaux(shape_);
  const Ring* ring = params_.ring();
  for (int i = 0; i < dim(); ++i) {
    index_[basis_[i].cells] = i;
    std::vector<LaurentPoly> ct;
    for (const Box& b : basis_[i].cells) ct.push_back(params_.content(b));
    contents_.push_back(std::move(ct));
  }
  const RationalFn qinv(params_.q().monomial_inverse());
  T_.resize(n_ + 1);
  a_.resize(n_ + 1);
  if (n_ >= 1) {
    std::vector<RationalFn> d1, d0;
    for (int L = 0; L < dim(); ++L) {
      d1.emplace_back(contents_[L][0]);
      d0.emplace_back(contents_[L][0].pow(params_.p()));
    }
    T_[1] = Matrix::diagonal(d1, ring);
    a_[0] = Matrix::diagonal(d0, ring);
  }
  for (int i = 2; i <= n_; ++i) {
    Matrix m(dim(), ring);
    Matrix a1(dim(), ring);
    for (int L = 0; L < dim(); ++L) {
      const LaurentPoly& prev = contents_[L][i - 2];
      const LaurentPoly& cur = contents_[L][i - 1];
      // (q - q^-1) / (1 - ct(L(i-1)) / ct(L(i))) = (q - q^-1) ct(L(i)) / (ct(L(i)) - ct(L(i-1)))
      RationalFn diag = RationalFn::quotient(params_.q_diff() * cur, cur - prev);
      m(L, L) = diag;
      std::vector<Box> swapped = basis_[L].cells;
      std::swap(swapped[i - 2], swapped[i - 1]);
      int sL = index_of(swapped);
      if (sL >= 0) m(sL, L) = qinv + diag;
      if (i == 2) {
        a1(L, L) = diag;
        if (sL >= 0) {
          RationalFn ratio = RationalFn::quotient(contents_[L][0], contents_[sL][0]);
          a1(sL, L) = ratio * (qinv + diag);
        }
      }
    }
    T_[i] = m;
    if (i == 2) a_[1] = a1;
  }
  for (int i = 2; i <= n_; ++i) a_[i] = T_[i];
  rebuild_sparse();
}

int SeminormalRep::index_of(const std::vector<Box>& cells) const {
  auto it = index_.find(cells);
  return it == index_.end() ? -1 : it->second;
}

Matrix SeminormalRep::T_inverse(int i) const {
  if (i < 1 || i > n_) throw std::invalid_argument("generator index out of range");
  if (i == 1) {
    std::vector<RationalFn> d;
    for (int L = 0; L < dim(); ++L) d.push_back(T_[1](L, L).inverse());
    return Matrix::diagonal(d, ring());
  }
  return T_[i] - Matrix::identity(dim(), ring()).scaled(RationalFn(params_.q_diff()));
}

Matrix SeminormalRep::a_inverse(int i) const {
  if (i < 0 || i > n_ || (i == 1 && n_ < 2)) throw std::invalid_argument("generator index out of range");
  if (i == 0) {
    std::vector<RationalFn> d;
    for (int L = 0; L < dim(); ++L) d.push_back(a_[0](L, L).inverse());
    return Matrix::diagonal(d, ring());
  }
  return a_[i] - Matrix::identity(dim(), ring()).scaled(RationalFn(params_.q_diff()));
}

SeminormalRep::SparseOp SeminormalRep::sparse(const Matrix& m) {
  SparseOp op;
  op.cols.resize(m.dim());
  for (int j = 0; j < m.dim(); ++j)
    for (int i = 0; i < m.dim(); ++i)
      if (!m(i, j).is_zero()) op.cols[j].emplace_back(i, m(i, j));
  return op;
}

void SeminormalRep::rebuild_sparse() {
  T_sparse_.assign(n_ + 1, {});
  T_inv_sparse_.assign(n_ + 1, {});
  a_sparse_.assign(n_ + 1, {});
  a_inv_sparse_.assign(n_ + 1, {});
  for (int i = 1; i <= n_; ++i) {
    T_sparse_[i] = sparse(T_[i]);
    T_inv_sparse_[i] = sparse(T_inverse(i));
  }
  for (int i = 0; i <= n_; ++i) {
    if (i == 1 && n_ < 2) continue;
    a_sparse_[i] = sparse(a_[i]);
    a_inv_sparse_[i] = sparse(a_inverse(i));
  }
}

void SeminormalRep::replace_T(int i, Matrix m) {
  T_.at(i) = std::move(m);
  rebuild_sparse();
}

void SeminormalRep::replace_a(int i, Matrix m) {
  a_.at(i) = std::move(m);
  rebuild_sparse();
}

Matrix SeminormalRep::hoefsmit_matrix(int i) const {
  if (i < 1 || i > n_) throw std::invalid_argument("generator index out of range");
  Matrix m = T_[1];
  for (int j = 2; j <= i; ++j) m = T_[j] * m * T_[j];
  std::vector<RationalFn> expected;
  for (int L = 0; L < dim(); ++L) expected.emplace_back(contents_[L][i - 1]);
  Matrix diag = Matrix::diagonal(expected, ring());
  if (!(m == diag)) throw std::logic_error("t_" + std::to_string(i) + " does not act by contents");
  return diag;
}

Matrix SeminormalRep::s_matrix(int i) const {
  if (i < 1 || i > n_) throw std::invalid_argument("generator index out of range");
  Matrix m;
  if (i == 1) {
    m = a_[0];
  } else {
    m = a_[1] * a_[2];
    for (int j = 3; j <= i; ++j) m = a_[j] * m * a_[j];
  }
  std::vector<RationalFn> expected;
  for (int L = 0; L < dim(); ++L) {
    if (i == 1)
      expected.emplace_back(contents_[L][0].pow(params_.p()));
    else
      expected.emplace_back(contents_[L][i - 1] * contents_[L][0].monomial_inverse());
  }
  Matrix diag = Matrix::diagonal(expected, ring());
  if (!(m == diag)) throw std::logic_error("S_" + std::to_string(i) + " does not act diagonally as expected");
  return diag;
}

void SeminormalRep::apply_primitive(char kind, int index, bool inverse, std::vector<RationalFn>& v) const {
  const SparseOp& op = kind == 'T' ? (inverse ? T_inv_sparse_[index] : T_sparse_[index])
                                   : (inverse ? a_inv_sparse_[index] : a_sparse_[index]);
  std::vector<RationalFn> out(v.size(), RationalFn(LaurentPoly(ring())));
  for (size_t j = 0; j < v.size(); ++j) {
    if (v[j].is_zero()) continue;
    for (const auto& [i, val] : op.cols[j]) out[i] += val * v[j];
  }
  v = std::move(out);
}

namespace {

// Expansion of a letter into T / a primitives, as a left-to-right product.
std::vector<std::pair<char, int>> expand(const Letter& l, int n) {
  std::vector<std::pair<char, int>> out;
  auto check = [&](int lo, int hi) {
    if (l.index < lo || l.index > hi) throw std::invalid_argument(std::string("letter ") + l.kind + std::to_string(l.index) + " out of range");
  };
  switch (l.kind) {
    case 'T':
      check(1, n);
      out.push_back({'T', l.index});
      break;
    case 't':
      check(1, n);
      for (int j = l.index; j >= 2; --j) out.push_back({'T', j});
      out.push_back({'T', 1});
      for (int j = 2; j <= l.index; ++j) out.push_back({'T', j});
      break;
    case 'a':
      check(0, n);
      if (l.index == 1 && n < 2) throw std::invalid_argument("a1 needs n >= 2");
      out.push_back({'a', l.index});
      break;
    case 'S':
      check(1, n);
      if (l.index == 1) {
        out.push_back({'a', 0});
      } else {
        for (int j = l.index; j >= 3; --j) out.push_back({'a', j});
        out.push_back({'a', 1});
        for (int j = 2; j <= l.index; ++j) out.push_back({'a', j});
      }
      break;
    default:
      throw std::invalid_argument(std::string("unknown generator ") + l.kind);
  }
  return out;
}

}  // namespace

std::vector<RationalFn> SeminormalRep::apply_word(const AlgebraWord& w, std::vector<RationalFn> v) const {
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    auto prims = expand(*it, n_);
    for (int rep = 0; rep < std::abs(it->exp); ++rep) {
      if (it->exp > 0) {
        for (auto p = prims.rbegin(); p != prims.rend(); ++p) apply_primitive(p->first, p->second, false, v);
      } else {
        for (const auto& p : prims) apply_primitive(p.first, p.second, true, v);
      }
    }
  }
  return v;
}

std::vector<RationalFn> SeminormalRep::apply_word(const AlgebraWord& w, int col) const {
  std::vector<RationalFn> v(dim(), RationalFn(LaurentPoly(ring())));
  v[col] = RationalFn(LaurentPoly::constant(ring(), 1));
  return apply_word(w, std::move(v));
}

Matrix word_matrix(const SeminormalRep& rep, const AlgebraWord& w) {
  Matrix m(rep.dim(), rep.ring());
  for (int L = 0; L < rep.dim(); ++L) {
    auto col = rep.apply_word(w, L);
    for (int i = 0; i < rep.dim(); ++i) m(i, L) = col[i];
  }
  return m;
}

RationalFn trace_of(const SeminormalRep& rep, const AlgebraWord& w) {
  RationalFn total(LaurentPoly(rep.ring()));
  for (int L = 0; L < rep.dim(); ++L) total += rep.apply_word(w, L)[L];
  return total;
}

RationalFn twisted_bitrace(const SeminormalRep& rep, const AlgebraWord& w, int alpha) {
  const int p = rep.params().p();
  Stabilizer st = stabilizer(rep.shape(), p);
  if (alpha < 0 || alpha >= st.k_size) throw std::invalid_argument("alpha must lie in [0, K_size)");
  const int kappa = alpha * st.f;
  RationalFn total(LaurentPoly(rep.ring()));
  for (int L = 0; L < rep.dim(); ++L) {
    int target = rep.index_of(sigma_shift(rep.basis()[L], p, -kappa).cells);
    if (target < 0) throw std::logic_error("sigma power does not preserve the tableau set");
    total += rep.apply_word(w, L)[target];
  }
  return total;
}

Matrix sigma_matrix(const SeminormalRep& rep, int power) {
  const int p = rep.params().p();
  Matrix m(rep.dim(), rep.ring());
  for (int L = 0; L < rep.dim(); ++L) {
    int target = rep.index_of(sigma_shift(rep.basis()[L], p, power).cells);
    if (target < 0) throw std::invalid_argument("sigma power does not fix the shape");
    m(target, L) = RationalFn(LaurentPoly::constant(rep.ring(), 1));
  }
  return m;
}

RelationReport verify_relations(const SeminormalRep& rep) {
  const int n = rep.n();
  const int dim = rep.dim();
  const Ring* ring = rep.ring();
  const Matrix id = Matrix::identity(dim, ring);
  auto fail = [](std::string what) { return RelationReport{false, std::move(what)}; };
  for (int i = 1; i <= n; ++i)
    for (int j = i + 2; j <= n; ++j)
      if (!(rep.T(i) * rep.T(j) == rep.T(j) * rep.T(i)))
        return fail("(1) T" + std::to_string(i) + " T" + std::to_string(j) + " = T" + std::to_string(j) + " T" + std::to_string(i));
  for (int i = 2; i + 1 <= n; ++i)
    if (!(rep.T(i) * rep.T(i + 1) * rep.T(i) == rep.T(i + 1) * rep.T(i) * rep.T(i + 1)))
      return fail("(2) braid T" + std::to_string(i) + " T" + std::to_string(i + 1));
  if (n >= 2 && !(rep.T(1) * rep.T(2) * rep.T(1) * rep.T(2) == rep.T(2) * rep.T(1) * rep.T(2) * rep.T(1)))
    return fail("(3) T1 T2 T1 T2 = T2 T1 T2 T1");
  if (n >= 1) {
    Matrix prod = id;
    for (int c = 0; c < rep.params().r(); ++c) prod = prod * (rep.T(1) - id.scaled(RationalFn(rep.params().u(c))));
    if (!prod.is_zero()) return fail("(4) cyclotomic relation for T1");
  }
  const RationalFn q(rep.params().q()), qinv(rep.params().q().monomial_inverse());
  for (int i = 2; i <= n; ++i)
    if (!((rep.T(i) - id.scaled(q)) * (rep.T(i) + id.scaled(qinv))).is_zero())
      return fail("(5) quadratic relation for T" + std::to_string(i));
  if (rep.params().mode() != Mode::hrpn) return {};

  const int p = rep.params().p();
  if (n >= 1) {
    Matrix pw = id;
    for (int k = 0; k < p; ++k) pw = pw * rep.T(1);
    if (!(pw == rep.a(0))) return fail("a0 = T1^p");
  }
  if (n >= 2 && !(rep.T_inverse(1) * rep.T(2) * rep.T(1) == rep.a(1))) return fail("a1 = T1^-1 T2 T1");
  for (int i = 2; i <= n; ++i)
    if (!(rep.a(i) == rep.T(i))) return fail("a" + std::to_string(i) + " = T" + std::to_string(i));
  // sigma : V^lambda -> V^{sigma lambda} intertwines the a_i and twists T1 by epsilon
  SeminormalRep shifted(sigma_shift(rep.shape(), p, 1), rep.params());
  Matrix P(dim, ring);
  for (int L = 0; L < dim; ++L) {
    int target = shifted.index_of(sigma_shift(rep.basis()[L], p, 1).cells);
    if (target < 0) return fail("sigma maps tableaux to tableaux");
    P(target, L) = RationalFn(LaurentPoly::constant(ring, 1));
  }
  for (int i = 0; i <= n; ++i) {
    if (i == 1 && n < 2) continue;
    if (!(P * rep.a(i) == shifted.a(i) * P)) return fail("sigma commutes with a" + std::to_string(i));
  }
  if (n >= 1) {
    RationalFn eps(LaurentPoly::constant(ring, rep.params().epsilon()));
    if (!(shifted.T(1) * P == (P * rep.T(1)).scaled(eps))) return fail("T1 sigma = eps sigma T1");
  }
  return {};
}

}  // namespace cyclo_hecke
