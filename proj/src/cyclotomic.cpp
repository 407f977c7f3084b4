#include "cyclo_hecke/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace cyclo_hecke {

namespace {

// Exact division of a by a monic b, both constant term first.
std::vector<long> divide_monic(const std::vector<long>& a, const std::vector<long>& b) {
  std::vector<long> rem = a;
  const size_t db = b.size() - 1;
  std::vector<long> quot(a.size() - db, 0);
  for (size_t i = a.size(); i-- > db;) {
    long c = rem[i];
    quot[i - db] = c;
    if (c == 0) continue;
    for (size_t j = 0; j <= db; ++j) rem[i - db + j] -= c * b[j];
  }
  for (size_t i = 0; i < db; ++i)
    if (rem[i] != 0) throw std::logic_error("cyclotomic division left a remainder");
  return quot;
}

}  // namespace

std::vector<long> cyclotomic_polynomial(int order) {
  if (order < 1) throw std::invalid_argument("cyclotomic order must be positive");
  static std::mutex mu;
  static std::map<int, std::vector<long>> memo;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find(order);
    if (it != memo.end()) return it->second;
  }
  std::vector<long> poly(order + 1, 0);
  poly[0] = -1;
  poly[order] = 1;
  for (int d = 1; d < order; ++d)
    if (order % d == 0) poly = divide_monic(poly, cyclotomic_polynomial(d));
  std::lock_guard<std::mutex> lock(mu);
  memo.emplace(order, poly);
  return poly;
}

CycloField::CycloField(int order) : order_(order) {
  phi_ = cyclotomic_polynomial(order);
  degree_ = static_cast<int>(phi_.size()) - 1;
  int count = std::max(order, 2 * degree_ - 1);
  std::vector<long> cur(degree_, 0);
  cur[0] = 1;
  for (int k = 0; k < count; ++k) {
    powers_.push_back(cur);
    // multiply by zeta: shift, then reduce the overflow with the monic relation
    long top = cur[degree_ - 1];
    for (int i = degree_ - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    if (top != 0)
      for (int i = 0; i < degree_; ++i) cur[i] -= top * phi_[i];
  }
}

const CycloField& CycloField::get(int order) {
  if (order < 1) throw std::invalid_argument("cyclotomic order must be positive");
  static std::mutex mu;
  static std::map<int, std::unique_ptr<CycloField>> fields;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = fields[order];
  if (!slot) slot.reset(new CycloField(order));
  return *slot;
}

CycloRational::CycloRational() : field_(&CycloField::get(1)), coeffs_(1, Rational(0)) {}

CycloRational::CycloRational(const CycloField& field, const Rational& value)
    : field_(&field), coeffs_(field.degree(), Rational(0)) {
  coeffs_[0] = value;
}

CycloRational::CycloRational(const CycloField& field, std::vector<Rational> coeffs)
    : field_(&field), coeffs_(std::move(coeffs)) {
  if (static_cast<int>(coeffs_.size()) != field.degree())
    throw std::invalid_argument("coefficient vector length must equal phi(N)");
}

bool CycloRational::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return sgn(c) == 0; });
}

bool CycloRational::is_rational() const {
  return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const Rational& c) { return sgn(c) == 0; });
}

bool CycloRational::is_one() const { return coeffs_[0] == 1 && is_rational(); }

void CycloRational::check_same_field(const CycloRational& o) const {
  if (field_ != o.field_) throw std::invalid_argument("cyclotomic orders differ");
}

namespace {

// Rationals embed in every field; promote an order-1 operand so mixed expressions work.
void align(CycloRational& a, const CycloRational& b) {
  if (a.order() == b.order()) return;
  if (a.order() == 1) a = CycloRational(b.field(), a.coeffs()[0]);
}

}  // namespace

CycloRational CycloRational::operator-() const {
  CycloRational r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

CycloRational& CycloRational::operator+=(const CycloRational& o) {
  align(*this, o);
  if (o.order() == 1 && order() != 1) {
    coeffs_[0] += o.coeffs_[0];
    return *this;
  }
  check_same_field(o);
  for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

CycloRational& CycloRational::operator-=(const CycloRational& o) { return *this += -o; }

CycloRational& CycloRational::operator*=(const CycloRational& o) {
  align(*this, o);
  if (o.order() == 1 && order() != 1) {
    for (auto& c : coeffs_) c *= o.coeffs_[0];
    return *this;
  }
  check_same_field(o);
  const int deg = field_->degree();
  if (deg == 1) {
    coeffs_[0] *= o.coeffs_[0];
    return *this;
  }
  if (o.is_rational()) {
    for (auto& c : coeffs_) c *= o.coeffs_[0];
    return *this;
  }
  if (is_rational()) {
    Rational s = coeffs_[0];
    coeffs_ = o.coeffs_;
    for (auto& c : coeffs_) c *= s;
    return *this;
  }
  std::vector<Rational> prod(2 * deg - 1, Rational(0));
  for (int i = 0; i < deg; ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    for (int j = 0; j < deg; ++j)
      if (sgn(o.coeffs_[j]) != 0) prod[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  std::vector<Rational> out(prod.begin(), prod.begin() + deg);
  for (int k = deg; k < 2 * deg - 1; ++k) {
    if (sgn(prod[k]) == 0) continue;
    const auto& red = field_->power(k);
    for (int i = 0; i < deg; ++i)
      if (red[i] != 0) out[i] += prod[k] * red[i];
  }
  coeffs_ = std::move(out);
  return *this;
}

CycloRational CycloRational::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero in cyclotomic field");
  const int deg = field_->degree();
  if (is_rational()) return CycloRational(*field_, Rational(1) / coeffs_[0]);
  // Solve M x = e_0 where column j of M is this * zeta^j.
  std::vector<std::vector<Rational>> m(deg, std::vector<Rational>(deg + 1, Rational(0)));
  for (int j = 0; j < deg; ++j) {
    std::vector<Rational> basis(deg, Rational(0));
    basis[j] = 1;
    CycloRational col = *this * CycloRational(*field_, basis);
    for (int i = 0; i < deg; ++i) m[i][j] = col.coeffs_[i];
  }
  m[0][deg] = 1;
  for (int c = 0; c < deg; ++c) {
    int piv = c;
    while (sgn(m[piv][c]) == 0) ++piv;
    std::swap(m[piv], m[c]);
    Rational inv = Rational(1) / m[c][c];
    for (int k = c; k <= deg; ++k) m[c][k] *= inv;
    for (int i = 0; i < deg; ++i) {
      if (i == c || sgn(m[i][c]) == 0) continue;
      Rational f = m[i][c];
      for (int k = c; k <= deg; ++k) m[i][k] -= f * m[c][k];
    }
  }
  std::vector<Rational> x(deg);
  for (int i = 0; i < deg; ++i) x[i] = m[i][deg];
  return CycloRational(*field_, std::move(x));
}

CycloRational CycloRational::pow(long long e) const {
  if (e < 0) return inverse().pow(-e);
  CycloRational result = one(*field_);
  CycloRational base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

CycloRational CycloRational::galois(int k) const {
  const int n = field_->order();
  const int deg = field_->degree();
  int kk = ((k % n) + n) % n;
  if (std::gcd(kk, n) != 1) throw std::invalid_argument("galois exponent must be a unit mod N");
  std::vector<Rational> out(deg, Rational(0));
  for (int i = 0; i < deg; ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    const auto& red = field_->power(static_cast<int>((static_cast<long long>(i) * kk) % n));
    for (int j = 0; j < deg; ++j)
      if (red[j] != 0) out[j] += coeffs_[i] * red[j];
  }
  return CycloRational(*field_, std::move(out));
}

CycloRational CycloRational::conj() const { return galois(-1); }

bool CycloRational::operator==(const CycloRational& o) const {
  if (field_ != o.field_) {
    if (order() == 1 || o.order() == 1) return is_rational() && o.is_rational() && coeffs_[0] == o.coeffs_[0];
    return false;
  }
  return coeffs_ == o.coeffs_;
}

int CycloRational::compare(const CycloRational& o) const {
  if (order() != o.order()) return order() < o.order() ? -1 : 1;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    int c = cmp(coeffs_[i], o.coeffs_[i]);
    if (c != 0) return c < 0 ? -1 : 1;
  }
  return 0;
}

CycloRational root_of_unity(int order, long long k) {
  const CycloField& f = CycloField::get(order);
  long long kk = ((k % order) + order) % order;
  std::vector<Rational> c(f.degree());
  const auto& red = f.power(static_cast<int>(kk));
  for (int i = 0; i < f.degree(); ++i) c[i] = red[i];
  return CycloRational(f, std::move(c));
}

}  // namespace cyclo_hecke
