#include "cyclo_hecke/laurent.hpp"

#include <memory>
#include <mutex>
#include <stdexcept>

namespace cyclo_hecke {

Ring::Ring(int order, std::vector<std::string> vars)
    : order_(order), field_(&CycloField::get(order)), vars_(std::move(vars)) {}

const Ring* Ring::get(int order, const std::vector<std::string>& vars) {
  if (static_cast<int>(vars.size()) > kMaxVars) throw std::invalid_argument("too many variables");
  for (size_t i = 0; i < vars.size(); ++i)
    for (size_t j = i + 1; j < vars.size(); ++j)
      if (vars[i] == vars[j]) throw std::invalid_argument("duplicate variable " + vars[i]);
  static std::mutex mu;
  static std::map<std::pair<int, std::vector<std::string>>, std::unique_ptr<Ring>> rings;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = rings[{order, vars}];
  if (!slot) slot.reset(new Ring(order, vars));
  return slot.get();
}

int Ring::index_of(const std::string& name) const {
  for (int i = 0; i < nvars(); ++i)
    if (vars_[i] == name) return i;
  return -1;
}

bool Exponents::is_zero() const {
  for (auto x : e)
    if (x != 0) return false;
  return true;
}

long long Exponents::degree() const {
  long long d = 0;
  for (auto x : e) d += x;
  return d;
}

Exponents Exponents::operator+(const Exponents& o) const {
  Exponents r;
  for (int i = 0; i < kMaxVars; ++i) r.e[i] = e[i] + o.e[i];
  return r;
}

Exponents Exponents::operator-(const Exponents& o) const {
  Exponents r;
  for (int i = 0; i < kMaxVars; ++i) r.e[i] = e[i] - o.e[i];
  return r;
}

Exponents Exponents::operator-() const { return scaled(-1); }

Exponents Exponents::scaled(int k) const {
  Exponents r;
  for (int i = 0; i < kMaxVars; ++i) r.e[i] = e[i] * k;
  return r;
}

LaurentPoly LaurentPoly::constant(const Ring* ring, const CycloRational& c) {
  return monomial(ring, c, Exponents{});
}

LaurentPoly LaurentPoly::constant(const Ring* ring, long long c) {
  return constant(ring, CycloRational(ring->field(), Rational(static_cast<long>(c))));
}

LaurentPoly LaurentPoly::monomial(const Ring* ring, const CycloRational& c, const Exponents& exps) {
  LaurentPoly p(ring);
  p.add_term(exps, c);
  return p;
}

LaurentPoly LaurentPoly::variable(const Ring* ring, const std::string& name, int power) {
  int idx = ring->index_of(name);
  if (idx < 0) throw std::invalid_argument("unknown variable " + name);
  Exponents e;
  e[idx] = power;
  return monomial(ring, CycloRational::one(ring->field()), e);
}

bool LaurentPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_zero());
}

CycloRational LaurentPoly::constant_term() const {
  auto it = terms_.find(Exponents{});
  if (it != terms_.end()) return it->second;
  return ring_ ? CycloRational::zero(ring_->field()) : CycloRational();
}

const CycloField& LaurentPoly::field() const {
  return ring_ ? ring_->field() : CycloField::get(1);
}

void LaurentPoly::add_term(const Exponents& exps, const CycloRational& c) {
  if (c.is_zero()) return;
  if (ring_) {
    for (int i = ring_->nvars(); i < kMaxVars; ++i)
      if (exps[i] != 0) throw std::invalid_argument("exponent on variable outside the ring");
    if (&c.field() != &ring_->field()) {
      if (c.order() != 1) throw std::invalid_argument("coefficient from a different cyclotomic field");
      add_term(exps, CycloRational(ring_->field(), c.coeffs()[0]));
      return;
    }
  }
  auto [it, inserted] = terms_.try_emplace(exps, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

const Ring* LaurentPoly::adopt(const LaurentPoly& o) {
  if (!o.ring_) return ring_;
  if (!ring_) {
    ring_ = o.ring_;
    return ring_;
  }
  if (ring_ != o.ring_) throw std::invalid_argument("mismatched variable lists or cyclotomic orders");
  return ring_;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  adopt(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  adopt(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r(a.ring_);
  r.adopt(b);
  if (a.terms_.size() == 1 && a.terms_.begin()->second.is_one()) {
    LaurentPoly s = b.shifted(a.terms_.begin()->first);
    s.ring_ = r.ring_;
    return s;
  }
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  *this = *this * o;
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const CycloRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coef] : terms_) coef *= c;
  return *this;
}

LaurentPoly LaurentPoly::shifted(const Exponents& by) const {
  LaurentPoly r(ring_);
  for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e + by, c);
  return r;
}

LaurentPoly LaurentPoly::monomial_inverse() const {
  if (!is_monomial()) throw std::domain_error("only monomials are invertible in the Laurent ring");
  const auto& [e, c] = *terms_.begin();
  return monomial(ring_, c.inverse(), -e);
}

LaurentPoly LaurentPoly::pow(long long e) const {
  if (e < 0) return monomial_inverse().pow(-e);
  if (is_monomial()) {
    const auto& [ex, c] = *terms_.begin();
    return monomial(ring_, c.pow(e), ex.scaled(static_cast<int>(e)));
  }
  LaurentPoly result = constant(ring_, 1);
  LaurentPoly base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

bool LaurentPoly::operator==(const LaurentPoly& o) const {
  if (ring_ && o.ring_ && ring_ != o.ring_) throw std::invalid_argument("mismatched variable lists or cyclotomic orders");
  if (terms_.size() != o.terms_.size()) return false;
  auto it = o.terms_.begin();
  for (const auto& [e, c] : terms_) {
    if (e != it->first || c != it->second) return false;
    ++it;
  }
  return true;
}

Substitution::Substitution(const Ring* source, const Ring* target) : source_(source), target_(target) {
  images_.reserve(source->nvars());
  for (const auto& name : source->vars()) {
    bool present = target->index_of(name) >= 0;
    images_.push_back(present ? LaurentPoly::variable(target, name) : LaurentPoly(target));
    defined_.push_back(present);
  }
  if (source->order() != target->order() && source->order() != 1)
    throw std::invalid_argument("substitution cannot change the cyclotomic order");
}

Substitution& Substitution::bind(const std::string& var, const LaurentPoly& value) {
  int idx = source_->index_of(var);
  if (idx < 0) throw std::invalid_argument("unknown variable " + var);
  if (value.size() > 1) throw std::invalid_argument("bound value must be a monomial or constant");
  LaurentPoly v(target_);
  v += value;
  images_[idx] = v;
  defined_[idx] = true;
  return *this;
}

Substitution& Substitution::bind(const std::string& var, const CycloRational& value) {
  return bind(var, LaurentPoly::constant(target_, value));
}

LaurentPoly Substitution::apply(const LaurentPoly& p) const {
  LaurentPoly out(target_);
  if (p.ring() && p.ring() != source_) throw std::invalid_argument("substitution applied to a polynomial over another ring");
  for (const auto& [e, c] : p.terms()) {
    LaurentPoly term = LaurentPoly::constant(target_, c);
    for (int i = 0; i < source_->nvars(); ++i) {
      if (e[i] == 0) continue;
      if (!defined_[i]) throw std::invalid_argument("variable " + source_->vars()[i] + " has no image in the target ring");
      const LaurentPoly& img = images_[i];
      if (img.is_zero()) {
        if (e[i] < 0) throw std::domain_error("variable " + source_->vars()[i] + " bound to zero appears with negative exponent");
        term = LaurentPoly(target_);
        break;
      }
      term *= img.pow(e[i]);
    }
    out += term;
  }
  return out;
}

LaurentPoly complete_homogeneous(const std::vector<LaurentPoly>& xs, int m, const Ring* ring) {
  if (m < 0) return LaurentPoly(ring);
  // h[j] over the variables seen so far
  std::vector<LaurentPoly> h(m + 1, LaurentPoly(ring));
  h[0] = LaurentPoly::constant(ring, 1);
  for (const auto& x : xs)
    for (int j = 1; j <= m; ++j) h[j] += x * h[j - 1];
  return h[m];
}

LaurentPoly elementary(const std::vector<LaurentPoly>& xs, int t, const Ring* ring) {
  if (t < 0) return LaurentPoly(ring);
  std::vector<LaurentPoly> e(t + 1, LaurentPoly(ring));
  e[0] = LaurentPoly::constant(ring, 1);
  for (const auto& x : xs)
    for (int j = t; j >= 1; --j) e[j] += x * e[j - 1];
  return e[t];
}

}  // namespace cyclo_hecke
