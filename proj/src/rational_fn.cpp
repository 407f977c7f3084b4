#include "cyclo_hecke/rational_fn.hpp"

#include <algorithm>
#include <functional>

namespace cyclo_hecke {

bool BinomialLess::operator()(const Binomial& a, const Binomial& b) const {
  if (a.exps != b.exps) return GrlexDesc{}(a.exps, b.exps);
  return a.coeff.compare(b.coeff) < 0;
}

LaurentPoly binomial_poly(const Ring* ring, const Binomial& f) {
  LaurentPoly p = LaurentPoly::constant(ring, 1);
  p.add_term(f.exps, -f.coeff);
  return p;
}

namespace {

int first_nonzero(const Exponents& e) {
  for (int i = 0; i < kMaxVars; ++i)
    if (e[i] != 0) return i;
  return -1;
}

}  // namespace

BinomialSplit split_binomial(const LaurentPoly& two_terms) {
  if (two_terms.size() != 2) throw std::invalid_argument("expected a two-term polynomial");
  auto it = two_terms.terms().begin();
  const auto& [ea, ca] = *it++;
  const auto& [eb, cb] = *it;
  Exponents m = eb - ea;
  bool a_leads = m[first_nonzero(m)] > 0;
  const Exponents& lead_e = a_leads ? ea : eb;
  const CycloRational& lead_c = a_leads ? ca : cb;
  const Exponents& other_e = a_leads ? eb : ea;
  const CycloRational& other_c = a_leads ? cb : ca;
  BinomialSplit out;
  out.unit = LaurentPoly::monomial(two_terms.ring(), lead_c, lead_e);
  out.factor = Binomial{-(other_c / lead_c), other_e - lead_e};
  return out;
}

bool divide_by_binomial(const LaurentPoly& p, const Binomial& f, LaurentPoly& quotient) {
  const Ring* ring = p.ring();
  if (p.is_zero()) {
    quotient = LaurentPoly(ring);
    return true;
  }
  const int v = first_nonzero(f.exps);
  const int step = f.exps[v];
  Exponents rest = f.exps;
  rest[v] = 0;
  // Buckets by the exponent of v, highest first; coefficients keep v at exponent zero.
  std::map<int, LaurentPoly, std::greater<int>> buckets;
  int lowest = p.terms().begin()->first[v];
  for (const auto& [e, c] : p.terms()) {
    Exponents stripped = e;
    stripped[v] = 0;
    auto& b = buckets.try_emplace(e[v], ring).first->second;
    b.add_term(stripped, c);
    lowest = std::min(lowest, e[v]);
  }
  const CycloRational scale = -f.coeff.inverse();
  const Exponents neg_rest = -rest;
  LaurentPoly q(ring);
  while (!buckets.empty()) {
    auto top = buckets.begin();
    if (top->second.is_zero()) {
      buckets.erase(top);
      continue;
    }
    const int d = top->first;
    if (d - step < lowest) return false;
    // q_k = -c^{-1} x^{-rest} * B_d sits at v-degree d - step
    LaurentPoly qk = top->second.shifted(neg_rest);
    qk *= scale;
    buckets.erase(top);
    auto& below = buckets.try_emplace(d - step, ring).first->second;
    below -= qk;
    Exponents at;
    at[v] = d - step;
    q += qk.shifted(at);
  }
  quotient = std::move(q);
  return true;
}

RationalFn::RationalFn(LaurentPoly num) : num_(std::move(num)) {}

RationalFn RationalFn::quotient(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.is_zero()) throw std::domain_error("zero denominator");
  RationalFn r(num);
  r.num_.adopt(den);
  if (den.size() == 1) {
    r.num_ = r.num_ * den.monomial_inverse();
    return r;
  }
  if (den.size() == 2) {
    BinomialSplit s = split_binomial(den);
    r.num_ = r.num_ * s.unit.monomial_inverse();
    r.mul_factor(s.factor, 1);
    r.cancel();
    return r;
  }
  throw std::domain_error("denominator is not a monomial times a binomial");
}

RationalFn RationalFn::from_parts(LaurentPoly num, FactorMap factors) {
  RationalFn r(std::move(num));
  for (const auto& [f, m] : factors) r.mul_factor(f, m);
  r.cancel();
  return r;
}

void RationalFn::mul_factor(const Binomial& f, int mult) {
  if (mult == 0 || num_.is_zero()) return;
  auto [it, inserted] = factors_.try_emplace(f, mult);
  if (!inserted) it->second += mult;
  if (it->second == 0) factors_.erase(it);
}

void RationalFn::cancel() {
  if (num_.is_zero()) {
    factors_.clear();
    return;
  }
  for (auto it = factors_.begin(); it != factors_.end();) {
    LaurentPoly quot;
    while (it->second > 0 && divide_by_binomial(num_, it->first, quot)) {
      num_ = std::move(quot);
      --it->second;
    }
    if (it->second == 0)
      it = factors_.erase(it);
    else
      ++it;
  }
}

LaurentPoly RationalFn::den() const {
  const Ring* ring = num_.ring();
  LaurentPoly d = ring ? LaurentPoly::constant(ring, 1) : LaurentPoly();
  for (const auto& [f, m] : factors_) d *= binomial_poly(ring, f).pow(m);
  if (!ring) d.add_term(Exponents{}, CycloRational(CycloField::get(1), Rational(1)));
  return d;
}

namespace {

// lcm / own, expanded.
LaurentPoly cofactor(const Ring* ring, const RationalFn::FactorMap& own, const RationalFn::FactorMap& lcm) {
  LaurentPoly c = LaurentPoly::constant(ring, 1);
  for (const auto& [f, m] : lcm) {
    auto it = own.find(f);
    int have = it == own.end() ? 0 : it->second;
    if (m > have) c *= binomial_poly(ring, f).pow(m - have);
  }
  return c;
}

RationalFn::FactorMap factor_lcm(const RationalFn::FactorMap& a, const RationalFn::FactorMap& b) {
  RationalFn::FactorMap out = a;
  for (const auto& [f, m] : b) {
    auto [it, inserted] = out.try_emplace(f, m);
    if (!inserted) it->second = std::max(it->second, m);
  }
  return out;
}

}  // namespace

RationalFn RationalFn::operator-() const {
  RationalFn r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFn& RationalFn::operator+=(const RationalFn& o) {
  num_.adopt(o.num_);
  if (o.num_.is_zero()) return *this;
  if (num_.is_zero()) return *this = o;
  if (factors_ == o.factors_) {
    num_ += o.num_;
  } else {
    const Ring* ring = num_.ring();
    FactorMap l = factor_lcm(factors_, o.factors_);
    num_ = num_ * cofactor(ring, factors_, l) + o.num_ * cofactor(ring, o.factors_, l);
    factors_ = std::move(l);
  }
  cancel();
  return *this;
}

RationalFn& RationalFn::operator-=(const RationalFn& o) { return *this += -o; }

RationalFn& RationalFn::operator*=(const RationalFn& o) {
  num_.adopt(o.num_);
  if (num_.is_zero() || o.num_.is_zero()) {
    const Ring* ring = num_.ring();
    num_ = LaurentPoly(ring);
    factors_.clear();
    return *this;
  }
  num_ = num_ * o.num_;
  for (const auto& [f, m] : o.factors_) mul_factor(f, m);
  if (!factors_.empty()) cancel();
  return *this;
}

RationalFn RationalFn::inverse() const {
  if (num_.is_zero()) throw std::domain_error("division by zero rational function");
  RationalFn r(den());
  if (num_.size() == 1) {
    r.num_ = r.num_ * num_.monomial_inverse();
    return r;
  }
  if (num_.size() == 2) {
    BinomialSplit s = split_binomial(num_);
    r.num_ = r.num_ * s.unit.monomial_inverse();
    r.mul_factor(s.factor, 1);
    r.cancel();
    return r;
  }
  throw std::domain_error("inverse needs a monomial or binomial numerator");
}

RationalFn RationalFn::pow(long long e) const {
  if (e < 0) return inverse().pow(-e);
  if (e == 0) return RationalFn(LaurentPoly::constant(num_.ring() ? num_.ring() : Ring::get(1, {}), 1));
  RationalFn r(num_.pow(e));
  for (const auto& [f, m] : factors_) r.mul_factor(f, static_cast<int>(m * e));
  r.cancel();
  return r;
}

bool RationalFn::operator==(const RationalFn& o) const {
  if (factors_ == o.factors_) return num_ == o.num_;
  if (num_.is_zero() || o.num_.is_zero()) return num_.is_zero() && o.num_.is_zero();
  const Ring* ring = num_.ring();
  FactorMap l = factor_lcm(factors_, o.factors_);
  return num_ * cofactor(ring, factors_, l) == o.num_ * cofactor(ring, o.factors_, l);
}

bool rf_equal(const RationalFn& a, const RationalFn& b) { return a == b; }

bool RationalSum::FactorMapLess::operator()(const RationalFn::FactorMap& a, const RationalFn::FactorMap& b) const {
  BinomialLess less;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), [&](const auto& x, const auto& y) {
    if (less(x.first, y.first)) return true;
    if (less(y.first, x.first)) return false;
    return x.second < y.second;
  });
}

void RationalSum::add(const RationalFn& term) {
  if (term.is_zero()) return;
  auto [it, inserted] = groups_.try_emplace(term.factors(), term.num());
  if (!inserted) it->second += term.num();
}

RationalFn RationalSum::value() const {
  RationalFn::FactorMap l;
  for (const auto& [f, num] : groups_)
    if (!num.is_zero()) l = factor_lcm(l, f);
  LaurentPoly total(ring_);
  for (const auto& [f, num] : groups_)
    if (!num.is_zero()) total += num * cofactor(ring_, f, l);
  return RationalFn::from_parts(std::move(total), l);
}

LaurentPoly substitute(const LaurentPoly& p, const Substitution& s) { return s.apply(p); }

RationalFn substitute(const RationalFn& f, const Substitution& s) {
  RationalFn out(s.apply(f.num()));
  for (const auto& [b, m] : f.factors()) {
    LaurentPoly img = s.apply(binomial_poly(f.ring(), b));
    if (img.is_zero()) throw SpecializationPole("denominator vanishes under the substitution");
    if (img.size() == 1) {
      out.num_ = out.num_ * img.monomial_inverse().pow(m);
    } else {
      BinomialSplit sp = split_binomial(img);
      out.num_ = out.num_ * sp.unit.monomial_inverse().pow(m);
      out.factors_[sp.factor] += m;
    }
  }
  if (out.num_.is_zero()) out.factors_.clear();
  out.cancel();
  return out;
}

}  // namespace cyclo_hecke
