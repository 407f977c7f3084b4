#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "cyclo_hecke/laurent.hpp"

namespace cyclo_hecke {

class SpecializationPole : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// The factor 1 - coeff * x^exps, with exps nonzero and its first nonzero entry positive.
struct Binomial {
  CycloRational coeff;
  Exponents exps;
  bool operator==(const Binomial& o) const { return exps == o.exps && coeff == o.coeff; }
};

struct BinomialLess {
  bool operator()(const Binomial& a, const Binomial& b) const;
};

// num / prod(factor^mult). Factors that divide the numerator exactly are cancelled after every
// operation, so a value that is a Laurent polynomial always ends up with no factors.
class RationalFn {
 public:
  using FactorMap = std::map<Binomial, int, BinomialLess>;

  RationalFn() = default;
  RationalFn(LaurentPoly num);  // NOLINT(google-explicit-constructor)
  // den must be a monomial or a binomial (the only denominators this library produces).
  static RationalFn quotient(const LaurentPoly& num, const LaurentPoly& den);
  static RationalFn from_parts(LaurentPoly num, FactorMap factors);

  const Ring* ring() const { return num_.ring(); }
  const LaurentPoly& num() const { return num_; }
  const FactorMap& factors() const { return factors_; }
  LaurentPoly den() const;  // expanded denominator
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return factors_.empty(); }

  RationalFn operator-() const;
  RationalFn& operator+=(const RationalFn& o);
  RationalFn& operator-=(const RationalFn& o);
  RationalFn& operator*=(const RationalFn& o);
  RationalFn& operator/=(const RationalFn& o) { return *this *= o.inverse(); }
  friend RationalFn operator+(RationalFn a, const RationalFn& b) { return a += b; }
  friend RationalFn operator-(RationalFn a, const RationalFn& b) { return a -= b; }
  friend RationalFn operator*(RationalFn a, const RationalFn& b) { return a *= b; }
  friend RationalFn operator/(RationalFn a, const RationalFn& b) { return a /= b; }

  // Supported when the numerator is a monomial or a binomial.
  RationalFn inverse() const;
  RationalFn pow(long long e) const;

  // Cross-multiplication equality: a.num * b.den == b.num * a.den.
  bool operator==(const RationalFn& o) const;
  bool operator!=(const RationalFn& o) const { return !(*this == o); }

 private:
  friend RationalFn substitute(const RationalFn& f, const Substitution& s);
  void mul_factor(const Binomial& f, int mult);
  void cancel();

  LaurentPoly num_;
  FactorMap factors_;
};

// Accumulates terms grouped by denominator and cancels once, in value().
class RationalSum {
 public:
  explicit RationalSum(const Ring* ring) : ring_(ring) {}
  void add(const RationalFn& term);
  RationalFn value() const;

 private:
  struct FactorMapLess {
    bool operator()(const RationalFn::FactorMap& a, const RationalFn::FactorMap& b) const;
  };
  const Ring* ring_;
  std::map<RationalFn::FactorMap, LaurentPoly, FactorMapLess> groups_;
};

bool rf_equal(const RationalFn& a, const RationalFn& b);
RationalFn substitute(const RationalFn& f, const Substitution& s);

LaurentPoly binomial_poly(const Ring* ring, const Binomial& f);

// Writes a two-term polynomial as unit * (1 - c x^M) in canonical form.
struct BinomialSplit {
  LaurentPoly unit;  // monomial
  Binomial factor;
};
BinomialSplit split_binomial(const LaurentPoly& two_terms);

// Exact division by a binomial factor; returns false (and leaves quotient untouched) if it does not divide.
bool divide_by_binomial(const LaurentPoly& p, const Binomial& f, LaurentPoly& quotient);

LaurentPoly substitute(const LaurentPoly& p, const Substitution& s);

}  // namespace cyclo_hecke
