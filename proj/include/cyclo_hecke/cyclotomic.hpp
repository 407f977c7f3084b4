#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace cyclo_hecke {

using Rational = mpq_class;

// Q(zeta_N) in the power basis 1, zeta, ..., zeta^(phi(N)-1).
class CycloField {
 public:
  static const CycloField& get(int order);

  int order() const { return order_; }
  int degree() const { return degree_; }
  // Integer coefficients of the N-th cyclotomic polynomial, constant term first.
  const std::vector<long>& minimal_polynomial() const { return phi_; }
  // zeta^k reduced to the power basis, for 0 <= k < reduction_count().
  const std::vector<long>& power(int k) const { return powers_[k]; }
  int reduction_count() const { return static_cast<int>(powers_.size()); }

 private:
  explicit CycloField(int order);

  int order_;
  int degree_;
  std::vector<long> phi_;
  std::vector<std::vector<long>> powers_;
};

std::vector<long> cyclotomic_polynomial(int order);

class CycloRational {
 public:
  CycloRational();  // zero in Q
  CycloRational(const CycloField& field, const Rational& value);
  CycloRational(const CycloField& field, std::vector<Rational> coeffs);

  static CycloRational zero(const CycloField& field) { return {field, Rational(0)}; }
  static CycloRational one(const CycloField& field) { return {field, Rational(1)}; }

  const CycloField& field() const { return *field_; }
  int order() const { return field_->order(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;

  CycloRational operator-() const;
  CycloRational& operator+=(const CycloRational& o);
  CycloRational& operator-=(const CycloRational& o);
  CycloRational& operator*=(const CycloRational& o);
  CycloRational& operator/=(const CycloRational& o) { return *this *= o.inverse(); }

  friend CycloRational operator+(CycloRational a, const CycloRational& b) { return a += b; }
  friend CycloRational operator-(CycloRational a, const CycloRational& b) { return a -= b; }
  friend CycloRational operator*(CycloRational a, const CycloRational& b) { return a *= b; }
  friend CycloRational operator/(CycloRational a, const CycloRational& b) { return a /= b; }

  CycloRational inverse() const;
  CycloRational pow(long long e) const;
  // Field automorphism zeta -> zeta^-1 (complex conjugation).
  CycloRational conj() const;
  // Image under zeta -> zeta^k for gcd(k, N) = 1.
  CycloRational galois(int k) const;

  bool operator==(const CycloRational& o) const;
  bool operator!=(const CycloRational& o) const { return !(*this == o); }
  // Total order on representations; used only for canonical container ordering.
  int compare(const CycloRational& o) const;

 private:
  void check_same_field(const CycloRational& o) const;

  const CycloField* field_;
  std::vector<Rational> coeffs_;
};

CycloRational root_of_unity(int order, long long k);

}  // namespace cyclo_hecke
