#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cyclo_hecke/cyclotomic.hpp"

namespace cyclo_hecke {

constexpr int kMaxVars = 12;

// Variable list plus cyclotomic order. Rings are interned: equal rings share one address.
class Ring {
 public:
  static const Ring* get(int order, const std::vector<std::string>& vars);

  int order() const { return order_; }
  const CycloField& field() const { return *field_; }
  const std::vector<std::string>& vars() const { return vars_; }
  int nvars() const { return static_cast<int>(vars_.size()); }
  int index_of(const std::string& name) const;  // -1 if absent

 private:
  Ring(int order, std::vector<std::string> vars);
  int order_;
  const CycloField* field_;
  std::vector<std::string> vars_;
};

struct Exponents {
  std::array<int32_t, kMaxVars> e{};

  int32_t& operator[](int i) { return e[i]; }
  int32_t operator[](int i) const { return e[i]; }
  bool is_zero() const;
  long long degree() const;
  Exponents operator+(const Exponents& o) const;
  Exponents operator-(const Exponents& o) const;
  Exponents operator-() const;
  Exponents scaled(int k) const;
  bool operator==(const Exponents& o) const { return e == o.e; }
  bool operator!=(const Exponents& o) const { return e != o.e; }
};

// Descending graded-lex: larger total degree first, ties broken lexicographically (larger first).
struct GrlexDesc {
  bool operator()(const Exponents& a, const Exponents& b) const {
    int32_t da = 0, db = 0;
    for (int i = 0; i < kMaxVars; ++i) {
      da += a.e[i];
      db += b.e[i];
    }
    if (da != db) return da > db;
    for (int i = 0; i < kMaxVars; ++i)
      if (a.e[i] != b.e[i]) return a.e[i] > b.e[i];
    return false;
  }
};

class LaurentPoly {
 public:
  using TermMap = std::map<Exponents, CycloRational, GrlexDesc>;

  LaurentPoly() = default;  // zero over no ring; adopts the ring of the other operand
  explicit LaurentPoly(const Ring* ring) : ring_(ring) {}

  static LaurentPoly constant(const Ring* ring, const CycloRational& c);
  static LaurentPoly constant(const Ring* ring, long long c);
  static LaurentPoly monomial(const Ring* ring, const CycloRational& c, const Exponents& exps);
  static LaurentPoly variable(const Ring* ring, const std::string& name, int power = 1);

  const Ring* ring() const { return ring_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_constant() const;
  // Coefficient of the exponent-free term (zero if absent).
  CycloRational constant_term() const;
  const CycloField& field() const;

  void add_term(const Exponents& exps, const CycloRational& c);

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly& operator*=(const CycloRational& c);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const CycloRational& c) { return a *= c; }

  LaurentPoly shifted(const Exponents& by) const;  // multiply by a bare monomial
  // Non-negative powers for any polynomial; negative powers only for monomials.
  LaurentPoly pow(long long e) const;
  LaurentPoly monomial_inverse() const;

  bool operator==(const LaurentPoly& o) const;
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

 private:
  friend class RationalFn;
  const Ring* adopt(const LaurentPoly& o);

  const Ring* ring_ = nullptr;
  TermMap terms_;
};

// Maps each source variable to a monomial of the target ring.
class Substitution {
 public:
  // Identity on every variable of `source` (by name into `target`) until overridden.
  Substitution(const Ring* source, const Ring* target);
  static Substitution same_ring(const Ring* ring) { return Substitution(ring, ring); }

  Substitution& bind(const std::string& var, const LaurentPoly& value);
  Substitution& bind(const std::string& var, const CycloRational& value);

  const Ring* source() const { return source_; }
  const Ring* target() const { return target_; }
  const LaurentPoly& image(int var) const { return images_[var]; }

  LaurentPoly apply(const LaurentPoly& p) const;

 private:
  const Ring* source_;
  const Ring* target_;
  std::vector<LaurentPoly> images_;
  std::vector<bool> defined_;
};

// Complete homogeneous h_m (h_0 = 1, h_m = 0 for m < 0) and elementary e_t of the given values.
LaurentPoly complete_homogeneous(const std::vector<LaurentPoly>& xs, int m, const Ring* ring);
LaurentPoly elementary(const std::vector<LaurentPoly>& xs, int t, const Ring* ring);

}  // namespace cyclo_hecke
