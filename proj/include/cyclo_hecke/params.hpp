#pragma once

#include <vector>

#include "cyclo_hecke/rational_fn.hpp"
#include "cyclo_hecke/shapes.hpp"

namespace cyclo_hecke {

enum class Mode { hrn, hrpn };

// Parameters attached to the components of a multipartition. A box in component c at (i, j)
// has content u(c) * Q^(2(j-i)), where Q is q itself or a power of it.
class HeckeParams {
 public:
  // Variables u1..ur, q (just q when r = 1, with u1 = 1).
  static HeckeParams hrn(int r);
  // Variables y0..y(d-1), q with r = d*p; component k*p + l has parameter eps^l * y_k, eps = zeta_r^d.
  static HeckeParams hrpn(int r, int p);
  // Parameters of the quotient algebra: Q -> Q^gamma, r/gamma components (k, tau) carrying the
  // gamma-th power of the parameter of component (k, tau).
  HeckeParams bar(int gamma) const;

  Mode mode() const { return mode_; }
  int r() const { return static_cast<int>(u_.size()); }
  int p() const { return p_; }
  int d() const { return r() / p_; }
  const Ring* ring() const { return ring_; }
  const LaurentPoly& q() const { return q_; }
  const LaurentPoly& u(int comp) const { return u_.at(comp); }
  LaurentPoly content(const Box& b) const;
  // Q - Q^-1
  const LaurentPoly& q_diff() const { return q_diff_; }
  // epsilon = zeta_r^d as a constant of the ring
  CycloRational epsilon() const;

 private:
  HeckeParams(Mode mode, const Ring* ring, int p, LaurentPoly q, std::vector<LaurentPoly> u);

  Mode mode_;
  const Ring* ring_;
  int p_;
  LaurentPoly q_;
  LaurentPoly q_diff_;
  std::vector<LaurentPoly> u_;
};

}  // namespace cyclo_hecke
