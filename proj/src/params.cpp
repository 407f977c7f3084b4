#include "cyclo_hecke/params.hpp"

#include <string>

namespace cyclo_hecke {

HeckeParams::HeckeParams(Mode mode, const Ring* ring, int p, LaurentPoly q, std::vector<LaurentPoly> u)
    : mode_(mode), ring_(ring), p_(p), q_(std::move(q)), u_(std::move(u)) {
  q_diff_ = q_ - q_.monomial_inverse();
}

HeckeParams HeckeParams::hrn(int r) {
  if (r < 1) throw std::invalid_argument("r must be positive");
  std::vector<std::string> vars;
  if (r > 1)
    for (int i = 1; i <= r; ++i) vars.push_back("u" + std::to_string(i));
  vars.push_back("q");
  const Ring* ring = Ring::get(r, vars);
  std::vector<LaurentPoly> u;
  for (int i = 1; i <= r; ++i)
    u.push_back(r > 1 ? LaurentPoly::variable(ring, "u" + std::to_string(i)) : LaurentPoly::constant(ring, 1));
  return HeckeParams(Mode::hrn, ring, 1, LaurentPoly::variable(ring, "q"), u);
}

HeckeParams HeckeParams::hrpn(int r, int p) {
  if (r < 1 || p < 1 || r % p != 0) throw std::invalid_argument("p must divide r");
  const int d = r / p;
  std::vector<std::string> vars;
  for (int k = 0; k < d; ++k) vars.push_back("y" + std::to_string(k));
  vars.push_back("q");
  const Ring* ring = Ring::get(r, vars);
  std::vector<LaurentPoly> u;
  for (int k = 0; k < d; ++k)
    for (int l = 0; l < p; ++l) u.push_back(LaurentPoly::variable(ring, "y" + std::to_string(k)) * root_of_unity(r, d * l));
  return HeckeParams(Mode::hrpn, ring, p, LaurentPoly::variable(ring, "q"), u);
}

HeckeParams HeckeParams::bar(int gamma) const {
  if (gamma < 1 || p_ % gamma != 0) throw std::invalid_argument("gamma must divide p");
  const int pbar = p_ / gamma;
  std::vector<LaurentPoly> u;
  for (int k = 0; k < d(); ++k)
    for (int tau = 0; tau < pbar; ++tau) u.push_back(u_[k * p_ + tau].pow(gamma));
  return HeckeParams(mode_, ring_, pbar, q_.pow(gamma), u);
}

LaurentPoly HeckeParams::content(const Box& b) const { return u_.at(b.comp) * q_.pow(2 * (b.col - b.row)); }

CycloRational HeckeParams::epsilon() const { return root_of_unity(ring_->order(), d()); }

}  // namespace cyclo_hecke
