#pragma once

#include <string>

#include "cyclo_hecke/rational_fn.hpp"

namespace cyclo_hecke {

// Coefficient as a polynomial in the session root of unity z, ascending powers: `1 + -z^1`.
std::string to_string(const CycloRational& c);
// Terms in descending graded-lex order: `(1)*q^2 + (-1)*q^-2`; zero is `0`.
std::string to_string(const LaurentPoly& p);
// A polynomial value prints as above; otherwise `{num} / {factor}^m * {factor}^m`.
std::string to_string(const RationalFn& f);

CycloRational parse_cyclo(const std::string& text, const CycloField& field);
LaurentPoly parse_laurent(const std::string& text, const Ring* ring);
RationalFn parse_rational_fn(const std::string& text, const Ring* ring);

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace cyclo_hecke
