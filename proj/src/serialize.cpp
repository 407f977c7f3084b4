#include "cyclo_hecke/serialize.hpp"

#include <cctype>
#include <vector>

namespace cyclo_hecke {

namespace {

std::string rational_text(const Rational& r) { return r.get_str(); }

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw ParseError("empty rational");
  for (char ch : text)
    if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '-' || ch == '/'))
      throw ParseError("bad rational '" + text + "'");
  Rational r;
  if (r.set_str(text, 10) != 0) throw ParseError("bad rational '" + text + "'");
  if (r.get_den() == 0) throw ParseError("zero denominator in '" + text + "'");
  r.canonicalize();
  return r;
}

long parse_int(const std::string& text) {
  size_t used = 0;
  long v = 0;
  try {
    v = std::stol(text, &used);
  } catch (const std::exception&) {
    throw ParseError("bad integer '" + text + "'");
  }
  if (used != text.size()) throw ParseError("bad integer '" + text + "'");
  return v;
}

// Splits on `sep` wherever no bracket is open.
std::vector<std::string> split_top(const std::string& text, const std::string& sep) {
  std::vector<std::string> out;
  int depth = 0;
  size_t start = 0;
  for (size_t i = 0; i < text.size(); ++i) {
    char ch = text[i];
    if (ch == '(' || ch == '{') ++depth;
    if (ch == ')' || ch == '}') --depth;
    if (depth == 0 && text.compare(i, sep.size(), sep) == 0) {
      out.push_back(text.substr(start, i - start));
      i += sep.size() - 1;
      start = i + 1;
    }
  }
  out.push_back(text.substr(start));
  return out;
}

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(' ');
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(' ');
  return s.substr(a, b - a + 1);
}

}  // namespace

std::string to_string(const CycloRational& c) {
  std::string out;
  const auto& co = c.coeffs();
  for (size_t i = 0; i < co.size(); ++i) {
    if (sgn(co[i]) == 0) continue;
    if (!out.empty()) out += " + ";
    if (i == 0) {
      out += rational_text(co[i]);
    } else if (co[i] == 1) {
      out += "z^" + std::to_string(i);
    } else if (co[i] == -1) {
      out += "-z^" + std::to_string(i);
    } else {
      out += rational_text(co[i]) + "*z^" + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

std::string to_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  const int nv = p.ring() ? p.ring()->nvars() : 0;
  for (const auto& [e, c] : p.terms()) {
    if (!out.empty()) out += " + ";
    out += "(" + to_string(c) + ")";
    if (e.is_zero()) continue;
    for (int i = 0; i < nv; ++i) out += "*" + p.ring()->vars()[i] + "^" + std::to_string(e[i]);
  }
  return out;
}

std::string to_string(const RationalFn& f) {
  if (f.is_polynomial()) return to_string(f.num());
  std::string out = "{" + to_string(f.num()) + "} /";
  bool first = true;
  for (const auto& [b, m] : f.factors()) {
    out += first ? " " : " * ";
    first = false;
    out += "{" + to_string(binomial_poly(f.ring(), b)) + "}^" + std::to_string(m);
  }
  return out;
}

CycloRational parse_cyclo(const std::string& text, const CycloField& field) {
  std::string t = trim(text);
  if (t == "0") return CycloRational::zero(field);
  std::vector<Rational> co(field.degree(), Rational(0));
  for (const std::string& raw : split_top(t, " + ")) {
    std::string piece = trim(raw);
    size_t z = piece.find("z^");
    Rational value(1);
    long power = 0;
    if (z == std::string::npos) {
      value = parse_rational(piece);
    } else {
      power = parse_int(piece.substr(z + 2));
      std::string head = piece.substr(0, z);
      if (head == "-") {
        value = -1;
      } else if (!head.empty()) {
        if (head.back() != '*') throw ParseError("bad coefficient '" + piece + "'");
        value = parse_rational(head.substr(0, head.size() - 1));
      }
    }
    if (power < 0 || power >= field.order()) throw ParseError("power of z out of range in '" + piece + "'");
    const auto& red = field.power(static_cast<int>(power));
    for (int i = 0; i < field.degree(); ++i) co[i] += value * red[i];
  }
  return CycloRational(field, std::move(co));
}

LaurentPoly parse_laurent(const std::string& text, const Ring* ring) {
  std::string t = trim(text);
  LaurentPoly p(ring);
  if (t == "0") return p;
  for (const std::string& raw : split_top(t, " + ")) {
    std::string term = trim(raw);
    if (term.empty() || term[0] != '(') throw ParseError("term must start with '(': '" + term + "'");
    size_t close = term.find(')');
    if (close == std::string::npos) throw ParseError("unbalanced term '" + term + "'");
    CycloRational c = parse_cyclo(term.substr(1, close - 1), ring->field());
    Exponents e;
    std::string rest = term.substr(close + 1);
    size_t pos = 0;
    while (pos < rest.size()) {
      if (rest[pos] != '*') throw ParseError("expected '*' in '" + term + "'");
      size_t caret = rest.find('^', pos);
      if (caret == std::string::npos) throw ParseError("expected '^' in '" + term + "'");
      size_t next = rest.find('*', caret);
      if (next == std::string::npos) next = rest.size();
      std::string name = rest.substr(pos + 1, caret - pos - 1);
      int idx = ring->index_of(name);
      if (idx < 0) throw ParseError("unknown variable '" + name + "'");
      e[idx] += static_cast<int32_t>(parse_int(rest.substr(caret + 1, next - caret - 1)));
      pos = next;
    }
    p.add_term(e, c);
  }
  return p;
}

RationalFn parse_rational_fn(const std::string& text, const Ring* ring) {
  std::string t = trim(text);
  if (t.empty() || t[0] != '{') return RationalFn(parse_laurent(t, ring));
  auto halves = split_top(t, " / ");
  if (halves.size() != 2) throw ParseError("expected one ' / ' in '" + t + "'");
  auto unbrace = [&](const std::string& s) {
    std::string u = trim(s);
    if (u.size() < 2 || u.front() != '{' || u.back() != '}') throw ParseError("expected braces in '" + u + "'");
    return u.substr(1, u.size() - 2);
  };
  RationalFn value(parse_laurent(unbrace(halves[0]), ring));
  for (const std::string& raw : split_top(halves[1], " * ")) {
    std::string f = trim(raw);
    size_t caret = f.rfind("}^");
    if (caret == std::string::npos) throw ParseError("expected '}^' in '" + f + "'");
    LaurentPoly base = parse_laurent(unbrace(f.substr(0, caret + 1)), ring);
    long mult = parse_int(f.substr(caret + 2));
    value *= RationalFn::quotient(LaurentPoly::constant(ring, 1), base).pow(mult);
  }
  return value;
}

}  // namespace cyclo_hecke
