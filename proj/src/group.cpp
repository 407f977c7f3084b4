#include "cyclo_hecke/group.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "cyclo_hecke/table_io.hpp"

namespace cyclo_hecke {

namespace {

int mod(int a, int m) { return ((a % m) + m) % m; }

GroupElement diagonal_twist(int r, int n, int exp) {
  GroupElement g = GroupElement::identity(r, n);
  g.exps[0] = mod(exp, r);
  return g;
}

GroupElement transposition(int r, int n, int i, int j) {
  GroupElement g = GroupElement::identity(r, n);
  std::swap(g.perm[i], g.perm[j]);
  return g;
}

GroupElement power(const GroupElement& g, int e) {
  GroupElement base = e >= 0 ? g : g.inverse();
  GroupElement out = GroupElement::identity(g.r, g.n());
  for (int k = 0; k < std::abs(e); ++k) out = out * base;
  return out;
}

CycloRational constant_value(const RationalFn& f) {
  if (!f.is_polynomial() || !f.num().is_constant())
    throw std::invalid_argument("specialized entry is not a constant: " + std::to_string(f.num().size()) + " terms");
  return f.num().constant_term();
}

}  // namespace

GroupElement GroupElement::identity(int r, int n) {
  GroupElement g;
  g.r = r;
  g.perm.resize(n);
  g.exps.assign(n, 0);
  for (int i = 0; i < n; ++i) g.perm[i] = i;
  return g;
}

GroupElement GroupElement::operator*(const GroupElement& o) const {
  if (r != o.r || n() != o.n()) throw std::invalid_argument("group elements of different groups");
  GroupElement out = identity(r, n());
  // (this * o) e_i = this (zeta^o.exps[i] e_{o.perm[i]})
  for (int i = 0; i < n(); ++i) {
    out.perm[i] = perm[o.perm[i]];
    out.exps[i] = mod(o.exps[i] + exps[o.perm[i]], r);
  }
  return out;
}

GroupElement GroupElement::inverse() const {
  GroupElement out = identity(r, n());
  for (int i = 0; i < n(); ++i) {
    out.perm[perm[i]] = i;
    out.exps[perm[i]] = mod(-exps[i], r);
  }
  return out;
}

std::vector<GroupElement> reflection_generators(int r, int p, int n) {
  if (r < 1 || p < 1 || r % p != 0 || n < 1) throw std::invalid_argument("need p | r and n >= 1");
  std::vector<GroupElement> gens{diagonal_twist(r, n, p)};
  if (n >= 2) {
    GroupElement s1 = transposition(r, n, 0, 1);
    s1.exps[0] = mod(-1, r);  // zeta^-1 in row 2, column 1
    s1.exps[1] = mod(1, r);   // zeta in row 1, column 2
    gens.push_back(s1);
  }
  for (int j = 2; j <= n; ++j) gens.push_back(transposition(r, n, j - 2, j - 1));
  return gens;
}

std::vector<GroupElement> generate_group(int r, int p, int n) {
  auto gens = reflection_generators(r, p, n);
  std::set<GroupElement> seen{GroupElement::identity(r, n)};
  std::vector<GroupElement> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<GroupElement> next;
    for (const auto& g : frontier)
      for (const auto& s : gens) {
        GroupElement h = g * s;
        if (seen.insert(h).second) next.push_back(h);
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

std::vector<ConjugacyClass> conjugacy_classes(const std::vector<GroupElement>& group) {
  std::set<GroupElement> assigned;
  std::vector<ConjugacyClass> out;
  for (const auto& g : group) {
    if (assigned.count(g)) continue;
    std::set<GroupElement> cls;
    for (const auto& x : group) cls.insert(x * g * x.inverse());
    assigned.insert(cls.begin(), cls.end());
    out.push_back({*cls.begin(), static_cast<int>(cls.size())});
  }
  return out;
}

GroupElement word_at_q1(const AlgebraWord& w, int r, int p, int n) {
  auto T = [&](int i) { return i == 1 ? diagonal_twist(r, n, 1) : transposition(r, n, i - 2, i - 1); };
  auto a = [&](int i) {
    if (i == 0) return power(T(1), p);
    if (i == 1) return T(1).inverse() * T(2) * T(1);
    return T(i);
  };
  GroupElement out = GroupElement::identity(r, n);
  for (const Letter& l : w.letters) {
    if (l.index < (l.kind == 'a' ? 0 : 1) || l.index > n) throw std::invalid_argument("generator index out of range");
    GroupElement g = GroupElement::identity(r, n);
    switch (l.kind) {
      case 'T':
        g = T(l.index);
        break;
      case 't':
        for (int j = l.index; j >= 2; --j) g = g * T(j);
        g = g * T(1);
        for (int j = 2; j <= l.index; ++j) g = g * T(j);
        break;
      case 'a':
        g = a(l.index);
        break;
      case 'S':
        if (l.index == 1) {
          g = a(0);
        } else {
          for (int j = l.index; j >= 3; --j) g = g * a(j);
          g = g * a(1);
          for (int j = 2; j <= l.index; ++j) g = g * a(j);
        }
        break;
      default:
        throw std::invalid_argument(std::string("unknown generator ") + l.kind);
    }
    out = out * power(g, l.exp);
  }
  return out;
}

OrthogonalityReport check_orthogonality(const CharacterTable& t) {
  OrthogonalityReport rep;
  auto fail = [&](std::string msg) {
    if (rep.ok) rep.failure = std::move(msg);
    rep.ok = false;
  };
  auto group = generate_group(t.r, t.p, t.n);
  auto classes = conjugacy_classes(group);
  rep.group_order = static_cast<int>(group.size());
  rep.classes = static_cast<int>(classes.size());
  const int d = t.r / t.p;
  long long expected = d;
  for (int i = 1; i < t.n; ++i) expected *= t.r;
  for (int i = 2; i <= t.n; ++i) expected *= i;
  if (rep.group_order != expected) fail("group order " + std::to_string(rep.group_order) + " != d r^(n-1) n!");

  std::map<GroupElement, int> class_of;
  for (int c = 0; c < rep.classes; ++c)
    for (const auto& x : group) class_of[x * classes[c].representative * x.inverse()] = c;

  // one column per class
  std::vector<int> column_for(rep.classes, -1);
  for (size_t col = 0; col < t.cols.size(); ++col) {
    GroupElement g = word_at_q1(column_word(t.cols[col]), t.r, t.p, t.n);
    auto it = class_of.find(g);
    if (it == class_of.end()) {
      fail("column " + column_name(t.cols[col]) + " does not lie in G(r,p,n)");
      continue;
    }
    int c = it->second;
    if (column_for[c] < 0) {
      column_for[c] = static_cast<int>(col);
      continue;
    }
    for (size_t row = 0; row < t.rows.size(); ++row)
      if (t.entries[row][col] != t.entries[row][column_for[c]])
        fail("columns " + column_name(t.cols[col]) + " and " + column_name(t.cols[column_for[c]]) +
             " are conjugate but differ at row " + row_name(t.rows[row]));
  }
  for (int c = 0; c < rep.classes; ++c)
    if (column_for[c] < 0) fail("no column lies in the class of size " + std::to_string(classes[c].size));
  if (static_cast<int>(t.rows.size()) != rep.classes)
    fail(std::to_string(t.rows.size()) + " rows for " + std::to_string(rep.classes) + " classes");
  if (!rep.ok) return rep;

  const CycloField& field = t.ring->field();
  std::vector<std::vector<CycloRational>> chi(t.rows.size());
  for (size_t row = 0; row < t.rows.size(); ++row)
    for (int c = 0; c < rep.classes; ++c) chi[row].push_back(constant_value(t.entries[row][column_for[c]]));
  const CycloRational order(field, Rational(rep.group_order));
  for (size_t i = 0; i < chi.size(); ++i) {
    for (size_t j = 0; j < chi.size(); ++j) {
      CycloRational sum = CycloRational::zero(field);
      for (int c = 0; c < rep.classes; ++c) sum += CycloRational(field, Rational(classes[c].size)) * chi[i][c] * chi[j][c].conj();
      if (sum != (i == j ? order : CycloRational::zero(field)))
        fail("row orthogonality fails for " + row_name(t.rows[i]) + " and " + row_name(t.rows[j]));
    }
  }
  for (int c = 0; c < rep.classes; ++c) {
    for (int e = 0; e < rep.classes; ++e) {
      CycloRational sum = CycloRational::zero(field);
      for (size_t i = 0; i < chi.size(); ++i) sum += chi[i][c] * chi[i][e].conj();
      CycloRational expect = c == e ? CycloRational(field, Rational(rep.group_order / classes[c].size)) : CycloRational::zero(field);
      if (sum != expect) fail("column orthogonality fails for classes " + std::to_string(c) + " and " + std::to_string(e));
    }
  }
  return rep;
}

}  // namespace cyclo_hecke
