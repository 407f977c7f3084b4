#include <doctest.h>

#include "cyclo_hecke/group.hpp"
#include "cyclo_hecke/shapes.hpp"
#include "cyclo_hecke/specialize.hpp"
#include "cyclo_hecke/table_io.hpp"

using namespace cyclo_hecke;

TEST_CASE("group orders and class counts") {
  struct Case {
    int r, p, n, order, classes;
  };
  // G(r,1,n) has one class per r-multipartition of n; G(2,2,2) is the Klein four-group.
  for (Case c : {Case{1, 1, 3, 6, 3}, Case{2, 1, 2, 8, 5}, Case{3, 1, 2, 18, 9}, Case{2, 2, 2, 4, 4},
                 Case{4, 2, 2, 16, 10}, Case{2, 1, 3, 48, 10}, Case{3, 3, 2, 6, 3}}) {
    CAPTURE(c.r);
    CAPTURE(c.p);
    CAPTURE(c.n);
    auto g = generate_group(c.r, c.p, c.n);
    CHECK(static_cast<int>(g.size()) == c.order);
    CHECK(static_cast<int>(conjugacy_classes(g).size()) == c.classes);
    if (c.p == 1) CHECK(static_cast<int>(multipartitions_of(c.r, c.n).size()) == c.classes);
  }
}

TEST_CASE("multiplication composes matrices") {
  auto g = generate_group(3, 1, 3);
  int checked = 0;
  for (size_t i = 0; i < g.size(); i += 7)
    for (size_t j = 0; j < g.size(); j += 11) {
      GroupElement x = g[i], y = g[j];
      // follow e_k through y then x
      GroupElement xy = x * y;
      for (int k = 0; k < 3; ++k) {
        int row = x.perm[y.perm[k]];
        int e = (y.exps[k] + x.exps[y.perm[k]]) % 3;
        CHECK(xy.perm[k] == row);
        CHECK(xy.exps[k] == e);
      }
      CHECK(x * x.inverse() == GroupElement::identity(3, 3));
      ++checked;
    }
  CHECK(checked > 0);
}

TEST_CASE("words at q = 1") {
  auto gens = reflection_generators(4, 2, 3);
  CHECK(word_at_q1(parse_word("a0"), 4, 2, 3) == gens[0]);
  // a_1 = zeta^-1 E_12 + zeta E_21 is the complex conjugate of s_1; both are involutions of the group
  GroupElement a1 = word_at_q1(parse_word("a1"), 4, 2, 3);
  GroupElement s1 = gens[1];
  for (int& e : s1.exps) e = (4 - e) % 4;
  CHECK(a1 == s1);
  CHECK(a1 * a1 == GroupElement::identity(4, 3));
  CHECK(word_at_q1(parse_word("a2"), 4, 2, 3) == gens[2]);
  CHECK(word_at_q1(parse_word("a3"), 4, 2, 3) == gens[3]);
  // t_2 = T_2 T_1 T_2 is diag(1, zeta)
  GroupElement t2 = word_at_q1(parse_word("t2"), 4, 1, 2);
  CHECK(t2.perm == std::vector<int>{0, 1});
  CHECK(t2.exps == std::vector<int>{0, 1});
  CHECK(word_at_q1(parse_word("T1^4"), 4, 1, 2) == GroupElement::identity(4, 2));
  CHECK(word_at_q1(parse_word("T2 T2^-1"), 4, 1, 2) == GroupElement::identity(4, 2));
  CHECK_THROWS_AS(word_at_q1(parse_word("T3"), 4, 1, 2), std::invalid_argument);
}

TEST_CASE("orthogonality of specialized tables") {
  struct Case {
    int r, p, n, order;
  };
  for (Case c : {Case{1, 1, 3, 6}, Case{2, 1, 2, 8}, Case{3, 1, 2, 18}, Case{2, 2, 2, 4}}) {
    CAPTURE(c.r);
    CAPTURE(c.n);
    CharacterTable t = compute_table(c.r, c.p, c.n);
    CharacterTable s = specialize_table(t, group_bindings(t));
    OrthogonalityReport rep = check_orthogonality(s);
    CHECK_MESSAGE(rep.ok, rep.failure);
    CHECK(rep.group_order == c.order);
  }
}

TEST_CASE("orthogonality detects a corrupted entry") {
  CharacterTable t = compute_table(2, 1, 2);
  CharacterTable s = specialize_table(t, group_bindings(t));
  s.entries[1][2] = s.entries[1][2] + RationalFn(LaurentPoly::constant(s.ring, 1));
  OrthogonalityReport rep = check_orthogonality(s);
  CHECK_FALSE(rep.ok);
  CHECK(rep.failure.find("orthogonality") != std::string::npos);
}
