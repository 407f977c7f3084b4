#include <doctest.h>

#include <random>

#include "cyclo_hecke/seminormal.hpp"
#include "cyclo_hecke/serialize.hpp"

using namespace cyclo_hecke;

namespace {

RationalFn rf(const Ring* ring, const std::string& text) { return parse_rational_fn(text, ring); }

}  // namespace

TEST_CASE("T_i on one-dimensional modules") {
  HeckeParams h = HeckeParams::hrn(1);
  SeminormalRep row(parse_shape("2"), h);
  REQUIRE(row.dim() == 1);
  CHECK(row.T(2)(0, 0) == RationalFn(h.q()));
  SeminormalRep col(parse_shape("1,1"), h);
  CHECK(col.T(2)(0, 0) == -RationalFn(h.q().monomial_inverse()));
}

TEST_CASE("T_2 diagonal for two single boxes") {
  HeckeParams h = HeckeParams::hrn(2);
  SeminormalRep rep(parse_shape("1|1"), h);
  REQUIRE(rep.dim() == 2);
  // basis[0] puts 1 in the first component
  CHECK(rep.basis()[0].at(1).comp == 0);
  LaurentPoly u1 = h.u(0), u2 = h.u(1);
  CHECK(rep.T(2)(0, 0) == RationalFn::quotient(h.q_diff() * u2, u2 - u1));
  CHECK(rep.T(1).is_diagonal());
  CHECK(rep.T(1)(0, 0) == RationalFn(u1));
}

TEST_CASE("traces") {
  HeckeParams h = HeckeParams::hrn(1);
  SeminormalRep rep(parse_shape("2,1"), h);
  CHECK(trace_of(rep, AlgebraWord{}) == RationalFn(LaurentPoly::constant(h.ring(), 2)));
  CHECK(trace_of(rep, parse_word("T2 T3")) == RationalFn(LaurentPoly::constant(h.ring(), -1)));
  HeckeParams h2 = HeckeParams::hrn(2);
  SeminormalRep single(parse_shape("1|-"), h2);
  CHECK(trace_of(single, parse_word("t1")) == RationalFn(h2.u(0)));
  CHECK(word_matrix(rep, AlgebraWord{}) == Matrix::identity(2, h.ring()));
}

TEST_CASE("word grammar and expansion") {
  AlgebraWord w = parse_word("T2 T3 t4^2 t5^3 T6 T7 T8 t9 T10");
  CHECK(w.letters.size() == 9);
  CHECK(w.letters[2] == Letter{'t', 4, 2});
  CHECK(to_string(w) == "T2 T3 t4^2 t5^3 T6 T7 T8 t9 T10");
  CHECK(to_string(parse_word("a0^-1 S3")) == "a0^-1 S3");
  CHECK_THROWS(parse_word("X1"));
  CHECK_THROWS(parse_word("T"));
  CHECK_THROWS(parse_word("T1^"));
  CHECK_THROWS(parse_word("T-1"));
  SeminormalRep rep(parse_shape("2,1"), HeckeParams::hrn(1));
  CHECK_THROWS_AS(word_matrix(rep, parse_word("T4")), std::invalid_argument);
  CHECK_THROWS_AS(word_matrix(rep, parse_word("T0")), std::invalid_argument);
}

TEST_CASE("quadratic relation gives the zero matrix") {
  HeckeParams h = HeckeParams::hrn(2);
  for (const auto& lam : multipartitions_of(2, 3)) {
    SeminormalRep rep(lam, h);
    const Matrix id = Matrix::identity(rep.dim(), h.ring());
    for (int i = 2; i <= 3; ++i) {
      Matrix m = (rep.T(i) - id.scaled(RationalFn(h.q()))) * (rep.T(i) + id.scaled(RationalFn(h.q().monomial_inverse())));
      CHECK(m.is_zero());
    }
  }
}

TEST_CASE("relations hold on small modules") {
  for (int r = 1; r <= 3; ++r) {
    HeckeParams h = HeckeParams::hrn(r);
    for (int n = 1; n <= 3; ++n)
      for (const auto& lam : multipartitions_of(r, n)) {
        SeminormalRep rep(lam, h);
        RelationReport rr = verify_relations(rep);
        CHECK_MESSAGE(rr.ok, to_string(lam), " ", rr.failed);
      }
  }
  for (auto [r, p] : {std::pair{2, 2}, {4, 2}, {3, 3}}) {
    HeckeParams h = HeckeParams::hrpn(r, p);
    for (int n = 1; n <= 3; ++n)
      for (const auto& lam : multipartitions_of(r, n)) {
        if (r == 4 && n == 3) continue;
        SeminormalRep rep(lam, h);
        RelationReport rr = verify_relations(rep);
        CHECK_MESSAGE(rr.ok, to_string(lam), " ", rr.failed);
      }
  }
}

TEST_CASE("corrupted generator is rejected") {
  HeckeParams h = HeckeParams::hrn(1);
  SeminormalRep rep(parse_shape("2,1"), h);
  Matrix bad = rep.T(2);
  bad(1, 0) += RationalFn(LaurentPoly::constant(h.ring(), 1));
  rep.replace_T(2, bad);
  RelationReport rr = verify_relations(rep);
  CHECK_FALSE(rr.ok);
  CHECK(rr.failed.find("T2") != std::string::npos);
}

TEST_CASE("Jucys-Murphy and S elements are diagonal") {
  HeckeParams h = HeckeParams::hrpn(4, 2);
  for (const auto& lam : multipartitions_of(4, 3)) {
    SeminormalRep rep(lam, h);
    for (int i = 1; i <= 3; ++i) {
      CHECK_NOTHROW(rep.hoefsmit_matrix(i));
      CHECK_NOTHROW(rep.s_matrix(i));
      CHECK(word_matrix(rep, parse_word("t" + std::to_string(i))) == rep.hoefsmit_matrix(i));
      CHECK(word_matrix(rep, parse_word("S" + std::to_string(i))) == rep.s_matrix(i));
    }
    // t_i commute
    CHECK(word_matrix(rep, parse_word("t1 t3")) == word_matrix(rep, parse_word("t3 t1")));
  }
}

TEST_CASE("inverse letters") {
  HeckeParams h = HeckeParams::hrpn(2, 2);
  std::mt19937 gen(7);
  for (const auto& lam : multipartitions_of(2, 3)) {
    SeminormalRep rep(lam, h);
    const Matrix id = Matrix::identity(rep.dim(), h.ring());
    const char* letters[] = {"T1", "T2", "T3", "t2", "a0", "a1", "a2", "S2", "S3"};
    for (const char* l : letters) {
      std::string s(l);
      CHECK(word_matrix(rep, parse_word(s + " " + s + "^-1")) == id);
      CHECK(word_matrix(rep, parse_word(s + "^-2 " + s + "^2")) == id);
    }
    std::uniform_int_distribution<int> pick(0, 8), ex(-2, 2);
    for (int trial = 0; trial < 5; ++trial) {
      AlgebraWord w;
      for (int k = 0; k < 3; ++k) {
        AlgebraWord one = parse_word(letters[pick(gen)]);
        one.letters[0].exp = ex(gen);
        w.append(one);
      }
      Matrix prod = id;
      for (const auto& l : w.letters) {
        AlgebraWord single;
        single.letters.push_back(l);
        prod = prod * word_matrix(rep, single);
      }
      CHECK(word_matrix(rep, w) == prod);
    }
  }
}

TEST_CASE("twisted bitrace on two single boxes") {
  HeckeParams h = HeckeParams::hrpn(2, 2);
  SeminormalRep rep(parse_shape("1|1"), h);
  CHECK(twisted_bitrace(rep, parse_word("a2"), 1) == rf(h.ring(), "(1)*y0^0*q^1 + (1)*y0^0*q^-1"));
  CHECK(twisted_bitrace(rep, AlgebraWord{}, 1).is_zero());
  CHECK(twisted_bitrace(rep, AlgebraWord{}, 0) == RationalFn(LaurentPoly::constant(h.ring(), 2)));
  CHECK_THROWS_AS(twisted_bitrace(rep, AlgebraWord{}, 2), std::invalid_argument);
  SeminormalRep lone(parse_shape("2|-"), h);
  CHECK_THROWS_AS(twisted_bitrace(lone, AlgebraWord{}, 1), std::invalid_argument);
}
