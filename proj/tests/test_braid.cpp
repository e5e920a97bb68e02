#include "cartanqt/braid.hpp"
#include "generators.hpp"

#include <doctest.h>

#include <set>
#include <stdexcept>

using namespace cartanqt;

namespace {

BiLaurent P(const char* s) { return poly::parse(s); }

DeformedCartan cqt(const char* name) { return build_cqt(build(FiniteType::parse(name))); }

WeightVector scaled(const WeightVector& w, const BiLaurent& c) {
  WeightVector out = w;
  for (auto& x : out) x *= c;
  return out;
}

}  // namespace

TEST_CASE("single generators") {
  for (const auto& t : all_types(8)) {
    DeformedCartan dc = build_cqt(build(t));
    for (int i = 0; i < dc.cd.n; ++i) {
      WeightVector a = root_vector(dc.cd, i);
      CHECK(apply_T(dc, i, 1, a) == scaled(a, BiLaurent::monomial(-1, -2 * dc.cd.d[i], 2)));
      CHECK(apply_T(dc, i, -1, a) == scaled(a, BiLaurent::monomial(-1, 2 * dc.cd.d[i], -2)));
    }
  }
  DeformedCartan c2 = cqt("C2");
  WeightVector a1 = root_vector(c2.cd, 0), a2 = root_vector(c2.cd, 1);
  WeightVector expect = a2;
  expect[0] += P("q^-1*t") * P("q + q^-1");
  CHECK(apply_T(c2, 0, 1, a2) == expect);
  CHECK(pair_fund(a1, 0) == BiLaurent(1));
  CHECK(pair_fund(a2, 0).is_zero());
  CHECK(pair_fund(apply_T(c2, 0, 1, a2), 1) == BiLaurent(1));
  CHECK_THROWS_AS(apply_T(c2, 0, 2, a2), std::invalid_argument);
}

TEST_CASE("T_i and its inverse on random vectors") {
  gen::Source src(31);
  for (const char* name : {"A3", "B4", "C3", "D5", "E6", "F4", "G2"}) {
    DeformedCartan dc = cqt(name);
    for (int trial = 0; trial < 20; ++trial) {
      WeightVector v = src.weight(dc.cd.n);
      int i = src.range(0, dc.cd.n - 1);
      CHECK(apply_T(dc, i, -1, apply_T(dc, i, 1, v)) == v);
      CHECK(apply_T(dc, i, 1, apply_T(dc, i, -1, v)) == v);
    }
  }
}

TEST_CASE("T_i is self-adjoint for the deformed pairing") {
  gen::Source src(32);
  for (const char* name : {"A2", "B3", "C4", "D4", "F4", "G2"}) {
    DeformedCartan dc = cqt(name);
    for (int trial = 0; trial < 20; ++trial) {
      WeightVector x = src.weight(dc.cd.n), y = src.weight(dc.cd.n);
      int i = src.range(0, dc.cd.n - 1);
      for (int sign : {1, -1}) CHECK(pairing(dc, apply_T(dc, i, sign, x), y) == pairing(dc, x, apply_T(dc, i, sign, y)));
    }
    CHECK(check_eqpair(dc).ok());
  }
}

TEST_CASE("longest element acts as a scalar times the star twist") {
  DeformedCartan a1 = cqt("A1");
  CHECK(apply_T_word(a1, {0}, 1, root_vector(a1.cd, 0)) == WeightVector{P("-q^-2*t^2")});

  DeformedCartan c2 = cqt("C2");
  for (int j = 0; j < 2; ++j)
    CHECK(apply_T_word(c2, longest_word(c2.cd), 1, root_vector(c2.cd, j)) ==
          scaled(root_vector(c2.cd, j), P("-q^-6*t^4")));
  DeformedCartan g2 = cqt("G2");
  for (int j = 0; j < 2; ++j)
    CHECK(apply_T_word(g2, longest_word(g2.cd), 1, root_vector(g2.cd, j)) ==
          scaled(root_vector(g2.cd, j), P("-q^-12*t^6")));
  DeformedCartan a3 = cqt("A3");
  CHECK(apply_T_word(a3, longest_word(a3.cd), 1, root_vector(a3.cd, 0)) ==
        scaled(root_vector(a3.cd, 2), P("-q^-4*t^4")));

  for (const auto& t : all_types(8)) {
    CAPTURE(t.name());
    DeformedCartan dc = build_cqt(build(t));
    auto words = tw0_words(dc.cd);
    CHECK(words.size() == (dc.cd.n == 1 ? 1u : 2u));
    CHECK(std::set<Word>(words.begin(), words.end()).size() == words.size());
    CHECK(verify_tw0(dc).ok());
  }
  CHECK_THROWS_AS(verify_tw0(c2, {0, 1, 0}), std::invalid_argument);
}

TEST_CASE("braid relations, orientation and quadrants") {
  for (const auto& t : all_types(8)) {
    CAPTURE(t.name());
    DeformedCartan dc = build_cqt(build(t));
    CHECK(check_braid_relations(dc).ok());
    for (const auto& w : tw0_words(dc.cd)) {
      CHECK(check_orientation(dc, w).ok());
      CHECK(check_quadrant(dc, w).ok());
    }
  }
}

TEST_CASE("Ibar dimensions from the braid action") {
  DeformedCartan a1 = cqt("A1");
  CHECK(ibar_dim_braid(a1, {0}, 0, 0) == BiLaurent(1));
  auto filt = projective_filtration(a1, {0}, 0);
  REQUIRE(filt.size() == 1);
  CHECK(filt[0].first == 0);
  CHECK(filt[0].second == BiLaurent(1));

  DeformedCartan c2 = cqt("C2");
  auto words = tw0_words(c2.cd);
  CHECK(poly::spec_t1(ibar_dim_braid(c2, words[0], 0, 0)) == P("1 + q^4"));
  for (const auto& t : all_types(8)) {
    CAPTURE(t.name());
    DeformedCartan dc = build_cqt(build(t));
    auto ws = tw0_words(dc.cd);
    PolyMatrix first = ibar_dim_braid_matrix(dc, ws.front());
    CHECK(ibar_dim_braid_matrix(dc, ws.back()) == first);
    CHECK(check_dim_bounds(dc, first).ok());
    for (int i = 0; i < dc.cd.n; ++i) {
      std::vector<BiLaurent> grouped(dc.cd.n);
      for (const auto& [letter, mult] : projective_filtration(dc, ws.front(), i)) {
        CHECK(mult.nonnegative());
        grouped[letter] += mult;
      }
      for (int j = 0; j < dc.cd.n; ++j) CHECK(poly::bar(grouped[j]) == first[i][j]);
    }
  }
}

TEST_CASE("braid pipeline reproduces the series inverse") {
  DeformedCartan a1 = cqt("A1");
  CHECK(ctilde_braid(a1, {0}, 0, 0, 7) == P("q*t^-1 - q^3*t^-3 + q^5*t^-5 - q^7*t^-7"));
  for (const auto& t : all_types(8)) {
    CAPTURE(t.name());
    DeformedCartan dc = build_cqt(build(t));
    const int order = default_order(dc.cd);
    CTildeTable direct = invert(dc, order);
    for (const auto& w : tw0_words(dc.cd)) CHECK(ctilde_braid_table(dc, w, order) == direct);
    for (int i = 0; i < dc.cd.n; ++i) CHECK(ctilde_braid(dc, tw0_words(dc.cd).front(), i, i, order).coeff(dc.cd.d[i], -1) == 1);
  }
}
