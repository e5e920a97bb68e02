#include "cartanqt/cartan.hpp"
#include "cartanqt/weyl.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace cartanqt;

TEST_CASE("C2 and its symmetrizer") {
  CartanData cd = build(FiniteType::parse("C2"));
  CHECK(cd.c == std::vector<std::vector<int>>{{2, -2}, {-1, 2}});
  CHECK(cd.d == std::vector<int>{1, 2});
  CHECK(cd.r == 2);
  CHECK(cd.h == 4);
  CHECK(cd.hv == 3);
}

TEST_CASE("table constants") {
  CartanData g2 = build(FiniteType::parse("G", 0));
  CHECK(g2.d == std::vector<int>{3, 1});
  CHECK(g2.r == 3);
  CHECK(g2.h == 6);
  CHECK(g2.hv == 4);

  CartanData b3 = build(FiniteType::parse("B", 3));
  CHECK(b3.d == std::vector<int>{2, 2, 1});
  CHECK(b3.r == 2);
  CHECK(b3.h == 6);
  CHECK(b3.hv == 5);

  CartanData f4 = build(FiniteType::parse("F4"));
  CHECK(f4.d == std::vector<int>{2, 2, 1, 1});
  CHECK(f4.h == 12);
  CHECK(f4.hv == 9);

  CHECK(build(FiniteType::parse("E8")).h == 30);
  CHECK(build(FiniteType::parse("D6")).hv == 10);
  CHECK(build(FiniteType::parse("C5")).hv == 6);
}

TEST_CASE("neighbours") {
  CHECK(neighbors(build(FiniteType::parse("A3")), 1) == std::vector<int>{0, 2});
  CHECK(neighbors(build(FiniteType::parse("G2")), 0) == std::vector<int>{1});
  CartanData d4 = build(FiniteType::parse("D4"));
  CHECK(neighbors(d4, 1).size() == 3);
  for (int tip : {0, 2, 3}) CHECK(neighbors(d4, tip) == std::vector<int>{1});
  CartanData e6 = build(FiniteType::parse("E6"));
  CHECK(neighbors(e6, 5) == std::vector<int>{2});
  CHECK(neighbors(build(FiniteType::parse("E8")), 7) == std::vector<int>{4});
  CHECK_THROWS_AS(neighbors(d4, 4), std::out_of_range);
  CHECK_THROWS_AS(neighbors(d4, -1), std::out_of_range);
}

TEST_CASE("every admissible type passes the audit") {
  const auto types = all_types(8);
  CHECK(types.size() == 32);
  for (const auto& t : types) {
    CAPTURE(t.name());
    CartanData cd = build(t);
    CHECK(audit(cd).empty());
    // h against the number of positive roots.
    CHECK(positive_roots(cd).size() * 2 == static_cast<std::size_t>(cd.n * cd.h));
    for (int i = 0; i < cd.n; ++i) {
      CHECK(cd.r % cd.d[i] == 0);
      CHECK(cd.c[i][i] == 2);
      for (int j = 0; j < cd.n; ++j) CHECK(cd.d[i] * cd.c[i][j] == cd.d[j] * cd.c[j][i]);
    }
  }
}

TEST_CASE("type parsing") {
  CHECK(FiniteType::parse("c3") == FiniteType{Family::C, 3});
  CHECK(FiniteType::parse("C", 3) == FiniteType{Family::C, 3});
  CHECK(FiniteType::parse("F").rank == 4);
  CHECK(FiniteType::parse("E7").name() == "E7");
  CHECK_THROWS_AS(FiniteType::parse("X9"), std::invalid_argument);
  CHECK_THROWS_AS(FiniteType::parse("A"), std::invalid_argument);
  CHECK_THROWS_AS(FiniteType::parse("B1"), std::invalid_argument);
  CHECK_THROWS_AS(FiniteType::parse("D3"), std::invalid_argument);
  CHECK_THROWS_AS(FiniteType::parse("E9"), std::invalid_argument);
  CHECK_THROWS_AS(FiniteType::parse("G3"), std::invalid_argument);
  CHECK_THROWS_AS(FiniteType::parse("C3", 4), std::invalid_argument);
  CHECK_THROWS_AS(FiniteType::parse("A2x"), std::invalid_argument);
  CHECK_THROWS_AS(build(FiniteType{Family::E, 5}), std::invalid_argument);
}
