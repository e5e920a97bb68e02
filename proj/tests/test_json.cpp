#include "cartanqt/json_io.hpp"
#include "generators.hpp"

#include <doctest.h>

#include <stdexcept>
#include <tuple>

using namespace cartanqt;
using json_io::Json;

namespace {

CTildeTable table(const char* name, int order) { return invert(build_cqt(build(FiniteType::parse(name))), order); }

}  // namespace

TEST_CASE("integers beyond 64 bits are strings") {
  CHECK(json_io::integer_to_json(Integer(-5)) == Json(-5));
  Integer big = Integer(1) << 100;
  Json j = json_io::integer_to_json(big);
  CHECK(j.is_string());
  CHECK(json_io::integer_from_json(j) == big);
  CHECK(json_io::integer_from_json(Json(7)) == 7);
  CHECK_THROWS_AS(json_io::integer_from_json(Json(1.5)), std::invalid_argument);
}

TEST_CASE("polynomials round trip") {
  gen::Source src(51);
  for (int trial = 0; trial < 100; ++trial) {
    BiLaurent p = src.poly();
    Json j = json_io::to_json(p);
    CHECK(json_io::poly_from_json(Json::parse(j.dump())) == p);
  }
}

TEST_CASE("C2 table export") {
  CTildeTable tab = table("C2", 12);
  Json j = json_io::to_json(tab);
  CHECK(j["type"] == "C2");
  CHECK(j["order"] == 12);
  const Json& first = j["entries"][0];
  CHECK(first == Json::parse(R"({"i":1,"j":1,"u":1,"v":-1,"c":1})"));
  // Sorted by (i, j, u, v).
  const auto& es = j["entries"];
  for (std::size_t k = 1; k < es.size(); ++k) {
    auto key = [](const Json& e) {
      return std::tuple(e["i"].get<int>(), e["j"].get<int>(), e["u"].get<int>(), e["v"].get<int>());
    };
    CHECK(key(es[k - 1]) < key(es[k]));
  }
  CHECK(j.dump().find("\"t1\"") == std::string::npos);

  Json t1 = json_io::to_json(tab, true);
  CHECK(t1["t1"] == true);
  for (const auto& e : t1["entries"]) CHECK_FALSE(e.contains("v"));
}

TEST_CASE("tables round trip") {
  for (const auto& t : all_types(8)) {
    CartanData cd = build(t);
    CTildeTable tab = invert(build_cqt(cd), default_order(cd));
    CHECK(json_io::table_from_json(Json::parse(json_io::to_json(tab).dump())) == tab);
  }
  Json bad = json_io::to_json(table("A2", 6));
  bad["entries"][0]["i"] = 3;
  CHECK_THROWS_AS(json_io::table_from_json(bad), std::out_of_range);
}

TEST_CASE("other value types round trip") {
  DimPoly d{poly::parse("q^-2 + q^-8"), DimRole::ext1};
  CHECK(json_io::dim_from_json(json_io::to_json(d)) == d);
  CHECK(json_io::to_json(d)["role"] == "ext1");
  CHECK_THROWS_AS(json_io::dim_from_json(Json::parse(R"({"terms":[],"role":"nope"})")), std::invalid_argument);

  DivisorPoly div = DivisorPoly::from_poly(poly::parse("q^2 + 2*q^8"));
  Json dj = json_io::to_json(div);
  CHECK(dj == Json::parse(R"({"zeros":[{"exponent":2,"multiplicity":1},{"exponent":8,"multiplicity":2}]})"));
  CHECK(json_io::divisor_from_json(dj) == div);

  Word w{0, 1, 0, 1};
  Json wj = json_io::to_json(w);
  CHECK(wj["word"] == Json::parse("[1,2,1,2]"));
  CHECK(wj["length"] == 4);
  CHECK(json_io::word_from_json(wj) == w);

  Report r;
  r.expect(true, [] { return std::string(); });
  r.expect(false, [] { return std::string("bad"); });
  r.conjectural.push_back("maybe");
  Report back = json_io::report_from_json(json_io::to_json(r));
  CHECK(back.checks == 2);
  CHECK(back.failures == r.failures);
  CHECK(back.conjectural == r.conjectural);
}
