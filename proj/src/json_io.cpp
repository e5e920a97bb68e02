#include "cartanqt/json_io.hpp"

#include <cstdint>
#include <limits>
#include <stdexcept>

namespace cartanqt::json_io {

namespace {

const char* role_name(DimRole r) {
  switch (r) {
    case DimRole::ibar: return "ibar";
    case DimRole::kernel: return "kernel";
    case DimRole::euler: return "euler";
    case DimRole::ext1: return "ext1";
  }
  return "?";
}

DimRole role_from(const std::string& s) {
  if (s == "ibar") return DimRole::ibar;
  if (s == "kernel") return DimRole::kernel;
  if (s == "euler") return DimRole::euler;
  if (s == "ext1") return DimRole::ext1;
  throw std::invalid_argument("unknown role: " + s);
}

}  // namespace

Json integer_to_json(const Integer& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(x);
  return x.str();
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) return Integer(j.get<std::string>());
  throw std::invalid_argument("expected an integer");
}

Json to_json(const BiLaurent& p) {
  Json terms = Json::array();
  for (const auto& t : p.terms()) terms.push_back({{"u", t.exp.u}, {"v", t.exp.v}, {"c", integer_to_json(t.coeff)}});
  return {{"terms", terms}};
}

BiLaurent poly_from_json(const Json& j) {
  std::vector<Term> terms;
  for (const auto& t : j.at("terms"))
    terms.push_back(Term{{t.at("u").get<int>(), t.value("v", 0)}, integer_from_json(t.at("c"))});
  return BiLaurent::from_terms(std::move(terms));
}

Json to_json(const CTildeTable& tab, bool t1) {
  Json entries = Json::array();
  for (int i = 0; i < tab.cd.n; ++i)
    for (int j = 0; j < tab.cd.n; ++j) {
      const BiLaurent p = t1 ? tab.entry_q(i, j) : tab.entry(i, j);
      for (const auto& t : p.terms()) {
        Json e = {{"i", i + 1}, {"j", j + 1}, {"u", t.exp.u}};
        if (!t1) e["v"] = t.exp.v;
        e["c"] = integer_to_json(t.coeff);
        entries.push_back(std::move(e));
      }
    }
  Json out = {{"type", tab.cd.type.name()}, {"order", tab.order}};
  if (t1) out["t1"] = true;
  out["entries"] = std::move(entries);
  return out;
}

CTildeTable table_from_json(const Json& j) {
  CartanData cd = build(FiniteType::parse(j.at("type").get<std::string>()));
  DeformedCartan dc = build_cqt(cd);
  const int order = j.at("order").get<int>();
  std::vector<std::vector<std::vector<Term>>> raw(cd.n, std::vector<std::vector<Term>>(cd.n));
  for (const auto& e : j.at("entries")) {
    int i = e.at("i").get<int>() - 1;
    int jj = e.at("j").get<int>() - 1;
    if (i < 0 || i >= cd.n || jj < 0 || jj >= cd.n) throw std::out_of_range("entry index out of range");
    raw[i][jj].push_back(Term{{e.at("u").get<int>(), e.value("v", 0)}, integer_from_json(e.at("c"))});
  }
  PolyMatrix series(cd.n, std::vector<BiLaurent>(cd.n));
  for (int i = 0; i < cd.n; ++i)
    for (int jj = 0; jj < cd.n; ++jj) series[i][jj] = BiLaurent::from_terms(std::move(raw[i][jj]));
  return make_table(dc, order, std::move(series));
}

Json to_json(const DimPoly& d) {
  Json out = to_json(d.value);
  out["role"] = role_name(d.role);
  return out;
}

DimPoly dim_from_json(const Json& j) { return {poly_from_json(j), role_from(j.at("role").get<std::string>())}; }

Json to_json(const DivisorPoly& d) {
  Json zeros = Json::array();
  for (const auto& [e, m] : d.mults()) zeros.push_back({{"exponent", e}, {"multiplicity", integer_to_json(m)}});
  return {{"zeros", zeros}};
}

DivisorPoly divisor_from_json(const Json& j) {
  DivisorPoly d;
  for (const auto& z : j.at("zeros")) d.add(z.at("exponent").get<int>(), integer_from_json(z.at("multiplicity")));
  return d;
}

Json to_json(const Word& w) {
  Json letters = Json::array();
  for (int i : w) letters.push_back(i + 1);
  return {{"word", letters}, {"length", w.size()}};
}

Word word_from_json(const Json& j) {
  Word w;
  for (const auto& x : j.at("word")) w.push_back(x.get<int>() - 1);
  return w;
}

Json to_json(const Report& r) {
  return {{"checks", r.checks}, {"failures", r.failures}, {"conjectural", r.conjectural}};
}

Report report_from_json(const Json& j) {
  Report r;
  r.checks = j.at("checks").get<std::size_t>();
  r.failures = j.at("failures").get<std::vector<std::string>>();
  r.conjectural = j.value("conjectural", std::vector<std::string>{});
  return r;
}

}  // namespace cartanqt::json_io
