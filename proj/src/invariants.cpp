#include "cartanqt/invariants.hpp"

#include <initializer_list>
#include <stdexcept>
#include <utility>

namespace cartanqt {

namespace {

void require_window(const CTildeTable& tab) {
  if (tab.order < tab.cd.r * tab.cd.hv) throw std::invalid_argument("truncation order below r h^vee");
}

void require_level(int k) {
  if (k < 1) throw std::invalid_argument("level must be >= 1");
}

// sum_{u=0}^{r h^vee} c~_ij(u) q^u
BiLaurent q_window(const CTildeTable& tab, int i, int j) {
  require_window(tab);
  return poly::spec_t1(tab.entry(i, j).q_window(0, tab.cd.r * tab.cd.hv));
}

BiLaurent x_power(const CartanData& cd, int m) { return BiLaurent::qt_pow(m * cd.r * cd.hv, -m * cd.h); }

BiLaurent sum_q(std::initializer_list<int> exps) {
  BiLaurent s;
  for (int e : exps) s += BiLaurent::q_pow(e);
  return s;
}

}  // namespace

DimPoly ibar_dim(const CTildeTable& tab, int i, int j) {
  require_window(tab);
  const auto& cd = tab.cd;
  std::vector<Term> terms;
  const BiLaurent window = tab.entry(i, j).q_window(0, cd.r * cd.hv);
  for (const auto& t : window.terms())
    if (t.exp.v >= -cd.h && t.exp.v <= 0) terms.push_back(t);
  return {BiLaurent::from_terms(std::move(terms)).shifted(-cd.d[j], 1), DimRole::ibar};
}

PolyMatrix ibar_dim_matrix(const CTildeTable& tab) {
  PolyMatrix m(tab.cd.n, std::vector<BiLaurent>(tab.cd.n));
  for (int i = 0; i < tab.cd.n; ++i)
    for (int j = 0; j < tab.cd.n; ++j) m[i][j] = ibar_dim(tab, i, j).value;
  return m;
}

DimPoly kernel_dim(const CTildeTable& tab, int i, int k, int j) {
  require_level(k);
  return {poly::qint_ratio(k, tab.cd.d[i]) * q_window(tab, j, i), DimRole::kernel};
}

DimPoly euler_pairing_ES(const DeformedCartan& dc, int i, int j, int terms) {
  if (terms < 1) throw std::invalid_argument("need at least one series term");
  const auto& cd = dc.cd;
  BiLaurent head = BiLaurent::qt_pow(cd.d[i], -1) *
                   (dc.entries[i][j] - x_power(cd, 1) * dc.entries[dc.star[i]][j]);
  BiLaurent geom;
  for (int m = 0; m < terms; ++m) geom += x_power(cd, 2 * m);
  return {head * geom, DimRole::euler};
}

PolyMatrix euler_product_series(const DeformedCartan& dc, const PolyMatrix& ibar, int terms) {
  const int n = dc.cd.n;
  PolyMatrix es(n, std::vector<BiLaurent>(n));
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < n; ++j) es[k][j] = euler_pairing_ES(dc, k, j, terms).value;
  PolyMatrix out(n, std::vector<BiLaurent>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) out[i][j] += ibar[i][k] * es[k][j];
  return out;
}

PolyMatrix euler_product(const DeformedCartan& dc, const PolyMatrix& ibar) {
  return euler_product_series(dc, ibar, 1);
}

bool is_club(const CartanData& cd, int i, int k, int j, int l) {
  const Family f = cd.type.family;
  if (f != Family::C && f != Family::F && f != Family::G) return false;
  return cd.d[i] == 1 && cd.d[j] == 1 && k == l && k % cd.r != 0;
}

BiLaurent delta(const CartanData& cd, int i, int j) {
  const Family f = cd.type.family;
  bool eligible = (f == Family::C || f == Family::F || f == Family::G) && cd.d.at(i) == 1 && cd.d.at(j) == 1;
  if (!eligible) throw std::invalid_argument("Delta is only defined for d_i = d_j = 1 in types C, F, G");
  const int a = i + 1;
  const int b = j + 1;
  switch (f) {
    case Family::C: {
      const int n = cd.n;
      BiLaurent s;
      for (int m = 1; m <= a + b - n; ++m) s += BiLaurent::q_pow(2 * n - a - b + 2 * m);
      return s;
    }
    case Family::F:
      if (a == 3 && b == 3) return sum_q({4, 8, 10, 14});
      if (a + b == 7) return BiLaurent::q_pow(9);
      return {};
    default:
      return BiLaurent::q_pow(6);
  }
}

DimPoly ext1_dim_uncorrected(const CTildeTable& tab, int i, int k, int j, int l) {
  require_level(k);
  require_level(l);
  const auto& cd = tab.cd;
  if (k * cd.d[i] < l * cd.d[j]) {
    std::swap(i, j);
    std::swap(k, l);
  }
  BiLaurent v = BiLaurent::q_pow(-k * cd.d[i]) * poly::qint_ratio(l, cd.d[j]) * poly::bar(q_window(tab, i, j));
  return {v, DimRole::ext1};
}

DimPoly ext1_dim(const CTildeTable& tab, int i, int k, int j, int l) {
  DimPoly out = ext1_dim_uncorrected(tab, i, k, j, l);
  if (is_club(tab.cd, i, k, j, l)) out.value -= poly::bar(delta(tab.cd, i, j));
  return out;
}

CTildeTable reconstruct_ctilde(const DeformedCartan& dc, const PolyMatrix& ibar, int order) {
  const auto& cd = dc.cd;
  const int n = cd.n;
  const int R = cd.r * cd.hv;
  PolyMatrix series(n, std::vector<BiLaurent>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      BiLaurent num = BiLaurent::qt_pow(cd.d[j], -1) * (ibar[i][j] - x_power(cd, 1) * ibar[i][dc.star[j]]);
      BiLaurent acc;
      for (int m = 0; 2 * m * R <= order; ++m) acc += x_power(cd, 2 * m) * num;
      series[i][j] = acc.truncated(order);
    }
  return make_table(dc, order, std::move(series));
}

Report duality_check(const DeformedCartan& dc, const PolyMatrix& ibar) {
  const auto& cd = dc.cd;
  Report rep;
  for (int i = 0; i < cd.n; ++i)
    for (int j = 0; j < cd.n; ++j) {
      BiLaurent rhs = ibar[i][dc.star[j]].shifted(2 * cd.d[j] - cd.r * cd.hv, cd.h - 2);
      rep.expect(poly::bar(ibar[i][j]) == rhs, [&] {
        return cd.type.name() + " (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
               "): Ibar duality fails";
      });
    }
  return rep;
}

}  // namespace cartanqt
