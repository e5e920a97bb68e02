#include "cartanqt/deform.hpp"

#include "cartanqt/weyl.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cartanqt {

namespace {

std::string where(const CTildeTable& tab, int i, int j) {
  std::ostringstream os;
  os << tab.cd.type.name() << " (" << i + 1 << "," << j + 1 << ")";
  return os.str();
}

}  // namespace

DeformedCartan build_cqt(const CartanData& cd) {
  DeformedCartan dc;
  dc.cd = cd;
  dc.entries.assign(cd.n, std::vector<BiLaurent>(cd.n));
  for (int i = 0; i < cd.n; ++i) {
    for (int j = 0; j < cd.n; ++j) {
      if (i == j) {
        dc.entries[i][j] = BiLaurent::qt_pow(cd.d[i], -1) + BiLaurent::qt_pow(-cd.d[i], 1);
      } else {
        dc.entries[i][j] = poly::qint(cd.c[i][j]);
      }
    }
  }
  dc.star = star(cd);
  return dc;
}

int default_order(const CartanData& cd) { return 2 * cd.r * cd.hv + 2; }

Integer CTildeTable::coeff(int i, int j, int u, int v) const {
  if (u < 0 || u > order) throw std::out_of_range("q-degree outside the truncation window");
  return entry(i, j).coeff(u, v);
}

Integer CTildeTable::coeff_q(int i, int j, int u) const {
  if (u < 0 || u > order) throw std::out_of_range("q-degree outside the truncation window");
  Integer s = 0;
  for (const auto& t : entry(i, j).terms())
    if (t.exp.u == u) s += t.coeff;
  return s;
}

CTildeTable make_table(const DeformedCartan& dc, int order, PolyMatrix series) {
  CTildeTable tab;
  tab.cd = dc.cd;
  tab.star = dc.star;
  tab.order = order;
  tab.series = std::move(series);
  return tab;
}

CTildeTable invert(const DeformedCartan& dc, int order) {
  if (order < 0) throw std::invalid_argument("truncation order must be non-negative");
  const auto& cd = dc.cd;
  const int n = cd.n;

  // A_ik = delta_ik - C_ik q^{d_k} t^-1; every term has q-degree >= 1.
  PolyMatrix a(n, std::vector<BiLaurent>(n));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      a[i][k] = BiLaurent(i == k ? 1 : 0) - dc.entries[i][k] * BiLaurent::qt_pow(cd.d[k], -1);

  // Y = sum_k A^k satisfies Y = id + A Y.  Solve it one q-degree at a time;
  // slice[u][k][j] holds the t-polynomial multiplying q^u in Y_kj.
  std::vector<PolyMatrix> slice(order + 1, PolyMatrix(n, std::vector<BiLaurent>(n)));
  for (int u = 0; u <= order; ++u) {
    auto& cur = slice[u];
    if (u == 0)
      for (int i = 0; i < n; ++i) cur[i][i] = 1;
    for (int i = 0; i < n; ++i) {
      for (int k = 0; k < n; ++k) {
        for (const auto& term : a[i][k].terms()) {
          int s = term.exp.u;
          if (s < 1) throw std::logic_error("A has a term of non-positive q-degree");
          if (s > u) break;
          BiLaurent m = BiLaurent::monomial(term.coeff, 0, term.exp.v);
          for (int j = 0; j < n; ++j)
            if (!slice[u - s][k][j].is_zero()) cur[i][j] += m * slice[u - s][k][j];
        }
      }
    }
  }

  PolyMatrix series(n, std::vector<BiLaurent>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      std::vector<Term> terms;
      for (int u = 0; u + cd.d[i] <= order; ++u)
        for (const auto& t : slice[u][i][j].terms())
          terms.push_back(Term{{u + cd.d[i], t.exp.v - 1}, t.coeff});
      series[i][j] = BiLaurent::from_terms(std::move(terms));
    }
  }
  return make_table(dc, order, std::move(series));
}

PolyMatrix product_with_cqt(const CTildeTable& tab, const DeformedCartan& dc) {
  const int n = tab.cd.n;
  const int bound = tab.order - *std::max_element(tab.cd.d.begin(), tab.cd.d.end());
  PolyMatrix out(n, std::vector<BiLaurent>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      BiLaurent s;
      for (int k = 0; k < n; ++k) s += tab.entry(i, k) * dc.entries[k][j];
      out[i][j] = s.truncated(bound);
    }
  return out;
}

Report check_properties(const CTildeTable& tab) {
  const auto& cd = tab.cd;
  const int n = cd.n;
  const int R = cd.r * cd.hv;
  const int H = cd.h;
  const int N = tab.order;
  if (N < 2 * R) throw std::invalid_argument("check_properties needs order >= 2 r h^vee");

  Report rep;
  for (int i = 0; i < n; ++i) {
    const int di = cd.d[i];
    for (int j = 0; j < n; ++j) {
      const int js = tab.star[j];
      const BiLaurent& c = tab.entry(i, j);
      const BiLaurent& cs = tab.entry(i, js);
      const std::string at = where(tab, i, j);

      // Leading term and vanishing below it.
      for (const auto& t : c.terms()) {
        bool lead = t.exp.u == di && t.exp.v == -1;
        if (lead) continue;
        rep.expect(t.exp.u > di && t.exp.v < -1, [&] {
          return at + ": nonzero c~(" + std::to_string(t.exp.u) + "," + std::to_string(t.exp.v) +
                 ") outside u > d_i, v < -1";
        });
      }
      rep.expect(c.coeff(di, -1) == (i == j ? 1 : 0), [&] { return at + ": c~(d_i,-1) != delta_ij"; });

      // Bigraded quasi-periodicity.
      BiLaurent low = c.q_window(0, N - R).shifted(R, -H);
      BiLaurent high = cs.q_window(R, N);
      rep.expect(low == -high, [&] { return at + ": bigraded quasi-periodicity fails"; });

      // Bigraded positivity on 0 <= u <= R, -H <= v <= 0.
      const BiLaurent window = c.q_window(0, R);
      for (const auto& t : window.terms()) {
        if (t.exp.v < -H || t.exp.v > 0) continue;
        rep.expect(t.coeff > 0, [&] {
          return at + ": negative c~(" + std::to_string(t.exp.u) + "," + std::to_string(t.exp.v) + ")";
        });
      }

      // Bigraded palindrome c~_ij(R-u, -H-v) = c~_ij*(u, v).
      const BiLaurent& win = window;
      BiLaurent win_s = cs.q_window(0, R);
      rep.expect(poly::bar(win).shifted(R, -H) == win_s, [&] { return at + ": bigraded palindrome fails"; });

      // q-graded versions.
      BiLaurent cq = poly::spec_t1(c);
      BiLaurent csq = poly::spec_t1(cs);
      rep.expect(cq.q_window(0, N - R).shifted(R, 0) == -csq.q_window(R, N),
                 [&] { return at + ": q quasi-periodicity fails"; });
      BiLaurent winq = cq.q_window(0, R);
      rep.expect(winq.nonnegative(), [&] { return at + ": negative q-window coefficient"; });
      rep.expect(poly::bar(winq).shifted(R, 0) == csq.q_window(0, R),
                 [&] { return at + ": q palindrome fails"; });

      // c~_ij(u) = 0 whenever |u - kR| <= d_i - delta_{i, nu^k(j)}.
      for (int k = 0; k * R - di <= N; ++k) {
        const int jk = k % 2 == 0 ? j : js;
        const int radius = di - (i == jk ? 1 : 0);
        for (int u = std::max(0, k * R - radius); u <= std::min(N, k * R + radius); ++u) {
          rep.expect(cq.coeff(u, 0) == 0, [&] {
            return at + ": c~(" + std::to_string(u) + ") should vanish";
          });
        }
      }
    }
  }
  return rep;
}

}  // namespace cartanqt
