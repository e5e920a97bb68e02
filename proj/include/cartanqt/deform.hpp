#pragma once

#include "cartanqt/cartan.hpp"
#include "cartanqt/poly.hpp"
#include "cartanqt/report.hpp"

#include <vector>

namespace cartanqt {

using PolyMatrix = std::vector<std::vector<BiLaurent>>;

struct DeformedCartan {
  CartanData cd;
  PolyMatrix entries;
  std::vector<int> star;
};

DeformedCartan build_cqt(const CartanData& cd);

/// 2 r h^vee + 2.
int default_order(const CartanData& cd);

/// Expansion of the inverse of C(q,t), truncated at q-degree `order`.
struct CTildeTable {
  CartanData cd;
  std::vector<int> star;
  int order = 0;
  /// series[i][j] holds every term of C~_ij with q-degree <= order.
  PolyMatrix series;

  const BiLaurent& entry(int i, int j) const { return series.at(i).at(j); }

  /// c~_ij(u, v); throws std::out_of_range unless 0 <= u <= order.
  Integer coeff(int i, int j, int u, int v) const;
  /// c~_ij(u) = sum_v c~_ij(u, v); same range rule.
  Integer coeff_q(int i, int j, int u) const;
  /// C~_ij(q, 1) truncated at `order`.
  BiLaurent entry_q(int i, int j) const { return poly::spec_t1(entry(i, j)); }

  friend bool operator==(const CTildeTable& a, const CTildeTable& b) {
    return a.cd.type == b.cd.type && a.order == b.order && a.series == b.series;
  }
};

/// Sums the geometric series of A = id - C(q,t) q^D t^-1 to q-order N.
CTildeTable invert(const DeformedCartan& dc, int order);

/// Empty table skeleton with the given series (used by other pipelines).
CTildeTable make_table(const DeformedCartan& dc, int order, PolyMatrix series);

/// Sum_k C~_ik C_kj truncated at q-degree order - max d; equals the
/// identity when the table is correct.
PolyMatrix product_with_cqt(const CTildeTable& tab, const DeformedCartan& dc);

/// Leading terms, vanishing windows, quasi-periodicity, positivity and palindromy of
/// the coefficients, in both the bigraded and the q-graded form.
/// Requires order >= 2 r h^vee.
Report check_properties(const CTildeTable& tab);

}  // namespace cartanqt
