#pragma once

// Closed-form graded dimensions read off a C~ table.  Node indices are
// 0-based; levels k, l are >= 1.

#include "cartanqt/deform.hpp"
#include "cartanqt/report.hpp"

namespace cartanqt {

enum class DimRole { ibar, kernel, euler, ext1 };

struct DimPoly {
  BiLaurent value;
  DimRole role = DimRole::ibar;

  friend bool operator==(const DimPoly&, const DimPoly&) = default;
};

/// dim_{q,t} e_i Ibar_j from the window 0 <= u <= r h^vee, -h <= v <= 0.
DimPoly ibar_dim(const CTildeTable& tab, int i, int j);
PolyMatrix ibar_dim_matrix(const CTildeTable& tab);

/// dim_q e_j K^{(i)}_k = [k d_i]_q / [d_i]_q sum_u c~_ji(u) q^u.
DimPoly kernel_dim(const CTildeTable& tab, int i, int k, int j);

/// <E_i, S_j>_{q,t} with the geometric factor expanded to M terms.
DimPoly euler_pairing_ES(const DeformedCartan& dc, int i, int j, int terms);

/// (dim e_i Ibar_j) q^D t^-1 (id - X nu) C(q,t) with X = q^{r h^vee} t^-h.
/// Equals (1 - X^2) id exactly.
PolyMatrix euler_product(const DeformedCartan& dc, const PolyMatrix& ibar);

/// The same product with the M-term expansion of <E_i, S_j>; equals
/// (1 - X^{2M}) id exactly.
PolyMatrix euler_product_series(const DeformedCartan& dc, const PolyMatrix& ibar, int terms);

/// Type C, F or G with d_i = d_j = 1, k = l and r not dividing k.
bool is_club(const CartanData& cd, int i, int k, int j, int l);

/// Correction polynomial Delta_ij(q) for d_i = d_j = 1 in types C, F, G.
/// Throws std::invalid_argument elsewhere.
BiLaurent delta(const CartanData& cd, int i, int j);

/// dim_q ext^1(K^{(i)}_k, K^{(j)}_l), with the Delta correction on the
/// exceptional locus.
DimPoly ext1_dim(const CTildeTable& tab, int i, int k, int j, int l);

/// The uncorrected closed form (no Delta), after the same orientation swap.
DimPoly ext1_dim_uncorrected(const CTildeTable& tab, int i, int k, int j, int l);

/// C~ rebuilt from the Ibar dimensions, expanded to q-degree `order`.
CTildeTable reconstruct_ctilde(const DeformedCartan& dc, const PolyMatrix& ibar, int order);

/// bar(dim e_i Ibar_j) = q^{2 d_j - r h^vee} t^{h-2} dim e_i Ibar_{j*}.
Report duality_check(const DeformedCartan& dc, const PolyMatrix& ibar);

}  // namespace cartanqt
