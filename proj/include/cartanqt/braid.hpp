#pragma once

// Deformed braid group action on the root lattice over Z[q^{+-1}, t^{+-1}].

#include "cartanqt/deform.hpp"
#include "cartanqt/weyl.hpp"

#include <utility>
#include <vector>

namespace cartanqt {

/// Coordinates in the basis {alpha_j}.
using WeightVector = std::vector<BiLaurent>;

WeightVector root_vector(const CartanData& cd, int j);

/// T_i^{sign} w, with T_i^{+-1} alpha_j = alpha_j - q^{-+d_i} t^{+-1} C_ij alpha_i.
WeightVector apply_T(const DeformedCartan& dc, int i, int sign, const WeightVector& w);

/// T_{w[0]}^{sign} ... T_{w[last]}^{sign} v (the last letter acts first).
WeightVector apply_T_word(const DeformedCartan& dc, const Word& word, int sign, const WeightVector& v);

/// (varpi_i^vee, w): the alpha_i coordinate.
BiLaurent pair_fund(const WeightVector& w, int i);

/// Symmetric pairing with (alpha_a, alpha_b) = [d_a]_q C_ab(q,t).
BiLaurent pairing(const DeformedCartan& dc, const WeightVector& x, const WeightVector& y);

/// T_i on coordinates in the basis {varpi_j}.
WeightVector apply_T_fund(const DeformedCartan& dc, int i, const WeightVector& lambda);

/// Two distinct reduced words for w0 (one for rank 1).
std::vector<Word> tw0_words(const CartanData& cd);

/// T_{w0} alpha_j = -q^{-r h^vee} t^h alpha_{j*} for every j.
Report verify_tw0(const DeformedCartan& dc, const Word& word);
/// Runs the check on every word of tw0_words and compares the results.
Report verify_tw0(const DeformedCartan& dc);

/// (letter i_k, (varpi_i^vee, T_{i_1}...T_{i_{k-1}} alpha_{i_k})) for k = 1..l.
std::vector<std::pair<int, BiLaurent>> projective_filtration(const DeformedCartan& dc, const Word& word, int i);

/// dim_{q,t} e_i Ibar_j from a reduced word, positive letters.
BiLaurent ibar_dim_braid(const DeformedCartan& dc, const Word& word, int i, int j);
PolyMatrix ibar_dim_braid_matrix(const DeformedCartan& dc, const Word& word);

/// C~_ij(q,t) from a reduced word with inverse letters, closed up
/// period by period through the T_{w0} formula; truncated at q-degree N.
BiLaurent ctilde_braid(const DeformedCartan& dc, const Word& word, int i, int j, int order);
CTildeTable ctilde_braid_table(const DeformedCartan& dc, const Word& word, int order);

/// Both sides of every defining braid relation agree on every alpha_k,
/// and T_i T_i^{-1} is the identity.
Report check_braid_relations(const DeformedCartan& dc);

/// (T_i x, y) = (x, T_i y) for every i and all simple roots x, y.
Report check_eqpair(const DeformedCartan& dc);

/// Each prefix value with positive letters is the bar of the matching
/// value with inverse letters.
Report check_orientation(const DeformedCartan& dc, const Word& word);

/// Prefix orbits of every varpi_i stay in sum Z[q^-1, t] varpi_j, and
/// every filtration multiplicity lies in q^{d_j - d_i} Z[q^-1, t].
Report check_quadrant(const DeformedCartan& dc, const Word& word);

/// q^{d_j} t^-1 dim e_i Ibar_j lies in
/// q^{d_i} t^-1 Z[q, t^-1] and in q^{r h^vee - d_i} t^{1-h} Z[q^-1, t].
Report check_dim_bounds(const DeformedCartan& dc, const PolyMatrix& ibar);

}  // namespace cartanqt
