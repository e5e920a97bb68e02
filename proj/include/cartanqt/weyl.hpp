#pragma once

#include "cartanqt/cartan.hpp"

#include <vector>

namespace cartanqt {

/// Coordinates in the simple-root basis.
using RootVec = std::vector<long long>;
/// Sequence of 0-based node indices; applied to vectors right to left.
using Word = std::vector<int>;

RootVec simple_root(const CartanData& cd, int i);

/// s_i(v) = v - (sum_j c_ij v_j) alpha_i.
RootVec reflect(const CartanData& cd, int i, const RootVec& v);

/// Applies s_{w[0]} s_{w[1]} ... s_{w[last]} to v.
RootVec apply_word(const CartanData& cd, const Word& w, const RootVec& v);

/// Positive roots, sorted by height then lexicographically.
std::vector<RootVec> positive_roots(const CartanData& cd);

/// Reduced word for w0 by greedy descent from rho, smallest index first.
Word longest_word(const CartanData& cd);

/// Reduced word for w0 whose last letter is j.
Word longest_word_ending_at(const CartanData& cd, int j);

/// True when w has length |Phi+| and sends every alpha_i to -alpha_{i*}
/// for some permutation, i.e. w is a reduced word for w0.
bool is_longest_word(const CartanData& cd, const Word& w);

/// i -> i* where w0(alpha_i) = -alpha_{i*}.
std::vector<int> star(const CartanData& cd);

/// Braid-move neighbours of a word: commutations and (ij)^m rewrites.
std::vector<Word> braid_moves(const CartanData& cd, const Word& w);

/// Order of s_i s_j: 2, 3, 4 or 6.
int braid_order(const CartanData& cd, int i, int j);

}  // namespace cartanqt
