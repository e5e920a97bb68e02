#pragma once

// Finite-type Cartan data.  Nodes are 0-based in code and 1-based in all
// user-facing text; the labeling follows Kac's tables.

#include <string>
#include <string_view>
#include <vector>

namespace cartanqt {

enum class Family { A, B, C, D, E, F, G };

struct FiniteType {
  Family family = Family::A;
  int rank = 1;

  /// E.g. "C3", "G2".
  std::string name() const;
  bool admissible() const;

  /// Accepts "C3", "c3", or a bare family letter with an explicit rank.
  /// Forced ranks (F, G) may omit the rank.  Throws std::invalid_argument.
  static FiniteType parse(std::string_view family_or_name, int rank = 0);

  friend bool operator==(const FiniteType&, const FiniteType&) = default;
};

/// A1..A8, B2..B8, C2..C8, D4..D8, E6, E7, E8, F4, G2, filtered by rank.
std::vector<FiniteType> all_types(int max_rank = 8);

struct CartanData {
  FiniteType type;
  int n = 0;
  std::vector<std::vector<int>> c;
  std::vector<int> d;
  int r = 1;
  int h = 0;
  int hv = 0;
  std::vector<std::vector<int>> b;

  bool adjacent(int i, int j) const { return i != j && c[i][j] < 0; }
};

/// Throws std::invalid_argument for an inadmissible rank.
CartanData build(const FiniteType& t);

/// All j != i with c_ij < 0, ascending.  Throws std::out_of_range.
std::vector<int> neighbors(const CartanData& cd, int i);

/// Checks the structural invariants; returns a description of the first
/// violation, or an empty string.
std::string audit(const CartanData& cd);

}  // namespace cartanqt
