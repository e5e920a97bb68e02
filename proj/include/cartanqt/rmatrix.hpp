#pragma once

// Denominator divisors of R-matrices between Kirillov-Reshetikhin modules,
// represented by their multisets of q-exponents.

#include "cartanqt/deform.hpp"
#include "cartanqt/report.hpp"

#include <map>
#include <optional>
#include <string>

namespace cartanqt {

/// Multiset of q-exponents; stored multiplicities are >= 1.
class DivisorPoly {
 public:
  DivisorPoly() = default;

  /// Throws std::domain_error on a negative coefficient or a t-power.
  static DivisorPoly from_poly(const BiLaurent& p);
  BiLaurent to_poly() const;

  const std::map<int, Integer>& mults() const { return mults_; }
  Integer multiplicity(int exponent) const;
  void add(int exponent, const Integer& m = 1);
  DivisorPoly shifted(int by) const;
  bool empty() const { return mults_.empty(); }

  /// E.g. "q^2 + 2*q^8"; the empty divisor is "0".
  std::string to_string() const;

  friend bool operator==(const DivisorPoly&, const DivisorPoly&) = default;

 private:
  std::map<int, Integer> mults_;
};

/// V^{(i)}_{k, q^p}; i is 0-based.
struct KRLabel {
  int i = 0;
  int k = 1;
  int p = 0;
};

/// q^{k d_i} [l d_j]_q / [d_j]_q sum_{u=0}^{r h^vee} c~_ij(u) q^u with the
/// labels ordered so that k d_i >= l d_j, times q^{p_a - p_b}.  No Delta
/// correction is applied.
DivisorPoly divisor_kr(const CTildeTable& tab, const KRLabel& a, const KRLabel& b);

/// Exponent multiset of prod_{a,u} (z - q^{u + k d_i + (2a - l + 1) d_j})^{c~_ij(u)},
/// times the same spectral shift.  Requires k d_i >= l d_j and not club.
DivisorPoly denominator_poly(const CTildeTable& tab, const KRLabel& a, const KRLabel& b);

/// Published divisors for fundamental and low-level pairs in types C, F, G
/// on the exceptional locus (labels 0-based, no shifts).
std::optional<DivisorPoly> known_divisors(const CartanData& cd, int i, int k, int j, int l);

enum class DivisorSource { kro_formula, known_list, conjectural_ext };

struct ResolvedDivisor {
  DivisorPoly divisor;
  DivisorSource source = DivisorSource::kro_formula;
};

/// The divisor used for reporting: the closed formula off the exceptional
/// locus, the published list where it exists, and otherwise bar(ext^1)
/// marked conjectural.
ResolvedDivisor resolved_divisor(const CTildeTable& tab, const KRLabel& a, const KRLabel& b);

/// Zero order at z = 1, i.e. the coefficient of q^{p_b - p_a} in the
/// unshifted resolved divisor.
Integer pole_order(const CTildeTable& tab, const KRLabel& a, const KRLabel& b);

/// bar(ext^1) against the published lists on the exceptional locus with
/// k = l < r, and against divisor_kr everywhere else for k, l <= max_level.
Report verify_evid(const CTildeTable& tab, int max_level = 4);

const char* source_name(DivisorSource s);

}  // namespace cartanqt
