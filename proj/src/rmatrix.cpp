#include "cartanqt/rmatrix.hpp"

#include "cartanqt/invariants.hpp"

#include <algorithm>
#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace cartanqt {

namespace {

DivisorPoly from_exponents(std::initializer_list<int> exps) {
  DivisorPoly d;
  for (int e : exps) d.add(e);
  return d;
}

void require_levels(const KRLabel& a, const KRLabel& b) {
  if (a.k < 1 || b.k < 1) throw std::invalid_argument("levels must be >= 1");
}

// Orders the pair so that k d_i >= l d_j.
std::pair<KRLabel, KRLabel> oriented(const CartanData& cd, const KRLabel& a, const KRLabel& b) {
  if (a.k * cd.d.at(a.i) < b.k * cd.d.at(b.i)) return {b, a};
  return {a, b};
}

BiLaurent kro_unshifted(const CTildeTable& tab, const KRLabel& a0, const KRLabel& b0) {
  const auto& cd = tab.cd;
  auto [a, b] = oriented(cd, a0, b0);
  BiLaurent window = poly::spec_t1(tab.entry(a.i, b.i).q_window(0, cd.r * cd.hv));
  return BiLaurent::q_pow(a.k * cd.d[a.i]) * poly::qint_ratio(b.k, cd.d[b.i]) * window;
}

std::string pair_text(const CartanData& cd, int i, int k, int j, int l) {
  std::ostringstream os;
  os << cd.type.name() << " (i,k)=(" << i + 1 << "," << k << ") (j,l)=(" << j + 1 << "," << l << ")";
  return os.str();
}

}  // namespace

DivisorPoly DivisorPoly::from_poly(const BiLaurent& p) {
  DivisorPoly d;
  for (const auto& t : p.terms()) {
    if (t.exp.v != 0) throw std::domain_error("divisor polynomial has a t-power");
    if (t.coeff < 0) throw std::domain_error("negative divisor multiplicity at q^" + std::to_string(t.exp.u));
    d.mults_[t.exp.u] = t.coeff;
  }
  return d;
}

BiLaurent DivisorPoly::to_poly() const {
  std::vector<Term> terms;
  for (const auto& [e, m] : mults_) terms.push_back(Term{{e, 0}, m});
  return BiLaurent::from_terms(std::move(terms));
}

Integer DivisorPoly::multiplicity(int exponent) const {
  auto it = mults_.find(exponent);
  return it == mults_.end() ? Integer(0) : it->second;
}

void DivisorPoly::add(int exponent, const Integer& m) {
  if (m < 0) throw std::domain_error("negative divisor multiplicity");
  if (m == 0) return;
  mults_[exponent] += m;
}

DivisorPoly DivisorPoly::shifted(int by) const {
  DivisorPoly d;
  for (const auto& [e, m] : mults_) d.mults_[e + by] = m;
  return d;
}

std::string DivisorPoly::to_string() const {
  if (mults_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, m] : mults_) {
    if (!first) os << " + ";
    if (m != 1) os << m << '*';
    os << "q^" << e;
    first = false;
  }
  return os.str();
}

DivisorPoly divisor_kr(const CTildeTable& tab, const KRLabel& a, const KRLabel& b) {
  require_levels(a, b);
  try {
    return DivisorPoly::from_poly(kro_unshifted(tab, a, b)).shifted(a.p - b.p);
  } catch (const std::domain_error& e) {
    throw std::logic_error(std::string("divisor_kr: ") + e.what());
  }
}

DivisorPoly denominator_poly(const CTildeTable& tab, const KRLabel& a, const KRLabel& b) {
  require_levels(a, b);
  const auto& cd = tab.cd;
  const int i = a.i, k = a.k, j = b.i, l = b.k;
  if (k * cd.d[i] < l * cd.d[j]) throw std::invalid_argument("denominator formula needs k d_i >= l d_j");
  if (is_club(cd, i, k, j, l)) throw std::invalid_argument("denominator formula is not asserted on the exceptional locus");
  DivisorPoly out;
  for (int u = 0; u <= cd.r * cd.hv; ++u) {
    Integer c = tab.coeff_q(i, j, u);
    if (c == 0) continue;
    if (c < 0) throw std::logic_error("negative coefficient inside the positivity window");
    for (int s = 0; s < l; ++s) out.add(u + k * cd.d[i] + (2 * s - l + 1) * cd.d[j], c);
  }
  return out.shifted(a.p - b.p);
}

std::optional<DivisorPoly> known_divisors(const CartanData& cd, int i, int k, int j, int l) {
  const int a = i + 1;
  const int b = j + 1;
  switch (cd.type.family) {
    case Family::C: {
      const int n = cd.n;
      if (k != 1 || l != 1 || a >= n || b >= n) return std::nullopt;
      DivisorPoly d;
      for (int u = 1; u <= std::min({a, b, n - a, n - b}); ++u) d.add(std::abs(a - b) + 2 * u);
      for (int u = 1; u <= std::min(a, b); ++u) d.add(2 * n - a - b + 2 * u + 2);
      return d;
    }
    case Family::F:
      if (k != 1 || l != 1 || a < 3 || b < 3) return std::nullopt;
      if (a == 3 && b == 3) return from_exponents({2, 6, 8, 10, 12, 12, 16, 18});
      if (a == 4 && b == 4) return from_exponents({2, 8, 12, 18});
      return from_exponents({3, 7, 11, 13, 17});
    case Family::G:
      if (a != 2 || b != 2 || k != l) return std::nullopt;
      if (k == 1) return from_exponents({2, 8, 12});
      if (k == 2) return from_exponents({2, 4, 8, 8, 10, 12, 14});
      return std::nullopt;
    default:
      return std::nullopt;
  }
}

ResolvedDivisor resolved_divisor(const CTildeTable& tab, const KRLabel& a, const KRLabel& b) {
  const auto& cd = tab.cd;
  if (!is_club(cd, a.i, a.k, b.i, b.k)) return {divisor_kr(tab, a, b), DivisorSource::kro_formula};
  const int shift = a.p - b.p;
  if (auto known = known_divisors(cd, a.i, a.k, b.i, b.k)) return {known->shifted(shift), DivisorSource::known_list};
  BiLaurent ext = poly::bar(ext1_dim(tab, a.i, a.k, b.i, b.k).value);
  return {DivisorPoly::from_poly(ext).shifted(shift), DivisorSource::conjectural_ext};
}

Integer pole_order(const CTildeTable& tab, const KRLabel& a, const KRLabel& b) {
  KRLabel a0 = a, b0 = b;
  a0.p = b0.p = 0;
  return resolved_divisor(tab, a0, b0).divisor.multiplicity(b.p - a.p);
}

Report verify_evid(const CTildeTable& tab, int max_level) {
  const auto& cd = tab.cd;
  Report rep;
  for (int i = 0; i < cd.n; ++i)
    for (int j = 0; j < cd.n; ++j)
      for (int k = 1; k <= max_level; ++k)
        for (int l = 1; l <= max_level; ++l) {
          const std::string at = pair_text(cd, i, k, j, l);
          BiLaurent ext = poly::bar(ext1_dim(tab, i, k, j, l).value);
          if (is_club(cd, i, k, j, l)) {
            auto known = known_divisors(cd, i, k, j, l);
            if (k < cd.r && known) {
              rep.expect(ext == known->to_poly(), [&] {
                return at + ": bar(ext1) = " + ext.to_string() + " but the published divisor is " +
                       known->to_string();
              });
            } else {
              rep.conjectural.push_back(at + ": divisor taken as bar(ext1) = " + ext.to_string() +
                                        " (conjectural, no independent oracle)");
            }
            continue;
          }
          BiLaurent kro = kro_unshifted(tab, {i, k, 0}, {j, l, 0});
          rep.expect(kro.nonnegative(), [&] { return at + ": negative divisor multiplicity"; });
          rep.expect(ext == kro, [&] { return at + ": bar(ext1) != KRO divisor"; });
          if (k * cd.d[i] >= l * cd.d[j]) {
            DivisorPoly den = denominator_poly(tab, {i, k, 0}, {j, l, 0});
            rep.expect(den.to_poly() == kro, [&] { return at + ": product formula != KRO divisor"; });
          }
        }
  return rep;
}

const char* source_name(DivisorSource s) {
  switch (s) {
    case DivisorSource::kro_formula: return "kro_formula";
    case DivisorSource::known_list: return "known_list";
    case DivisorSource::conjectural_ext: return "conjectural (bar ext1)";
  }
  return "?";
}

}  // namespace cartanqt
