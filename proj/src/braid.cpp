#include "cartanqt/braid.hpp"

#include <sstream>
#include <stdexcept>

namespace cartanqt {

namespace {

// The factor q^{-+d_i} t^{+-1} of T_i^{+-1}.
BiLaurent t_factor(const CartanData& cd, int i, int sign) {
  return sign > 0 ? BiLaurent::qt_pow(-cd.d[i], 1) : BiLaurent::qt_pow(cd.d[i], -1);
}

// Values (varpi_i^vee, T_{i_1}^s ... T_{i_{k-1}}^s alpha_{i_k}) for k = 1..l.
// The covector phi = varpi_i^vee o T_{i_1}^s o ... is updated in place:
// (phi o T_m^s)_j = phi_j - c C_mj phi_m.
std::vector<BiLaurent> covector_walk(const DeformedCartan& dc, const Word& word, int i, int sign) {
  const int n = dc.cd.n;
  std::vector<BiLaurent> phi(n);
  phi[i] = 1;
  std::vector<BiLaurent> values;
  values.reserve(word.size());
  for (int m : word) {
    values.push_back(phi[m]);
    if (phi[m].is_zero()) continue;
    BiLaurent f = t_factor(dc.cd, m, sign) * phi[m];
    for (int j = 0; j < n; ++j)
      if (!dc.entries[m][j].is_zero()) phi[j] -= f * dc.entries[m][j];
  }
  return values;
}

void require_w0(const CartanData& cd, const Word& word) {
  if (!is_longest_word(cd, word)) throw std::invalid_argument("word is not a reduced expression of w0");
}

std::string word_text(const Word& w) {
  std::ostringstream os;
  for (std::size_t k = 0; k < w.size(); ++k) os << (k ? " " : "") << w[k] + 1;
  return os.str();
}

bool in_quadrant(const BiLaurent& p, int max_u) {
  for (const auto& t : p.terms())
    if (t.exp.u > max_u || t.exp.v < 0) return false;
  return true;
}

}  // namespace

WeightVector root_vector(const CartanData& cd, int j) {
  WeightVector v(cd.n);
  v.at(j) = 1;
  return v;
}

WeightVector apply_T(const DeformedCartan& dc, int i, int sign, const WeightVector& w) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
  BiLaurent s;
  for (int j = 0; j < dc.cd.n; ++j)
    if (!w[j].is_zero() && !dc.entries[i][j].is_zero()) s += dc.entries[i][j] * w[j];
  WeightVector out = w;
  out[i] -= t_factor(dc.cd, i, sign) * s;
  return out;
}

WeightVector apply_T_word(const DeformedCartan& dc, const Word& word, int sign, const WeightVector& v) {
  WeightVector out = v;
  for (auto it = word.rbegin(); it != word.rend(); ++it) out = apply_T(dc, *it, sign, out);
  return out;
}

BiLaurent pair_fund(const WeightVector& w, int i) { return w.at(i); }

BiLaurent pairing(const DeformedCartan& dc, const WeightVector& x, const WeightVector& y) {
  BiLaurent s;
  for (int a = 0; a < dc.cd.n; ++a) {
    if (x[a].is_zero()) continue;
    BiLaurent row;
    for (int b = 0; b < dc.cd.n; ++b)
      if (!y[b].is_zero() && !dc.entries[a][b].is_zero()) row += dc.entries[a][b] * y[b];
    s += poly::qint(dc.cd.d[a]) * x[a] * row;
  }
  return s;
}

WeightVector apply_T_fund(const DeformedCartan& dc, int i, const WeightVector& lambda) {
  WeightVector out = lambda;
  if (lambda[i].is_zero()) return out;
  BiLaurent f = t_factor(dc.cd, i, 1) * lambda[i];
  for (int j = 0; j < dc.cd.n; ++j)
    if (!dc.entries[j][i].is_zero()) out[j] -= f * dc.entries[j][i];
  return out;
}

std::vector<Word> tw0_words(const CartanData& cd) {
  std::vector<Word> words{longest_word(cd)};
  for (int j = 0; j < cd.n; ++j) {
    Word w = longest_word_ending_at(cd, j);
    if (w != words.front()) {
      words.push_back(std::move(w));
      break;
    }
  }
  return words;
}

Report verify_tw0(const DeformedCartan& dc, const Word& word) {
  const auto& cd = dc.cd;
  require_w0(cd, word);
  Report rep;
  const BiLaurent scalar = -BiLaurent::qt_pow(-cd.r * cd.hv, cd.h);
  for (int j = 0; j < cd.n; ++j) {
    WeightVector got = apply_T_word(dc, word, 1, root_vector(cd, j));
    WeightVector want(cd.n);
    want[dc.star[j]] = scalar;
    rep.expect(got == want, [&] {
      return cd.type.name() + " word (" + word_text(word) + "): T_w0 alpha_" + std::to_string(j + 1) +
             " != -q^-rh t^h alpha_" + std::to_string(dc.star[j] + 1);
    });
  }
  return rep;
}

Report verify_tw0(const DeformedCartan& dc) {
  Report rep;
  for (const auto& w : tw0_words(dc.cd)) rep.merge(verify_tw0(dc, w));
  return rep;
}

std::vector<std::pair<int, BiLaurent>> projective_filtration(const DeformedCartan& dc, const Word& word, int i) {
  require_w0(dc.cd, word);
  auto values = covector_walk(dc, word, i, 1);
  std::vector<std::pair<int, BiLaurent>> out;
  out.reserve(word.size());
  for (std::size_t k = 0; k < word.size(); ++k) out.emplace_back(word[k], std::move(values[k]));
  return out;
}

BiLaurent ibar_dim_braid(const DeformedCartan& dc, const Word& word, int i, int j) {
  BiLaurent s;
  for (const auto& [letter, mult] : projective_filtration(dc, word, i))
    if (letter == j) s += mult;
  return poly::bar(s);
}

PolyMatrix ibar_dim_braid_matrix(const DeformedCartan& dc, const Word& word) {
  const int n = dc.cd.n;
  PolyMatrix out(n, std::vector<BiLaurent>(n));
  for (int i = 0; i < n; ++i) {
    for (const auto& [letter, mult] : projective_filtration(dc, word, i)) out[i][letter] += mult;
    for (auto& e : out[i]) e = poly::bar(e);
  }
  return out;
}

namespace {

// Row i of C~ from the first-period sums S_ij (inverse letters).  The
// extended word repeats with letters i_k*, and one period of inverse
// letters acts as -X nu with X = q^{r h^vee} t^{-h}, so
// C~_ij = q^{d_j} t^-1 sum_m (-X)^m S_{i, nu^m(j)}.
std::vector<BiLaurent> ctilde_row(const DeformedCartan& dc, const Word& word, int i, int order) {
  const auto& cd = dc.cd;
  const int n = cd.n;
  const int R = cd.r * cd.hv;
  auto values = covector_walk(dc, word, i, -1);
  std::vector<BiLaurent> first(n);
  for (std::size_t k = 0; k < word.size(); ++k) first[word[k]] += values[k];

  std::vector<BiLaurent> row(n);
  for (int j = 0; j < n; ++j) {
    BiLaurent acc;
    BiLaurent x_pow = 1;
    int jm = j;
    for (int m = 0; m * R <= order; ++m) {
      acc += x_pow * first[jm];
      x_pow *= -BiLaurent::qt_pow(R, -cd.h);
      jm = dc.star[jm];
    }
    row[j] = (BiLaurent::qt_pow(cd.d[j], -1) * acc).truncated(order);
  }
  return row;
}

}  // namespace

BiLaurent ctilde_braid(const DeformedCartan& dc, const Word& word, int i, int j, int order) {
  require_w0(dc.cd, word);
  return ctilde_row(dc, word, i, order).at(j);
}

CTildeTable ctilde_braid_table(const DeformedCartan& dc, const Word& word, int order) {
  require_w0(dc.cd, word);
  PolyMatrix series;
  for (int i = 0; i < dc.cd.n; ++i) series.push_back(ctilde_row(dc, word, i, order));
  return make_table(dc, order, std::move(series));
}

Report check_braid_relations(const DeformedCartan& dc) {
  const auto& cd = dc.cd;
  Report rep;
  for (int k = 0; k < cd.n; ++k) {
    const WeightVector a = root_vector(cd, k);
    for (int i = 0; i < cd.n; ++i) {
      rep.expect(apply_T(dc, i, -1, apply_T(dc, i, 1, a)) == a, [&] {
        return cd.type.name() + ": T_" + std::to_string(i + 1) + " T_" + std::to_string(i + 1) + "^-1 != id";
      });
      for (int j = i + 1; j < cd.n; ++j) {
        const int m = braid_order(cd, i, j);
        Word lhs, rhs;
        for (int p = 0; p < m; ++p) {
          lhs.push_back(p % 2 == 0 ? i : j);
          rhs.push_back(p % 2 == 0 ? j : i);
        }
        rep.expect(apply_T_word(dc, lhs, 1, a) == apply_T_word(dc, rhs, 1, a), [&] {
          return cd.type.name() + ": braid relation (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                 ") fails on alpha_" + std::to_string(k + 1);
        });
      }
    }
  }
  return rep;
}

Report check_eqpair(const DeformedCartan& dc) {
  const auto& cd = dc.cd;
  Report rep;
  for (int i = 0; i < cd.n; ++i)
    for (int a = 0; a < cd.n; ++a)
      for (int b = a; b < cd.n; ++b) {
        WeightVector x = root_vector(cd, a);
        WeightVector y = root_vector(cd, b);
        rep.expect(pairing(dc, apply_T(dc, i, 1, x), y) == pairing(dc, x, apply_T(dc, i, 1, y)), [&] {
          return cd.type.name() + ": T_" + std::to_string(i + 1) + " not self-adjoint on (" + std::to_string(a + 1) +
                 "," + std::to_string(b + 1) + ")";
        });
      }
  return rep;
}

Report check_orientation(const DeformedCartan& dc, const Word& word) {
  Report rep;
  for (int i = 0; i < dc.cd.n; ++i) {
    auto plus = covector_walk(dc, word, i, 1);
    auto minus = covector_walk(dc, word, i, -1);
    for (std::size_t k = 0; k < word.size(); ++k)
      rep.expect(poly::bar(plus[k]) == minus[k], [&] {
        return dc.cd.type.name() + ": positive and inverse prefix values are not bar-related at step " +
               std::to_string(k + 1);
      });
  }
  return rep;
}

Report check_quadrant(const DeformedCartan& dc, const Word& word) {
  const auto& cd = dc.cd;
  Report rep;
  for (int i = 0; i < cd.n; ++i) {
    // Orbit of varpi_i under the reversed prefixes T_{i_{k-1}} ... T_{i_1}.
    WeightVector lam = root_vector(cd, i);
    for (std::size_t k = 0; k < word.size(); ++k) {
      lam = apply_T_fund(dc, word[k], lam);
      for (int j = 0; j < cd.n; ++j)
        rep.expect(in_quadrant(lam[j], 0), [&] {
          return cd.type.name() + ": varpi orbit leaves Z[q^-1,t] at step " + std::to_string(k + 1);
        });
    }
    for (const auto& [letter, mult] : projective_filtration(dc, word, i)) {
      rep.expect(in_quadrant(mult, cd.d[letter] - cd.d[i]), [&] {
        return cd.type.name() + ": multiplicity outside q^{d_j-d_i} Z[q^-1,t] for i=" + std::to_string(i + 1);
      });
    }
  }
  return rep;
}

Report check_dim_bounds(const DeformedCartan& dc, const PolyMatrix& ibar) {
  const auto& cd = dc.cd;
  const int R = cd.r * cd.hv;
  Report rep;
  for (int i = 0; i < cd.n; ++i)
    for (int j = 0; j < cd.n; ++j) {
      BiLaurent p = ibar[i][j].shifted(cd.d[j], -1);
      for (const auto& t : p.terms()) {
        bool ok = t.exp.u >= cd.d[i] && t.exp.v <= -1 && t.exp.u <= R - cd.d[i] && t.exp.v >= 1 - cd.h;
        rep.expect(ok, [&] {
          return cd.type.name() + " (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                 "): dim e_i Ibar_j term outside the bounding quadrants";
        });
      }
    }
  return rep;
}

}  // namespace cartanqt
