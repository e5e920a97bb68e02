#include "cartanqt/cartan.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace cartanqt {

namespace {

char family_letter(Family f) { return "ABCDEFG"[static_cast<int>(f)]; }

std::vector<std::pair<int, int>> edges(const FiniteType& t) {
  const int n = t.rank;
  std::vector<std::pair<int, int>> e;
  switch (t.family) {
    case Family::A:
    case Family::B:
    case Family::C:
    case Family::F:
    case Family::G:
      for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
      break;
    case Family::D:
      for (int i = 0; i + 2 < n - 1; ++i) e.emplace_back(i, i + 1);
      e.emplace_back(n - 3, n - 2);
      e.emplace_back(n - 3, n - 1);
      break;
    case Family::E:
      // Chain 1..n-1 with node n attached to node 3 (E6), 4 (E7) or 5 (E8).
      for (int i = 0; i + 2 < n; ++i) e.emplace_back(i, i + 1);
      e.emplace_back(n == 6 ? 2 : n == 7 ? 3 : 4, n - 1);
      break;
  }
  return e;
}

std::vector<int> symmetrizer(const FiniteType& t) {
  const int n = t.rank;
  switch (t.family) {
    case Family::B: {
      std::vector<int> d(n, 2);
      d[n - 1] = 1;
      return d;
    }
    case Family::C: {
      std::vector<int> d(n, 1);
      d[n - 1] = 2;
      return d;
    }
    case Family::F:
      return {2, 2, 1, 1};
    case Family::G:
      return {3, 1};
    default:
      return std::vector<int>(n, 1);
  }
}

}  // namespace

std::string FiniteType::name() const { return std::string(1, family_letter(family)) + std::to_string(rank); }

bool FiniteType::admissible() const {
  switch (family) {
    case Family::A: return rank >= 1;
    case Family::B:
    case Family::C: return rank >= 2;
    case Family::D: return rank >= 4;
    case Family::E: return rank >= 6 && rank <= 8;
    case Family::F: return rank == 4;
    case Family::G: return rank == 2;
  }
  return false;
}

FiniteType FiniteType::parse(std::string_view s, int rank) {
  if (s.empty()) throw std::invalid_argument("empty type");
  char f = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  const std::string_view letters = "ABCDEFG";
  auto pos = letters.find(f);
  if (pos == std::string_view::npos) throw std::invalid_argument("unknown type family: " + std::string(s));
  FiniteType t{static_cast<Family>(pos), 0};
  std::string_view digits = s.substr(1);
  if (!digits.empty()) {
    if (!std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) ||
        digits.size() > 3)
      throw std::invalid_argument("malformed type: " + std::string(s));
    t.rank = std::stoi(std::string(digits));
    if (rank != 0 && rank != t.rank) throw std::invalid_argument("conflicting rank for " + std::string(s));
  } else if (rank != 0) {
    t.rank = rank;
  } else if (t.family == Family::F) {
    t.rank = 4;
  } else if (t.family == Family::G) {
    t.rank = 2;
  } else {
    throw std::invalid_argument("rank required for type " + std::string(s));
  }
  if (!t.admissible()) throw std::invalid_argument("inadmissible type " + t.name());
  return t;
}

std::vector<FiniteType> all_types(int max_rank) {
  std::vector<FiniteType> out;
  for (int n = 1; n <= std::min(max_rank, 8); ++n) out.push_back({Family::A, n});
  for (int n = 2; n <= std::min(max_rank, 8); ++n) out.push_back({Family::B, n});
  for (int n = 2; n <= std::min(max_rank, 8); ++n) out.push_back({Family::C, n});
  for (int n = 4; n <= std::min(max_rank, 8); ++n) out.push_back({Family::D, n});
  for (int n = 6; n <= std::min(max_rank, 8); ++n) out.push_back({Family::E, n});
  if (max_rank >= 4) out.push_back({Family::F, 4});
  if (max_rank >= 2) out.push_back({Family::G, 2});
  return out;
}

CartanData build(const FiniteType& t) {
  if (!t.admissible()) throw std::invalid_argument("inadmissible type " + t.name());
  CartanData cd;
  cd.type = t;
  cd.n = t.rank;
  cd.d = symmetrizer(t);
  cd.c.assign(cd.n, std::vector<int>(cd.n, 0));
  for (int i = 0; i < cd.n; ++i) cd.c[i][i] = 2;
  for (auto [i, j] : edges(t)) {
    // c_ij = -ceil(d_j / d_i)
    cd.c[i][j] = -((cd.d[j] + cd.d[i] - 1) / cd.d[i]);
    cd.c[j][i] = -((cd.d[i] + cd.d[j] - 1) / cd.d[j]);
  }
  cd.b.assign(cd.n, std::vector<int>(cd.n, 0));
  for (int i = 0; i < cd.n; ++i)
    for (int j = 0; j < cd.n; ++j) cd.b[i][j] = cd.d[i] * cd.c[i][j];

  const int n = cd.n;
  switch (t.family) {
    case Family::A: cd.r = 1; cd.h = n + 1; cd.hv = n + 1; break;
    case Family::B: cd.r = 2; cd.h = 2 * n; cd.hv = 2 * n - 1; break;
    case Family::C: cd.r = 2; cd.h = 2 * n; cd.hv = n + 1; break;
    case Family::D: cd.r = 1; cd.h = 2 * n - 2; cd.hv = 2 * n - 2; break;
    case Family::E: cd.r = 1; cd.h = cd.hv = (n == 6 ? 12 : n == 7 ? 18 : 30); break;
    case Family::F: cd.r = 2; cd.h = 12; cd.hv = 9; break;
    case Family::G: cd.r = 3; cd.h = 6; cd.hv = 4; break;
  }
  return cd;
}

std::vector<int> neighbors(const CartanData& cd, int i) {
  if (i < 0 || i >= cd.n) throw std::out_of_range("node index out of range");
  std::vector<int> out;
  for (int j = 0; j < cd.n; ++j)
    if (cd.adjacent(i, j)) out.push_back(j);
  return out;
}

std::string audit(const CartanData& cd) {
  const int n = cd.n;
  int g = 0;
  for (int i = 0; i < n; ++i) {
    if (cd.d[i] != 1 && cd.d[i] != cd.r) return "d_i not in {1, r}";
    g = std::gcd(g, cd.d[i]);
    if (cd.r % cd.d[i] != 0) return "r/d_i not an integer";
    for (int j = 0; j < n; ++j) {
      int c = cd.c[i][j];
      if (i == j && c != 2) return "c_ii != 2";
      if (i != j && (c > 0 || c < -3)) return "off-diagonal entry out of range";
      if ((c == 0) != (cd.c[j][i] == 0)) return "zero pattern not symmetric";
      if (cd.b[i][j] != cd.d[i] * c) return "b != DC";
      if (cd.b[i][j] != cd.b[j][i]) return "DC not symmetric";
      if (i != j && c < 0 && cd.b[i][j] != -std::max(cd.d[i], cd.d[j])) return "b_ij != -max(d_i,d_j)";
    }
  }
  if (g != 1) return "symmetrizer not minimal";
  return {};
}

}  // namespace cartanqt
