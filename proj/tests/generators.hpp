#pragma once

// Seeded random inputs for the property tests.

#include "cartanqt/braid.hpp"
#include "cartanqt/poly.hpp"

#include <random>

namespace gen {

using cartanqt::BiLaurent;

class Source {
 public:
  explicit Source(std::uint64_t seed) : rng_(seed) {}

  int range(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  /// Up to max_terms terms with exponents in [-spread, spread] and small
  /// coefficients; occasionally a very large one to exercise cpp_int.
  BiLaurent poly(int max_terms = 5, int spread = 6) {
    std::vector<cartanqt::Term> terms;
    const int n = range(0, max_terms);
    for (int k = 0; k < n; ++k) {
      cartanqt::Integer c = range(-4, 4);
      if (range(0, 19) == 0) c *= cartanqt::Integer(1) << 90;
      terms.push_back({{range(-spread, spread), range(-spread, spread)}, c});
    }
    return BiLaurent::from_terms(std::move(terms));
  }

  BiLaurent q_poly(int max_terms = 5, int spread = 6) { return cartanqt::poly::spec_t1(poly(max_terms, spread)); }

  cartanqt::RootVec root_vec(int n, int bound = 5) {
    cartanqt::RootVec v(n);
    for (auto& x : v) x = range(-bound, bound);
    return v;
  }

  cartanqt::WeightVector weight(int n, int max_terms = 3, int spread = 4) {
    cartanqt::WeightVector w(n);
    for (auto& x : w) x = poly(max_terms, spread);
    return w;
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace gen
