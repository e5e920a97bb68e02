#pragma once

// Sparse bivariate Laurent polynomials in q and t with arbitrary-size
// integer coefficients.  Univariate q-polynomials are the t-degree-0 case.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cartanqt {

using Integer = boost::multiprecision::cpp_int;

/// Exponent pair of q^u t^v.  Ordered lexicographically by (u, v).
struct Monomial {
  int u = 0;
  int v = 0;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

struct Term {
  Monomial exp;
  Integer coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Element of Z[q^{+-1}, t^{+-1}].
///
/// Terms are kept sorted by (u, v) with no zero coefficient stored, so two
/// values compare equal iff they are the same polynomial.
class BiLaurent {
 public:
  BiLaurent() = default;
  BiLaurent(int c);  // NOLINT(google-explicit-constructor): constants read naturally
  BiLaurent(const Integer& c);  // NOLINT

  static BiLaurent monomial(const Integer& c, int u, int v = 0);
  static BiLaurent q_pow(int u) { return monomial(1, u, 0); }
  static BiLaurent qt_pow(int u, int v) { return monomial(1, u, v); }

  /// Builds a value from arbitrary (possibly repeated, possibly zero) terms.
  static BiLaurent from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Coefficient of q^u t^v (zero when absent).
  Integer coeff(int u, int v) const;

  int min_u() const;
  int max_u() const;
  int min_v() const;
  int max_v() const;

  /// True when every stored term has t-exponent 0.
  bool is_q_only() const;
  bool nonnegative() const;

  /// Drops all terms with q-exponent greater than max_u.
  BiLaurent truncated(int max_u) const;
  /// Keeps the terms with lo <= u <= hi.
  BiLaurent q_window(int lo, int hi) const;
  /// Multiplication by q^du t^dv.
  BiLaurent shifted(int du, int dv) const;

  BiLaurent operator-() const;
  BiLaurent& operator+=(const BiLaurent& other);
  BiLaurent& operator-=(const BiLaurent& other);
  BiLaurent& operator*=(const BiLaurent& other);

  friend BiLaurent operator+(BiLaurent a, const BiLaurent& b) { return a += b; }
  friend BiLaurent operator-(BiLaurent a, const BiLaurent& b) { return a -= b; }
  friend BiLaurent operator*(const BiLaurent& a, const BiLaurent& b);
  friend bool operator==(const BiLaurent&, const BiLaurent&) = default;

  /// Canonical text form, e.g. "1*q^-1*t^1 + 1*q^1*t^-1"; zero is "0".
  std::string to_string() const;

 private:
  explicit BiLaurent(std::vector<Term> sorted_terms) : terms_(std::move(sorted_terms)) {}

  std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const BiLaurent& p);

namespace poly {

BiLaurent add(const BiLaurent& a, const BiLaurent& b);
BiLaurent mul(const BiLaurent& a, const BiLaurent& b);

/// Product with every term of q-degree above max_u discarded.
BiLaurent mul_truncated(const BiLaurent& a, const BiLaurent& b, int max_u);

/// The q-integer [k]_q = (q^k - q^-k)/(q - q^-1).
BiLaurent qint(int k);

/// [m*d]_q / [d]_q = sum_{a=0}^{m-1} q^{(2a-m+1)d}, for m >= 0, d >= 1.
BiLaurent qint_ratio(int m, int d);

/// a(q,t) -> a(q^-1, t^-1).
BiLaurent bar(const BiLaurent& a);

/// a(q,t) -> a(q,1).
BiLaurent spec_t1(const BiLaurent& a);

/// Value at q = t = 1.
Integer eval_at_one(const BiLaurent& a);

/// Parses the text form produced by BiLaurent::to_string().  Also accepts
/// the abbreviated forms "q", "t^-2", "3*q^2", "-q*t" and "q^2 t^-1".
/// Throws std::invalid_argument on malformed input.
BiLaurent parse(std::string_view text);

}  // namespace poly

}  // namespace cartanqt
