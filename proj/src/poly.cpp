#include "cartanqt/poly.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <climits>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace cartanqt {

namespace {

// Sorts by exponent, merges equal exponents, drops zeros.
std::vector<Term> canonicalize(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.exp < b.exp; });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().exp == t.exp) {
      out.back().coeff += t.coeff;
      if (out.back().coeff == 0) out.pop_back();
    } else if (t.coeff != 0) {
      out.push_back(std::move(t));
    }
  }
  return out;
}

std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && ia->exp < ib->exp)) {
      out.push_back(*ia++);
    } else if (ia == a.end() || ib->exp < ia->exp) {
      out.push_back(Term{ib->exp, subtract ? Integer(-ib->coeff) : ib->coeff});
      ++ib;
    } else {
      Integer c = subtract ? Integer(ia->coeff - ib->coeff) : Integer(ia->coeff + ib->coeff);
      if (c != 0) out.push_back(Term{ia->exp, std::move(c)});
      ++ia;
      ++ib;
    }
  }
  return out;
}

int checked_add(int a, int b) {
  long long s = static_cast<long long>(a) + b;
  assert(s > INT_MIN && s < INT_MAX && "exponent overflow");
  return static_cast<int>(s);
}

}  // namespace

BiLaurent::BiLaurent(int c) {
  if (c != 0) terms_.push_back(Term{{0, 0}, Integer(c)});
}

BiLaurent::BiLaurent(const Integer& c) {
  if (c != 0) terms_.push_back(Term{{0, 0}, c});
}

BiLaurent BiLaurent::monomial(const Integer& c, int u, int v) {
  if (c == 0) return {};
  return BiLaurent(std::vector<Term>{Term{{u, v}, c}});
}

BiLaurent BiLaurent::from_terms(std::vector<Term> terms) {
  return BiLaurent(canonicalize(std::move(terms)));
}

Integer BiLaurent::coeff(int u, int v) const {
  Monomial key{u, v};
  auto it = std::lower_bound(terms_.begin(), terms_.end(), key,
                             [](const Term& t, const Monomial& m) { return t.exp < m; });
  if (it != terms_.end() && it->exp == key) return it->coeff;
  return 0;
}

int BiLaurent::min_u() const {
  if (terms_.empty()) throw std::logic_error("min_u of zero polynomial");
  return terms_.front().exp.u;
}

int BiLaurent::max_u() const {
  if (terms_.empty()) throw std::logic_error("max_u of zero polynomial");
  return terms_.back().exp.u;
}

int BiLaurent::min_v() const {
  if (terms_.empty()) throw std::logic_error("min_v of zero polynomial");
  int m = INT_MAX;
  for (const auto& t : terms_) m = std::min(m, t.exp.v);
  return m;
}

int BiLaurent::max_v() const {
  if (terms_.empty()) throw std::logic_error("max_v of zero polynomial");
  int m = INT_MIN;
  for (const auto& t : terms_) m = std::max(m, t.exp.v);
  return m;
}

bool BiLaurent::is_q_only() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.exp.v == 0; });
}

bool BiLaurent::nonnegative() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.coeff > 0; });
}

BiLaurent BiLaurent::truncated(int max_u) const {
  auto end = std::find_if(terms_.begin(), terms_.end(),
                          [max_u](const Term& t) { return t.exp.u > max_u; });
  return BiLaurent(std::vector<Term>(terms_.begin(), end));
}

BiLaurent BiLaurent::q_window(int lo, int hi) const {
  std::vector<Term> out;
  for (const auto& t : terms_)
    if (t.exp.u >= lo && t.exp.u <= hi) out.push_back(t);
  return BiLaurent(std::move(out));
}

BiLaurent BiLaurent::shifted(int du, int dv) const {
  std::vector<Term> out = terms_;
  for (auto& t : out) {
    t.exp.u = checked_add(t.exp.u, du);
    t.exp.v = checked_add(t.exp.v, dv);
  }
  return BiLaurent(std::move(out));
}

BiLaurent BiLaurent::operator-() const {
  std::vector<Term> out = terms_;
  for (auto& t : out) t.coeff = -t.coeff;
  return BiLaurent(std::move(out));
}

BiLaurent& BiLaurent::operator+=(const BiLaurent& other) {
  if (other.terms_.empty()) return *this;
  terms_ = merge(terms_, other.terms_, false);
  return *this;
}

BiLaurent& BiLaurent::operator-=(const BiLaurent& other) {
  if (other.terms_.empty()) return *this;
  terms_ = merge(terms_, other.terms_, true);
  return *this;
}

BiLaurent& BiLaurent::operator*=(const BiLaurent& other) {
  *this = *this * other;
  return *this;
}

BiLaurent operator*(const BiLaurent& a, const BiLaurent& b) {
  return poly::mul_truncated(a, b, INT_MAX);
}

std::string BiLaurent::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    bool neg = t.coeff < 0;
    if (first) {
      if (neg) os << '-';
    } else {
      os << (neg ? " - " : " + ");
    }
    os << (neg ? Integer(-t.coeff) : t.coeff) << "*q^" << t.exp.u << "*t^" << t.exp.v;
    first = false;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const BiLaurent& p) { return os << p.to_string(); }

namespace poly {

BiLaurent add(const BiLaurent& a, const BiLaurent& b) { return a + b; }

BiLaurent mul(const BiLaurent& a, const BiLaurent& b) { return a * b; }

BiLaurent mul_truncated(const BiLaurent& a, const BiLaurent& b, int max_u) {
  if (a.is_zero() || b.is_zero()) return {};
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  std::vector<Term> raw;
  raw.reserve(ta.size() * tb.size());
  for (const auto& x : ta) {
    // tb is sorted by u, so stop once the product exceeds the bound.
    for (const auto& y : tb) {
      int u = checked_add(x.exp.u, y.exp.u);
      if (u > max_u) break;
      raw.push_back(Term{{u, checked_add(x.exp.v, y.exp.v)}, x.coeff * y.coeff});
    }
  }
  return BiLaurent::from_terms(std::move(raw));
}

BiLaurent qint(int k) {
  if (k == 0) return {};
  if (k < 0) return -qint(-k);
  std::vector<Term> terms;
  for (int e = k - 1; e >= 1 - k; e -= 2) terms.push_back(Term{{e, 0}, 1});
  return BiLaurent::from_terms(std::move(terms));
}

BiLaurent qint_ratio(int m, int d) {
  if (m < 0 || d < 1) throw std::invalid_argument("qint_ratio: need m >= 0 and d >= 1");
  std::vector<Term> terms;
  for (int a = 0; a < m; ++a) terms.push_back(Term{{(2 * a - m + 1) * d, 0}, 1});
  return BiLaurent::from_terms(std::move(terms));
}

BiLaurent bar(const BiLaurent& a) {
  std::vector<Term> terms;
  terms.reserve(a.size());
  for (const auto& t : a.terms()) terms.push_back(Term{{-t.exp.u, -t.exp.v}, t.coeff});
  return BiLaurent::from_terms(std::move(terms));
}

BiLaurent spec_t1(const BiLaurent& a) {
  std::vector<Term> terms;
  terms.reserve(a.size());
  for (const auto& t : a.terms()) terms.push_back(Term{{t.exp.u, 0}, t.coeff});
  return BiLaurent::from_terms(std::move(terms));
}

Integer eval_at_one(const BiLaurent& a) {
  Integer s = 0;
  for (const auto& t : a.terms()) s += t.coeff;
  return s;
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  BiLaurent run() {
    std::vector<Term> terms;
    skip_ws();
    if (at_end()) fail("empty input");
    bool first = true;
    while (true) {
      skip_ws();
      if (at_end()) break;
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      terms.push_back(parse_term(sign));
      first = false;
    }
    return BiLaurent::from_terms(std::move(terms));
  }

 private:
  Term parse_term(int sign) {
    Term term{{0, 0}, sign};
    bool have_factor = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      term.coeff *= parse_unsigned();
      have_factor = true;
    }
    while (true) {
      skip_ws();
      if (at_end()) break;
      char c = peek();
      if (c == '*') {
        if (!have_factor) fail("dangling '*'");
        ++pos_;
        skip_ws();
        c = peek();
        if (c != 'q' && c != 't') fail("expected 'q' or 't' after '*'");
      }
      if (c == 'q' || c == 't') {
        ++pos_;
        int e = 1;
        skip_ws();
        if (!at_end() && peek() == '^') {
          ++pos_;
          skip_ws();
          e = parse_signed_int();
        }
        (c == 'q' ? term.exp.u : term.exp.v) += e;
        have_factor = true;
      } else {
        break;
      }
    }
    if (!have_factor) fail("expected a term");
    return term;
  }

  Integer parse_unsigned() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return Integer(std::string(s_.substr(start, pos_ - start)));
  }

  int parse_signed_int() {
    int sign = 1;
    if (!at_end() && (peek() == '-' || peek() == '+')) {
      sign = peek() == '-' ? -1 : 1;
      ++pos_;
    }
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
    long long v = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (peek() - '0');
      if (v > INT_MAX) fail("exponent out of range");
      ++pos_;
    }
    return static_cast<int>(sign * v);
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }
  [[noreturn]] void fail(const char* what) const {
    throw std::invalid_argument("poly::parse: " + std::string(what) + " at offset " +
                                std::to_string(pos_) + " in \"" + std::string(s_) + "\"");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

BiLaurent parse(std::string_view text) {
  std::string_view trimmed = text;
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.front())))
    trimmed.remove_prefix(1);
  if (trimmed == "0") return {};
  return Parser(text).run();
}

}  // namespace poly

}  // namespace cartanqt
