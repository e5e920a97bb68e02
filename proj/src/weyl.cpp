#include "cartanqt/weyl.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>

namespace cartanqt {

namespace {

void check_index(const CartanData& cd, int i) {
  if (i < 0 || i >= cd.n) throw std::out_of_range("node index out of range");
}

// Greedy descent in fundamental-weight coordinates starting from rho.
// When first >= 0 that letter is taken first.  Returns the picks in order.
Word greedy_descent(const CartanData& cd, int first) {
  std::vector<long long> lam(cd.n, 1);
  Word picks;
  auto step = [&](int i) {
    long long li = lam[i];
    for (int m = 0; m < cd.n; ++m) lam[m] -= li * cd.c[m][i];
    picks.push_back(i);
  };
  if (first >= 0) step(first);
  while (true) {
    auto it = std::find_if(lam.begin(), lam.end(), [](long long x) { return x > 0; });
    if (it == lam.end()) break;
    step(static_cast<int>(it - lam.begin()));
  }
  return picks;
}

std::size_t num_positive_roots(const CartanData& cd) {
  return static_cast<std::size_t>(cd.n) * cd.h / 2;
}

}  // namespace

RootVec simple_root(const CartanData& cd, int i) {
  check_index(cd, i);
  RootVec v(cd.n, 0);
  v[i] = 1;
  return v;
}

RootVec reflect(const CartanData& cd, int i, const RootVec& v) {
  check_index(cd, i);
  RootVec out = v;
  long long s = 0;
  for (int j = 0; j < cd.n; ++j) s += cd.c[i][j] * v[j];
  out[i] -= s;
  return out;
}

RootVec apply_word(const CartanData& cd, const Word& w, const RootVec& v) {
  RootVec out = v;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out = reflect(cd, *it, out);
  return out;
}

std::vector<RootVec> positive_roots(const CartanData& cd) {
  std::set<RootVec> seen;
  std::deque<RootVec> queue;
  for (int i = 0; i < cd.n; ++i) {
    seen.insert(simple_root(cd, i));
    queue.push_back(simple_root(cd, i));
  }
  while (!queue.empty()) {
    RootVec v = queue.front();
    queue.pop_front();
    for (int i = 0; i < cd.n; ++i) {
      RootVec w = reflect(cd, i, v);
      if (seen.insert(w).second) queue.push_back(w);
    }
  }
  std::vector<RootVec> pos;
  for (const auto& v : seen)
    if (std::all_of(v.begin(), v.end(), [](long long x) { return x >= 0; })) pos.push_back(v);
  std::sort(pos.begin(), pos.end(), [](const RootVec& a, const RootVec& b) {
    long long ha = std::accumulate(a.begin(), a.end(), 0LL);
    long long hb = std::accumulate(b.begin(), b.end(), 0LL);
    return ha != hb ? ha < hb : a < b;
  });
  return pos;
}

Word longest_word(const CartanData& cd) {
  Word w = greedy_descent(cd, -1);
  if (w.size() != num_positive_roots(cd)) throw std::logic_error("greedy descent length mismatch");
  return w;
}

int braid_order(const CartanData& cd, int i, int j) {
  switch (cd.c[i][j] * cd.c[j][i]) {
    case 0: return 2;
    case 1: return 3;
    case 2: return 4;
    case 3: return 6;
  }
  throw std::logic_error("unexpected Cartan product");
}

std::vector<Word> braid_moves(const CartanData& cd, const Word& w) {
  std::vector<Word> out;
  const int len = static_cast<int>(w.size());
  for (int p = 0; p + 1 < len; ++p) {
    int i = w[p];
    int j = w[p + 1];
    if (i == j) continue;
    int m = braid_order(cd, i, j);
    if (p + m > len) continue;
    bool alternating = true;
    for (int k = 0; k < m && alternating; ++k) alternating = w[p + k] == (k % 2 == 0 ? i : j);
    if (!alternating) continue;
    Word v = w;
    for (int k = 0; k < m; ++k) v[p + k] = (k % 2 == 0 ? j : i);
    out.push_back(std::move(v));
  }
  return out;
}

bool is_longest_word(const CartanData& cd, const Word& w) {
  if (w.size() != num_positive_roots(cd)) return false;
  std::vector<bool> hit(cd.n, false);
  for (int i = 0; i < cd.n; ++i) {
    RootVec v = apply_word(cd, w, simple_root(cd, i));
    int target = -1;
    for (int k = 0; k < cd.n; ++k) {
      if (v[k] == -1 && target < 0) {
        target = k;
      } else if (v[k] != 0) {
        return false;
      }
    }
    if (target < 0 || hit[target]) return false;
    hit[target] = true;
  }
  return true;
}

Word longest_word_ending_at(const CartanData& cd, int j) {
  check_index(cd, j);
  Word start = longest_word(cd);
  if (start.back() == j) return start;
  if (cd.n <= 4) {
    std::set<Word> seen{start};
    std::deque<Word> queue{start};
    while (!queue.empty()) {
      Word w = std::move(queue.front());
      queue.pop_front();
      for (auto& v : braid_moves(cd, w)) {
        if (v.back() == j) {
          if (!is_longest_word(cd, v)) throw std::logic_error("braid search produced a non-w0 word");
          return v;
        }
        if (seen.insert(v).second) queue.push_back(std::move(v));
      }
    }
    throw std::logic_error("no reduced word ends at the requested letter");
  }
  Word w = greedy_descent(cd, j);
  std::reverse(w.begin(), w.end());
  if (w.back() != j || !is_longest_word(cd, w)) throw std::logic_error("suffix-forced descent failed");
  return w;
}

std::vector<int> star(const CartanData& cd) {
  Word w = longest_word(cd);
  std::vector<int> s(cd.n, -1);
  for (int i = 0; i < cd.n; ++i) {
    RootVec v = apply_word(cd, w, simple_root(cd, i));
    for (int k = 0; k < cd.n; ++k) {
      if (v[k] == -1 && s[i] < 0) {
        s[i] = k;
      } else if (v[k] != 0) {
        throw std::logic_error("w0(alpha_i) is not a negative simple root");
      }
    }
    if (s[i] < 0) throw std::logic_error("w0(alpha_i) is not a negative simple root");
  }
  return s;
}

}  // namespace cartanqt
