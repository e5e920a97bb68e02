#include "cartanqt/verify.hpp"

#include "cartanqt/braid.hpp"
#include "cartanqt/deform.hpp"
#include "cartanqt/invariants.hpp"
#include "cartanqt/rmatrix.hpp"
#include "cartanqt/weyl.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <stdexcept>
#include <thread>

namespace cartanqt {

namespace {

struct Context {
  CartanData cd;
  DeformedCartan dc;
  CTildeTable tab;
  std::vector<Word> words;
  PolyMatrix ibar;

  Context(const FiniteType& t, int order)
      : cd(build(t)), dc(build_cqt(cd)), tab(invert(dc, order)), words(tw0_words(cd)), ibar(ibar_dim_matrix(tab)) {}
};

std::string ij(int i, int j) { return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")"; }

std::string label(int i, int k) { return "(" + std::to_string(i + 1) + "," + std::to_string(k) + ")"; }

// Symmetrized form with Gram matrix (d_i c_ij).
long long form(const CartanData& cd, const RootVec& x, const RootVec& y) {
  long long s = 0;
  for (int a = 0; a < cd.n; ++a)
    for (int b = 0; b < cd.n; ++b) s += x[a] * cd.b[a][b] * y[b];
  return s;
}

Report suite_cartan(const Context& c) {
  const auto& cd = c.cd;
  Report rep;
  std::string bad = audit(cd);
  rep.expect(bad.empty(), [&] { return cd.type.name() + ": " + bad; });
  const auto roots = positive_roots(cd);
  rep.expect(roots.size() * 2 == static_cast<std::size_t>(cd.n * cd.h),
             [&] { return cd.type.name() + ": h does not match 2|Phi+|/n"; });
  for (int i = 0; i < cd.n; ++i) {
    const int is = c.dc.star[i];
    rep.expect(c.dc.star[is] == i, [&] { return cd.type.name() + ": star is not an involution"; });
    for (int j = 0; j < cd.n; ++j)
      rep.expect(cd.c[is][c.dc.star[j]] == cd.c[i][j],
                 [&] { return cd.type.name() + ": star is not a diagram automorphism"; });
  }
  return rep;
}

Report suite_weyl(const Context& c) {
  const auto& cd = c.cd;
  Report rep;
  const auto roots = positive_roots(cd);
  for (const auto& w : c.words) {
    rep.expect(w.size() == roots.size(), [&] { return cd.type.name() + ": w0 word has the wrong length"; });
    for (const auto& r : roots) {
      RootVec img = apply_word(cd, w, r);
      rep.expect(std::all_of(img.begin(), img.end(), [](long long x) { return x <= 0; }),
                 [&] { return cd.type.name() + ": w0 keeps a positive root positive"; });
    }
  }
  for (int j = 0; j < cd.n; ++j) {
    Word w = longest_word_ending_at(cd, j);
    rep.expect(w.back() == j && is_longest_word(cd, w),
               [&] { return cd.type.name() + ": bad w0 word ending at " + std::to_string(j + 1); });
  }
  for (int i = 0; i < cd.n; ++i)
    for (std::size_t a = 0; a < roots.size(); a += 3)
      for (std::size_t b = a; b < roots.size(); b += 5) {
        RootVec x = reflect(cd, i, roots[a]);
        RootVec y = reflect(cd, i, roots[b]);
        rep.expect(form(cd, x, y) == form(cd, roots[a], roots[b]) && reflect(cd, i, x) == roots[a],
                   [&] { return cd.type.name() + ": reflection does not preserve the form"; });
      }
  return rep;
}

Report suite_properties(const Context& c) {
  Report rep = check_properties(c.tab);
  PolyMatrix prod = product_with_cqt(c.tab, c.dc);
  for (int i = 0; i < c.cd.n; ++i)
    for (int j = 0; j < c.cd.n; ++j)
      rep.expect(prod[i][j] == BiLaurent(i == j ? 1 : 0),
                 [&] { return c.cd.type.name() + " " + ij(i, j) + ": C~ C != id below the truncation"; });
  return rep;
}

Report suite_tw0(const Context& c) {
  Report rep;
  for (const auto& w : c.words) rep.merge(verify_tw0(c.dc, w));
  return rep;
}

Report suite_braid(const Context& c) {
  Report rep = check_braid_relations(c.dc);
  rep.merge(check_eqpair(c.dc));
  for (const auto& w : c.words) {
    rep.merge(check_orientation(c.dc, w));
    rep.merge(check_quadrant(c.dc, w));
  }
  rep.merge(check_dim_bounds(c.dc, c.ibar));
  return rep;
}

Report suite_pipeline(const Context& c) {
  Report rep;
  const std::string name = c.cd.type.name();
  for (const auto& w : c.words) {
    CTildeTable via_braid = ctilde_braid_table(c.dc, w, c.tab.order);
    for (int i = 0; i < c.cd.n; ++i)
      for (int j = 0; j < c.cd.n; ++j)
        rep.expect(via_braid.entry(i, j) == c.tab.entry(i, j),
                   [&] { return name + " " + ij(i, j) + ": braid pipeline != series inverse"; });
    PolyMatrix ib = ibar_dim_braid_matrix(c.dc, w);
    for (int i = 0; i < c.cd.n; ++i)
      for (int j = 0; j < c.cd.n; ++j)
        rep.expect(ib[i][j] == c.ibar[i][j],
                   [&] { return name + " " + ij(i, j) + ": Ibar from braid != Ibar from table"; });
  }
  return rep;
}

Report suite_goal(const Context& c) {
  Report rep;
  CTildeTable rt = reconstruct_ctilde(c.dc, c.ibar, c.tab.order);
  for (int i = 0; i < c.cd.n; ++i)
    for (int j = 0; j < c.cd.n; ++j)
      rep.expect(rt.entry(i, j) == c.tab.entry(i, j),
                 [&] { return c.cd.type.name() + " " + ij(i, j) + ": reconstruction != series inverse"; });
  rep.merge(duality_check(c.dc, c.ibar));
  return rep;
}

Report suite_euler(const Context& c) {
  const auto& cd = c.cd;
  Report rep;
  const BiLaurent x = BiLaurent::qt_pow(cd.r * cd.hv, -cd.h);
  for (int m : {1, 3}) {
    PolyMatrix p = euler_product_series(c.dc, c.ibar, m);
    BiLaurent x2m = 1;
    for (int s = 0; s < 2 * m; ++s) x2m *= x;
    for (int i = 0; i < cd.n; ++i)
      for (int j = 0; j < cd.n; ++j)
        rep.expect(p[i][j] == (i == j ? BiLaurent(1) - x2m : BiLaurent()), [&] {
          return cd.type.name() + " " + ij(i, j) + ": Euler identity fails with " + std::to_string(m) + " terms";
        });
  }
  return rep;
}

Report suite_rigidity(const Context& c, int max_k) {
  const auto& cd = c.cd;
  Report rep;
  const std::string name = cd.type.name();
  for (int i = 0; i < cd.n; ++i)
    for (int k = 1; k <= max_k; ++k) {
      BiLaurent e = ext1_dim(c.tab, i, k, i, k).value;
      rep.expect(e.coeff(0, 0) == 0, [&] { return name + " " + label(i, k) + ": self-extension is not rigid"; });
    }
  for (int i = 0; i < cd.n; ++i)
    for (int j = 0; j < cd.n; ++j)
      for (int k = 1; k <= max_k; ++k)
        for (int l = 1; l <= max_k; ++l) {
          BiLaurent e = ext1_dim(c.tab, i, k, j, l).value;
          rep.expect(e == ext1_dim(c.tab, j, l, i, k).value,
                     [&] { return name + " " + label(i, k) + label(j, l) + ": ext1 not symmetric"; });
          rep.expect(e.nonnegative(), [&] { return name + " " + label(i, k) + label(j, l) + ": negative ext1"; });
          if (is_club(cd, i, k, j, l)) {
            BiLaurent diff = ext1_dim_uncorrected(c.tab, i, k, j, l).value - e;
            rep.expect(diff == poly::bar(delta(cd, i, j)) && diff.nonnegative(),
                       [&] { return name + " " + label(i, k) + label(j, l) + ": Delta remainder is not positive"; });
          }
        }
  return rep;
}

Report suite_positivity(const Context& c, int max_k, int max_level) {
  const auto& cd = c.cd;
  Report rep;
  const std::string name = cd.type.name();
  for (const auto& w : c.words)
    for (int i = 0; i < cd.n; ++i)
      for (const auto& [letter, mult] : projective_filtration(c.dc, w, i))
        rep.expect(mult.nonnegative(), [&] { return name + ": negative filtration multiplicity for P_" + std::to_string(i + 1); });
  for (int i = 0; i < cd.n; ++i)
    for (int j = 0; j < cd.n; ++j) {
      rep.expect(c.ibar[i][j].nonnegative(), [&] { return name + " " + ij(i, j) + ": negative Ibar dimension"; });
      if (i == j)
        rep.expect(c.ibar[i][i].is_zero() || poly::spec_t1(c.ibar[i][i]).min_u() >= 0,
                   [&] { return name + " " + ij(i, i) + ": e_i Ibar_i is not non-negatively graded"; });
      for (int k = 1; k <= max_k; ++k)
        rep.expect(kernel_dim(c.tab, i, k, j).value.nonnegative(),
                   [&] { return name + " " + label(i, k) + ": negative kernel dimension"; });
    }
  for (int i = 0; i < cd.n; ++i)
    for (int j = 0; j < cd.n; ++j)
      for (int k = 1; k <= max_level; ++k)
        for (int l = 1; l <= max_level; ++l) {
          bool ok = true;
          try {
            divisor_kr(c.tab, {i, k, 0}, {j, l, 0});
          } catch (const std::logic_error&) {
            ok = false;
          }
          rep.expect(ok, [&] { return name + " " + label(i, k) + label(j, l) + ": negative divisor multiplicity"; });
        }
  // Kernels at levels l r / d_i against the grouped projective filtration.
  const Word& w = c.words.front();
  for (int j = 0; j < cd.n; ++j) {
    std::vector<BiLaurent> grouped(cd.n);
    for (const auto& [letter, mult] : projective_filtration(c.dc, w, j)) grouped[letter] += mult;
    for (int i = 0; i < cd.n; ++i)
      for (int ell = 1; ell <= 2; ++ell) {
        const int k = ell * cd.r / cd.d[i];
        BiLaurent want = BiLaurent::q_pow(cd.d[i]) * poly::qint_ratio(k, cd.d[i]) * poly::bar(poly::spec_t1(grouped[i]));
        rep.expect(kernel_dim(c.tab, i, k, j).value == want,
                   [&] { return name + " " + label(i, k) + ": kernel dimension disagrees with the filtration"; });
      }
  }
  return rep;
}

Report suite_conjecture(const Context& c, int max_level) {
  const auto& cd = c.cd;
  Report rep = verify_evid(c.tab, max_level);
  const std::string name = cd.type.name();
  for (int i = 0; i < cd.n; ++i)
    for (int j = 0; j < cd.n; ++j)
      for (int k = 1; k <= std::min(max_level, 2); ++k) {
        DivisorPoly base = divisor_kr(c.tab, {i, k, 0}, {j, k, 0});
        for (int p : {-3, 2})
          rep.expect(divisor_kr(c.tab, {i, k, p}, {j, k, 1}) == base.shifted(p - 1),
                     [&] { return name + " " + label(i, k) + label(j, k) + ": spectral shift rule fails"; });
        rep.expect(pole_order(c.tab, {i, k, 5}, {i, k, 5}) == 0,
                   [&] { return name + " " + label(i, k) + ": nonzero pole order at equal shifts"; });
      }
  return rep;
}

Report dispatch(const Context& c, const std::string& suite, const VerifyOptions& opts) {
  if (suite == "cartan") return suite_cartan(c);
  if (suite == "weyl") return suite_weyl(c);
  if (suite == "properties") return suite_properties(c);
  if (suite == "tw0") return suite_tw0(c);
  if (suite == "braid") return suite_braid(c);
  if (suite == "pipeline") return suite_pipeline(c);
  if (suite == "goal") return suite_goal(c);
  if (suite == "euler") return suite_euler(c);
  if (suite == "rigidity") return suite_rigidity(c, opts.max_ext_level);
  if (suite == "positivity") return suite_positivity(c, opts.max_ext_level, opts.max_level);
  if (suite == "conjecture") return suite_conjecture(c, opts.max_level);
  throw std::invalid_argument("unknown verify suite: " + suite);
}

int effective_order(const CartanData& cd, const std::optional<int>& order) {
  int floor = 2 * cd.r * cd.hv;
  return std::max(order.value_or(default_order(cd)), floor);
}

TypeResult verify_type(const FiniteType& t, const std::vector<std::string>& suites, const VerifyOptions& opts) {
  auto start = std::chrono::steady_clock::now();
  TypeResult res;
  res.type = t;
  CartanData cd = build(t);
  res.order = effective_order(cd, opts.order);
  Context ctx(t, res.order);
  for (const auto& s : suites) res.suites.push_back({s, dispatch(ctx, s, opts)});
  res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return res;
}

}  // namespace

const std::vector<std::string>& verify_suites() {
  static const std::vector<std::string> names{"cartan",   "weyl",  "properties", "tw0",        "braid",     "pipeline",
                                              "goal",     "euler", "rigidity",   "positivity", "conjecture"};
  return names;
}

Report TypeResult::total() const {
  Report r;
  for (const auto& s : suites) r.merge(s.report, type.name() + " " + s.suite);
  return r;
}

Report run_suite(const FiniteType& type, const std::string& suite, int order, const VerifyOptions& opts) {
  Context ctx(type, effective_order(build(type), order));
  return dispatch(ctx, suite, opts);
}

std::vector<TypeResult> run_verify(const VerifyOptions& opts) {
  std::vector<std::string> suites = opts.suites.empty() ? verify_suites() : opts.suites;
  for (const auto& s : suites)
    if (std::find(verify_suites().begin(), verify_suites().end(), s) == verify_suites().end())
      throw std::invalid_argument("unknown verify suite: " + s);

  std::vector<TypeResult> results(opts.types.size());
  unsigned jobs = opts.jobs ? opts.jobs : std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min<unsigned>(jobs, static_cast<unsigned>(opts.types.size()));
  if (jobs <= 1) {
    for (std::size_t k = 0; k < opts.types.size(); ++k) results[k] = verify_type(opts.types[k], suites, opts);
    return results;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(jobs);
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < jobs; ++w)
    pool.emplace_back([&, w] {
      try {
        for (std::size_t k; (k = next++) < opts.types.size();) results[k] = verify_type(opts.types[k], suites, opts);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return results;
}

}  // namespace cartanqt
