#include "cartanqt/cli.hpp"

#include "cartanqt/braid.hpp"
#include "cartanqt/deform.hpp"
#include "cartanqt/invariants.hpp"
#include "cartanqt/json_io.hpp"
#include "cartanqt/rmatrix.hpp"
#include "cartanqt/verify.hpp"
#include "cartanqt/weyl.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>

namespace cartanqt::cli {

namespace {

using json_io::Json;

struct TypeArgs {
  std::string type;
  int rank = 0;
};

struct Args {
  TypeArgs t;
  std::optional<int> order;
  bool t1 = false;
  bool json = false;
  bool csv = false;
  std::string via = "series";
  int i = 0, j = 0, k = 1, l = 1, p = 0, s = 0;
  std::optional<int> end;
  std::string suite;
  int max_rank = 8;
  int max_level = 4;
  unsigned jobs = 0;
  bool verbose = false;
};

void add_type(CLI::App* sub, TypeArgs& t) {
  sub->add_option("--type", t.type, "Type, e.g. C3, G2, or a family letter with --rank")->required();
  sub->add_option("--rank", t.rank, "Rank, when --type is a bare family letter")->check(CLI::PositiveNumber);
}

void add_order(CLI::App* sub, Args& a) {
  sub->add_option("--order", a.order, "Truncation order in q (default 2 r h^vee + 2)")->check(CLI::PositiveNumber);
}

CartanData type_of(const TypeArgs& t) { return build(FiniteType::parse(t.type, t.rank)); }

int node(const CartanData& cd, int one_based, const char* flag) {
  if (one_based < 1 || one_based > cd.n)
    throw std::invalid_argument(std::string(flag) + " must lie in 1.." + std::to_string(cd.n) + " for " +
                                cd.type.name());
  return one_based - 1;
}

int level(int k, const char* flag) {
  if (k < 1) throw std::invalid_argument(std::string(flag) + " must be positive");
  return k;
}

std::optional<int> env_order() {
  const char* raw = std::getenv("CARTANQT_ORDER");
  if (!raw || !*raw) return std::nullopt;
  std::string s(raw);
  if (!std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }) || s.size() > 6 || std::stoi(s) < 1)
    throw std::invalid_argument("CARTANQT_ORDER must be a positive integer");
  return std::stoi(s);
}

// Flag, then environment, then the default; derived invariants need at
// least one full quasi-period.
int order_for(const CartanData& cd, const std::optional<int>& flag, bool derived) {
  std::optional<int> chosen = flag ? flag : env_order();
  int n = chosen.value_or(default_order(cd));
  return derived ? std::max(n, 2 * cd.r * cd.hv) : n;
}

void print(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

int cmd_cartan(const Args& a, std::ostream& out) {
  CartanData cd = type_of(a.t);
  std::vector<int> st = star(cd);
  if (a.json) {
    Json j = {{"type", cd.type.name()}, {"rank", cd.n}, {"r", cd.r}, {"h", cd.h}, {"hv", cd.hv},
              {"d", cd.d}, {"cartan", cd.c}};
    Json sj = Json::array();
    for (int x : st) sj.push_back(x + 1);
    j["star"] = sj;
    print(out, j);
    return 0;
  }
  out << cd.type.name() << "  r=" << cd.r << " h=" << cd.h << " h^vee=" << cd.hv << "\n";
  out << "d =";
  for (int x : cd.d) out << " " << x;
  out << "\nstar =";
  for (int x : st) out << " " << x + 1;
  out << "\n";
  for (const auto& row : cd.c) {
    for (int x : row) out << std::setw(3) << x;
    out << "\n";
  }
  return 0;
}

int cmd_ctilde(const Args& a, std::ostream& out) {
  CartanData cd = type_of(a.t);
  DeformedCartan dc = build_cqt(cd);
  const int order = order_for(cd, a.order, false);
  CTildeTable tab = a.via == "braid" ? ctilde_braid_table(dc, tw0_words(cd).front(), order) : invert(dc, order);
  if (a.json) {
    print(out, json_io::to_json(tab, a.t1));
    return 0;
  }
  if (a.csv) {
    out << (a.t1 ? "i,j,u,c\n" : "i,j,u,v,c\n");
    for (int i = 0; i < cd.n; ++i)
      for (int j = 0; j < cd.n; ++j) {
        const BiLaurent e = a.t1 ? tab.entry_q(i, j) : tab.entry(i, j);
        for (const auto& term : e.terms()) {
          out << i + 1 << "," << j + 1 << "," << term.exp.u << ",";
          if (!a.t1) out << term.exp.v << ",";
          out << term.coeff << "\n";
        }
      }
    return 0;
  }
  out << "# " << cd.type.name() << ", q-order " << order << "\n";
  for (int i = 0; i < cd.n; ++i)
    for (int j = 0; j < cd.n; ++j)
      out << "c~[" << i + 1 << "," << j + 1 << "] = " << (a.t1 ? tab.entry_q(i, j) : tab.entry(i, j)) << "\n";
  return 0;
}

int emit_dim(const Args& a, DimPoly d, std::ostream& out) {
  if (a.t1) d.value = poly::spec_t1(d.value);
  if (a.json)
    print(out, json_io::to_json(d));
  else
    out << d.value << "\n";
  return 0;
}

int cmd_ibar(const Args& a, std::ostream& out) {
  CartanData cd = type_of(a.t);
  const int i = node(cd, a.i, "--i"), j = node(cd, a.j, "--j");
  CTildeTable tab = invert(build_cqt(cd), order_for(cd, a.order, true));
  return emit_dim(a, ibar_dim(tab, i, j), out);
}

int cmd_kernel(const Args& a, std::ostream& out) {
  CartanData cd = type_of(a.t);
  const int i = node(cd, a.i, "--i"), j = node(cd, a.j, "--j");
  CTildeTable tab = invert(build_cqt(cd), order_for(cd, a.order, true));
  return emit_dim(a, kernel_dim(tab, i, level(a.k, "--k"), j), out);
}

int cmd_ext1(const Args& a, std::ostream& out) {
  CartanData cd = type_of(a.t);
  const int i = node(cd, a.i, "--i"), j = node(cd, a.j, "--j");
  CTildeTable tab = invert(build_cqt(cd), order_for(cd, a.order, true));
  return emit_dim(a, ext1_dim(tab, i, level(a.k, "--k"), j, level(a.l, "--l")), out);
}

int cmd_divisor(const Args& a, std::ostream& out) {
  CartanData cd = type_of(a.t);
  KRLabel x{node(cd, a.i, "--i"), level(a.k, "--k"), a.p};
  KRLabel y{node(cd, a.j, "--j"), level(a.l, "--l"), a.s};
  CTildeTable tab = invert(build_cqt(cd), order_for(cd, a.order, true));
  ResolvedDivisor res = resolved_divisor(tab, x, y);
  Integer pole = pole_order(tab, x, y);
  if (a.json) {
    Json j = json_io::to_json(res.divisor);
    j["source"] = source_name(res.source);
    j["pole_order"] = json_io::integer_to_json(pole);
    print(out, j);
    return 0;
  }
  out << res.divisor.to_string() << "\n";
  out << "source: " << source_name(res.source) << "\n";
  out << "pole order at z=1: " << pole << "\n";
  return 0;
}

int cmd_w0(const Args& a, std::ostream& out) {
  CartanData cd = type_of(a.t);
  Word w = a.end ? longest_word_ending_at(cd, node(cd, *a.end, "--end")) : longest_word(cd);
  if (a.json) {
    print(out, json_io::to_json(w));
    return 0;
  }
  for (std::size_t m = 0; m < w.size(); ++m) out << (m ? " " : "") << w[m] + 1;
  out << "\nlength " << w.size() << "\n";
  return 0;
}

int cmd_verify(const Args& a, std::ostream& out, std::ostream& err) {
  VerifyOptions opts;
  if (a.t.type == "all" || a.t.type == "ALL") {
    if (a.max_rank < 1) throw std::invalid_argument("--max-rank must be positive");
    opts.types = all_types(a.max_rank);
  } else {
    opts.types = {FiniteType::parse(a.t.type, a.t.rank)};
  }
  if (!a.suite.empty()) opts.suites = {a.suite};
  opts.order = a.order ? a.order : env_order();
  opts.max_level = level(a.max_level, "--max-level");
  opts.jobs = a.jobs;
  std::vector<TypeResult> results = run_verify(opts);

  Report total;
  for (const auto& r : results) total.merge(r.total());
  if (a.json) {
    Json j = json_io::to_json(total);
    Json types = Json::array();
    for (const auto& r : results) {
      Report t = r.total();
      types.push_back({{"type", r.type.name()}, {"order", r.order}, {"checks", t.checks}, {"failures", t.failures.size()},
                       {"conjectural", t.conjectural.size()}});
    }
    j["types"] = types;
    print(out, j);
  } else {
    for (const auto& r : results) {
      Report t = r.total();
      out << std::left << std::setw(4) << r.type.name() << " order " << std::setw(4) << r.order << std::right
          << std::setw(8) << t.checks << " checks  " << t.failures.size() << " failures  " << t.conjectural.size()
          << " conjectural  " << std::fixed << std::setprecision(3) << r.seconds << "s\n";
      if (a.verbose)
        for (const auto& c : t.conjectural) out << "  conjectural: " << c << "\n";
    }
    out << (total.ok() ? "PASS" : "FAIL") << ": " << total.checks << " checks, " << total.failures.size()
        << " failures, " << total.conjectural.size() << " conjectural\n";
  }
  for (const auto& f : total.failures) err << "failure: " << f << "\n";
  return total.ok() ? 0 : 1;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact (q,t)-deformed Cartan matrices and their invariants", "cartanqt"};
  app.require_subcommand(1);
  Args a;

  auto* cartan = app.add_subcommand("cartan", "Cartan data");
  add_type(cartan, a.t);
  cartan->add_flag("--json", a.json);

  auto* ctilde = app.add_subcommand("ctilde", "Truncated inverse of C(q,t)");
  add_type(ctilde, a.t);
  add_order(ctilde, a);
  ctilde->add_flag("--t1", a.t1, "Specialize t = 1");
  auto* json_flag = ctilde->add_flag("--json", a.json);
  ctilde->add_flag("--csv", a.csv)->excludes(json_flag);
  ctilde->add_option("--via", a.via, "Computation route")->check(CLI::IsMember({"series", "braid"}));

  auto* ibar = app.add_subcommand("ibar", "dim e_i Ibar_j");
  auto* kernel = app.add_subcommand("kernel-dim", "dim e_j K^(i)_k");
  auto* ext1 = app.add_subcommand("ext1", "dim ext^1(K^(i)_k, K^(j)_l)");
  auto* divisor = app.add_subcommand("divisor", "R-matrix denominator divisor");
  for (auto* sub : {ibar, kernel, ext1, divisor}) {
    add_type(sub, a.t);
    add_order(sub, a);
    sub->add_option("--i", a.i)->required();
    sub->add_option("--j", a.j)->required();
    sub->add_flag("--json", a.json);
  }
  for (auto* sub : {ibar, kernel, ext1}) sub->add_flag("--t1", a.t1, "Specialize t = 1");
  for (auto* sub : {kernel, ext1, divisor}) sub->add_option("--k", a.k);
  for (auto* sub : {ext1, divisor}) sub->add_option("--l", a.l);
  divisor->add_option("--p", a.p, "Spectral shift of the first module");
  divisor->add_option("--s", a.s, "Spectral shift of the second module");

  auto* weyl = app.add_subcommand("weyl", "Weyl group data");
  weyl->require_subcommand(1);
  auto* w0 = weyl->add_subcommand("w0", "Reduced word for the longest element");
  add_type(w0, a.t);
  w0->add_option("--end", a.end, "Force the last letter");
  w0->add_flag("--json", a.json);

  auto* verify = app.add_subcommand("verify", "Run the property suites");
  verify->add_option("suite", a.suite, "One suite; default all")->check(CLI::IsMember(verify_suites()));
  verify->add_option("--type", a.t.type, "A type, or 'all'")->required();
  verify->add_option("--rank", a.t.rank)->check(CLI::PositiveNumber);
  verify->add_option("--max-rank", a.max_rank, "Largest rank for --type all");
  verify->add_option("--max-level", a.max_level, "Largest level for the divisor checks");
  add_order(verify, a);
  verify->add_option("--jobs", a.jobs, "Worker threads; 0 means one per core");
  verify->add_flag("--json", a.json);
  verify->add_flag("-v,--verbose", a.verbose, "List conjectural outputs");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (cartan->parsed()) return cmd_cartan(a, out);
    if (ctilde->parsed()) return cmd_ctilde(a, out);
    if (ibar->parsed()) return cmd_ibar(a, out);
    if (kernel->parsed()) return cmd_kernel(a, out);
    if (ext1->parsed()) return cmd_ext1(a, out);
    if (divisor->parsed()) return cmd_divisor(a, out);
    if (w0->parsed()) return cmd_w0(a, out);
    if (verify->parsed()) return cmd_verify(a, out, err);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

int run(int argc, const char* const* argv) { return run(argc, argv, std::cout, std::cerr); }

}  // namespace cartanqt::cli
