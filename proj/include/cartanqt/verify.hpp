#pragma once

// The full property suite, run type by type.

#include "cartanqt/cartan.hpp"
#include "cartanqt/report.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cartanqt {

/// Suite names accepted by run_verify, in execution order.
const std::vector<std::string>& verify_suites();

struct VerifyOptions {
  std::vector<FiniteType> types;
  /// Empty means every suite.
  std::vector<std::string> suites;
  /// Truncation order; raised to 2 r h^vee per type when lower.
  std::optional<int> order;
  /// Largest level for the divisor and conjecture checks.
  int max_level = 4;
  /// Largest level for the rigidity, ext^1 and kernel checks.
  int max_ext_level = 6;
  /// Worker threads; 0 means one per hardware thread.
  unsigned jobs = 0;
};

struct SuiteResult {
  std::string suite;
  Report report;
};

struct TypeResult {
  FiniteType type;
  int order = 0;
  std::vector<SuiteResult> suites;
  double seconds = 0;

  Report total() const;
};

/// Throws std::invalid_argument on an unknown suite name.
std::vector<TypeResult> run_verify(const VerifyOptions& opts);

/// Runs one suite on one type at the given order.
Report run_suite(const FiniteType& type, const std::string& suite, int order, const VerifyOptions& opts);

}  // namespace cartanqt
