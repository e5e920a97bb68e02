#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace cartanqt {

/// Outcome of a verification pass.
struct Report {
  std::size_t checks = 0;
  std::vector<std::string> failures;
  /// Outputs that are reported but have no independent oracle.
  std::vector<std::string> conjectural;

  bool ok() const { return failures.empty(); }

  /// Counts one check; `describe` is only evaluated on failure.
  template <class Describe>
  void expect(bool ok, Describe&& describe) {
    ++checks;
    if (!ok) failures.push_back(std::forward<Describe>(describe)());
  }

  void merge(const Report& other) {
    checks += other.checks;
    failures.insert(failures.end(), other.failures.begin(), other.failures.end());
    conjectural.insert(conjectural.end(), other.conjectural.begin(), other.conjectural.end());
  }

  /// Prefixes every new message with `tag`.
  void merge(const Report& other, const std::string& tag) {
    checks += other.checks;
    for (const auto& f : other.failures) failures.push_back(tag + ": " + f);
    for (const auto& c : other.conjectural) conjectural.push_back(tag + ": " + c);
  }
};

}  // namespace cartanqt
