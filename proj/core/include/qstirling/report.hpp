#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qstirling {

// Outcome of a verification suite: how many individual checks ran and a
// description of each one that failed.
struct Report {
  std::string name;
  std::size_t checks = 0;
  std::vector<std::string> failures;

  Report() = default;
  explicit Report(std::string report_name) : name(std::move(report_name)) {}

  bool passed() const { return failures.empty(); }

  // Records one check; the message is only kept on failure.
  bool check(bool ok, std::string_view what);

  // Folds another report's counts and failures into this one, prefixing
  // each failure with the other report's name.
  void absorb(const Report& other);

  std::string summary() const;
};

}  // namespace qstirling
