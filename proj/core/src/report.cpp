#include "qstirling/report.hpp"

namespace qstirling {

bool Report::check(bool ok, std::string_view what) {
  ++checks;
  if (!ok) failures.emplace_back(what);
  return ok;
}

void Report::absorb(const Report& other) {
  checks += other.checks;
  for (const auto& f : other.failures) {
    failures.push_back(other.name.empty() ? f : other.name + ": " + f);
  }
}

std::string Report::summary() const {
  std::string out = (passed() ? "PASS " : "FAIL ") + name + " (" +
                    std::to_string(checks) + " checks";
  if (!passed()) out += ", " + std::to_string(failures.size()) + " failed";
  out += ")";
  return out;
}

}  // namespace qstirling
