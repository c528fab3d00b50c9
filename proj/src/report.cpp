#include "wsets/report.hpp"

#include <algorithm>

namespace wsets {

void VerificationReport::merge(const VerificationReport& other, const std::string& prefix) {
  for (auto c : other.checks_) {
    if (!prefix.empty()) c.name = prefix + "." + c.name;
    checks_.push_back(std::move(c));
  }
}

bool VerificationReport::passed() const {
  return std::all_of(checks_.begin(), checks_.end(), [](const Check& c) { return c.passed; });
}

const Check* VerificationReport::find(const std::string& name) const {
  for (const auto& c : checks_) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

const Check* VerificationReport::first_failure() const {
  for (const auto& c : checks_) {
    if (!c.passed) return &c;
  }
  return nullptr;
}

}  // namespace wsets
