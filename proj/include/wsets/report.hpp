#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "wsets/interval_set.hpp"

namespace wsets {

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
  std::optional<IntervalSet> witness;
  std::optional<std::int64_t> offset;
};

/// Named pass/fail checks; the report passes iff every check passes.
class VerificationReport {
 public:
  VerificationReport() = default;
  explicit VerificationReport(std::string header) : header_(std::move(header)) {}

  Check& add(Check c) {
    checks_.push_back(std::move(c));
    return checks_.back();
  }
  Check& add(std::string name, bool passed, std::string detail = {}) {
    return add(Check{std::move(name), passed, std::move(detail), std::nullopt, std::nullopt});
  }
  /// Appends all checks of `other`, prefixing their names.
  void merge(const VerificationReport& other, const std::string& prefix = {});

  bool passed() const;
  const std::vector<Check>& checks() const { return checks_; }
  const Check* find(const std::string& name) const;
  const Check* first_failure() const;

  const std::string& header() const { return header_; }
  void set_header(std::string h) { header_ = std::move(h); }

 private:
  std::string header_;
  std::vector<Check> checks_;
};

/// Raised when a computation cannot proceed; carries the offending region.
class WitnessError : public std::runtime_error {
 public:
  WitnessError(const std::string& what, IntervalSet witness)
      : std::runtime_error(what), witness_(std::move(witness)) {}
  const IntervalSet& witness() const { return witness_; }

 private:
  IntervalSet witness_;
};

/// Raised when a precondition expressed as a report fails.
class PreconditionError : public std::runtime_error {
 public:
  PreconditionError(const std::string& what, VerificationReport report)
      : std::runtime_error(what), report_(std::move(report)) {}
  const VerificationReport& report() const { return report_; }

 private:
  VerificationReport report_;
};

}  // namespace wsets
