#ifndef CONSTELLA_REPORT_HPP
#define CONSTELLA_REPORT_HPP

#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace constella {

/// One failed axiom instance: the axiom id (e.g. "s1", "lr4", "wo7") and the
/// labels of the elements that witness the failure, in the order the axiom
/// quantifies them.
struct Violation {
  std::string axiom;
  std::vector<std::string> witness;
  std::string note;

  friend bool operator==(const Violation&, const Violation&) = default;
};

/// Outcome of an axiom checker. `valid()` holds exactly when no violation was
/// recorded. Checkers list every violation unless constructed with a limit,
/// in which case they stop once the limit is reached.
class ValidationReport {
 public:
  static constexpr std::size_t unlimited = std::numeric_limits<std::size_t>::max();

  explicit ValidationReport(std::size_t limit = unlimited) : limit_(limit) {}

  bool valid() const noexcept { return violations_.empty(); }
  bool saturated() const noexcept { return violations_.size() >= limit_; }
  std::size_t limit() const noexcept { return limit_; }

  const std::vector<Violation>& violations() const& noexcept { return violations_; }
  std::vector<Violation> violations() && { return std::move(violations_); }

  void add(std::string axiom, std::vector<std::string> witness, std::string note = {}) {
    if (saturated()) return;
    violations_.push_back({std::move(axiom), std::move(witness), std::move(note)});
  }

  void merge(const ValidationReport& other) {
    for (const auto& v : other.violations_) {
      if (saturated()) return;
      violations_.push_back(v);
    }
  }

  /// True if some violation carries `axiom` as its id, or as its id prefix
  /// when `axiom` names a family ("rm" matches "rm1" and "rm2").
  bool names(std::string_view axiom) const {
    for (const auto& v : violations_) {
      if (v.axiom == axiom) return true;
      if (v.axiom.size() > axiom.size() && v.axiom.starts_with(axiom) &&
          (v.axiom[axiom.size()] >= '0' && v.axiom[axiom.size()] <= '9')) {
        return true;
      }
    }
    return false;
  }

 private:
  std::size_t limit_;
  std::vector<Violation> violations_;
};

/// Thrown when a structure that must satisfy a set of axioms does not.
class InvalidStructure : public std::runtime_error {
 public:
  InvalidStructure(const std::string& what, ValidationReport report)
      : std::runtime_error(what), report_(std::move(report)) {}

  const ValidationReport& report() const noexcept { return report_; }

 private:
  ValidationReport report_;
};

/// The natural order computed from a structure that passed the lr checks is
/// not a partial order. Indicates a checker bug, never bad input.
class InvalidOrder : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A brute-force search space exceeds the configured cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace constella

#endif  // CONSTELLA_REPORT_HPP
