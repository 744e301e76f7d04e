#pragma once

#include <optional>
#include <string>
#include <vector>

namespace framekit {

struct Check {
  std::string name;
  double defect;
  double threshold;
  bool pass;
};

/// Ordered list of named defects. A check passes when defect <= threshold;
/// overall() is the conjunction.
class VerificationReport {
 public:
  void add(std::string name, double defect, double threshold);
  /// Boolean property, recorded as defect 0 (true) or 1 (false) with threshold 0.
  void add_flag(std::string name, bool holds);
  /// Appends every check of `other`, prefixing names with `prefix`.
  void merge(const VerificationReport& other, const std::string& prefix = {});

  const std::vector<Check>& checks() const noexcept { return checks_; }
  bool overall() const noexcept;
  std::optional<Check> find(const std::string& name) const;
  /// Defect of the named check; throws InvalidArgument if absent.
  double defect(const std::string& name) const;
  double max_defect() const noexcept;

 private:
  std::vector<Check> checks_;
};

}  // namespace framekit
