#include "framekit/report.hpp"

#include <algorithm>
#include <cmath>

#include "framekit/error.hpp"

namespace framekit {

void VerificationReport::add(std::string name, double defect, double threshold) {
  // NaN defects never pass.
  const bool pass = defect <= threshold;
  checks_.push_back({std::move(name), defect, threshold, pass});
}

void VerificationReport::add_flag(std::string name, bool holds) {
  add(std::move(name), holds ? 0.0 : 1.0, 0.0);
}

void VerificationReport::merge(const VerificationReport& other, const std::string& prefix) {
  for (const auto& c : other.checks_) checks_.push_back({prefix + c.name, c.defect, c.threshold, c.pass});
}

bool VerificationReport::overall() const noexcept {
  return std::all_of(checks_.begin(), checks_.end(), [](const Check& c) { return c.pass; });
}

std::optional<Check> VerificationReport::find(const std::string& name) const {
  auto it = std::find_if(checks_.begin(), checks_.end(),
                         [&name](const Check& c) { return c.name == name; });
  if (it == checks_.end()) return std::nullopt;
  return *it;
}

double VerificationReport::defect(const std::string& name) const {
  auto c = find(name);
  if (!c) throw InvalidArgument("no check named '" + name + "' in report");
  return c->defect;
}

double VerificationReport::max_defect() const noexcept {
  double m = 0.0;
  for (const auto& c : checks_) m = std::max(m, c.defect);
  return m;
}

}  // namespace framekit
