#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "bolalg/linalg.hpp"

namespace bolalg {

/// Replayable counterexample. `indices` are 1-based basis indices in the
/// order the identity names its variables; `residual` is the nonzero
/// difference of the two sides (empty when the failure is not a vector).
struct Witness {
  std::vector<std::size_t> indices;
  Vector residual;
  std::string detail;
};

struct Check {
  std::string name;
  bool passed = true;
  std::optional<Witness> witness;
  std::string note;
};

/// Ordered list of named verdicts shared by every checker.
class Report {
 public:
  void add(Check check) { checks_.push_back(std::move(check)); }
  void add_pass(std::string name, std::string note = {});
  void add_fail(std::string name, Witness witness, std::string note = {});
  void append(const Report& other, const std::string& prefix = {});

  bool passed() const;
  const std::vector<Check>& checks() const noexcept { return checks_; }
  const Check* find(const std::string& name) const;
  /// True when the named check exists and passed.
  bool passed(const std::string& name) const;
  std::size_t size() const noexcept { return checks_.size(); }

 private:
  std::vector<Check> checks_;
};

std::string to_string(const Report& report);

}  // namespace bolalg
