#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tricontact {

/// Result of one named verification check. The witness holds the basis
/// indices of the offending argument tuple; defect is the violation as a
/// printed scalar or vector.
struct CheckResult {
  std::string id;
  std::string description;
  bool passed = true;
  std::vector<std::size_t> witness;
  std::string defect;
};

class VerificationReport {
 public:
  bool passed() const;

  void add_pass(std::string id, std::string description);
  void add_fail(std::string id, std::string description, std::vector<std::size_t> witness,
                std::string defect);
  void add(CheckResult result);
  void merge(const VerificationReport& other);

  const std::vector<CheckResult>& checks() const { return checks_; }
  const CheckResult* find(const std::string& id) const;
  const CheckResult* first_failure() const;

  std::string summary() const;

 private:
  std::vector<CheckResult> checks_;
};

/// Value-or-error result for operations whose failure is a mathematical
/// outcome rather than a programming error.
template <class T>
struct Outcome {
  std::optional<T> value;
  std::string error;

  bool ok() const { return value.has_value(); }
  const T& operator*() const { return *value; }
  T& operator*() { return *value; }
  const T* operator->() const { return &*value; }
  T* operator->() { return &*value; }

  static Outcome success(T v) { return Outcome{std::move(v), {}}; }
  static Outcome failure(std::string why) { return Outcome{std::nullopt, std::move(why)}; }
};

}  // namespace tricontact
