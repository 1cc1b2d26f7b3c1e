#include "tricontact/report.hpp"

#include <sstream>

namespace tricontact {

bool VerificationReport::passed() const {
  for (const auto& c : checks_)
    if (!c.passed) return false;
  return true;
}

void VerificationReport::add_pass(std::string id, std::string description) {
  checks_.push_back({std::move(id), std::move(description), true, {}, {}});
}

void VerificationReport::add_fail(std::string id, std::string description,
                                  std::vector<std::size_t> witness, std::string defect) {
  checks_.push_back({std::move(id), std::move(description), false, std::move(witness),
                     std::move(defect)});
}

void VerificationReport::add(CheckResult result) { checks_.push_back(std::move(result)); }

void VerificationReport::merge(const VerificationReport& other) {
  checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
}

const CheckResult* VerificationReport::find(const std::string& id) const {
  for (const auto& c : checks_)
    if (c.id == id) return &c;
  return nullptr;
}

const CheckResult* VerificationReport::first_failure() const {
  for (const auto& c : checks_)
    if (!c.passed) return &c;
  return nullptr;
}

std::string VerificationReport::summary() const {
  std::ostringstream os;
  for (const auto& c : checks_) {
    os << (c.passed ? "[pass] " : "[FAIL] ") << c.id;
    if (!c.description.empty()) os << "  " << c.description;
    if (!c.passed) {
      if (!c.witness.empty()) {
        os << "  witness (";
        for (std::size_t i = 0; i < c.witness.size(); ++i) {
          if (i) os << ", ";
          os << c.witness[i];
        }
        os << ")";
      }
      if (!c.defect.empty()) os << "  defect " << c.defect;
    }
    os << "\n";
  }
  os << (passed() ? "overall: pass" : "overall: FAIL") << "\n";
  return os.str();
}

}  // namespace tricontact
