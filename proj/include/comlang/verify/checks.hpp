#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace comlang::verify {

struct CheckOutcome {
  bool passed = false;
  std::string detail;
};

struct CheckContext {
  std::uint64_t seed;
};

struct NamedCheck {
  std::string id;  // "1".."12" for acceptance criteria, "P.<name>" otherwise
  std::string name;
  double budget_seconds;
  bool slow = false;
  std::function<CheckOutcome(const CheckContext&)> body;
};

struct CheckResult {
  std::string id;
  std::string name;
  bool passed = false;
  bool skipped = false;
  std::string detail;
  double seconds = 0;
};

/// The twelve numbered acceptance criteria.
std::vector<NamedCheck> acceptance_checks();
/// Module invariants as randomized or exhaustive property runs.
std::vector<NamedCheck> property_checks();

/// Runs each check, timing it against its budget; exceptions count as
/// failures. Slow checks are skipped unless `slow` is set. `report` sees
/// each result as it finishes.
std::vector<CheckResult> run_checks(const std::vector<NamedCheck>& checks, std::uint64_t seed,
                                    bool slow,
                                    const std::function<void(const CheckResult&)>& report = {});

std::string format_result(const CheckResult& r);

}  // namespace comlang::verify
