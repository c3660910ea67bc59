#include <chrono>
#include <cstdio>

#include "comlang/verify/checks.hpp"

namespace comlang::verify {

std::vector<CheckResult> run_checks(const std::vector<NamedCheck>& checks, std::uint64_t seed,
                                    bool slow,
                                    const std::function<void(const CheckResult&)>& report) {
  std::vector<CheckResult> out;
  for (const auto& c : checks) {
    CheckResult r{c.id, c.name, false, false, {}, 0};
    if (c.slow && !slow) {
      r.skipped = true;
      r.detail = "slow; rerun with --slow";
    } else {
      auto t0 = std::chrono::steady_clock::now();
      try {
        CheckOutcome o = c.body(CheckContext{seed});
        r.passed = o.passed;
        r.detail = o.detail;
      } catch (const std::exception& e) {
        r.detail = std::string("exception: ") + e.what();
      }
      r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      if (r.passed && r.seconds > c.budget_seconds) {
        r.passed = false;
        char buf[96];
        std::snprintf(buf, sizeof buf, "took %.2fs, budget %.0fs", r.seconds, c.budget_seconds);
        r.detail = r.detail.empty() ? buf : r.detail + "; " + buf;
      }
    }
    if (report) report(r);
    out.push_back(std::move(r));
  }
  return out;
}

std::string format_result(const CheckResult& r) {
  char head[64];
  std::snprintf(head, sizeof head, "[%s] %-6s %7.2fs  ", r.skipped ? "SKIP" : r.passed ? "PASS" : "FAIL",
                r.id.c_str(), r.seconds);
  std::string line = head + r.name;
  if (!r.detail.empty()) line += "  -- " + r.detail;
  return line;
}

}  // namespace comlang::verify
