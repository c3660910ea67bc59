// One line per acceptance criterion; exit status 1 if any fails.
//   acceptance [--slow] [--seed N] [--only ID]
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>

#include "comlang/verify/checks.hpp"
#include "comlang/verify/random.hpp"

int main(int argc, char** argv) {
  using namespace comlang::verify;
  bool slow = std::getenv("COMLANG_SLOW") != nullptr;
  std::uint64_t seed = kDefaultSeed;
  std::string only;
  for (int i = 1; i < argc; ++i) {
    if (!std::strcmp(argv[i], "--slow")) {
      slow = true;
    } else if (!std::strcmp(argv[i], "--seed") && i + 1 < argc) {
      seed = std::strtoull(argv[++i], nullptr, 10);
    } else if (!std::strcmp(argv[i], "--only") && i + 1 < argc) {
      only = argv[++i];
    } else {
      std::fprintf(stderr, "usage: %s [--slow] [--seed N] [--only ID]\n", argv[0]);
      return 2;
    }
  }
  auto checks = acceptance_checks();
  if (!only.empty()) {
    std::erase_if(checks, [&](const NamedCheck& c) { return c.id != only; });
    slow = true;
  }
  std::printf("seed %llu\n", static_cast<unsigned long long>(seed));
  int failed = 0;
  run_checks(checks, seed, slow, [&](const CheckResult& r) {
    std::printf("%s\n", format_result(r).c_str());
    std::fflush(stdout);
    failed += !r.passed && !r.skipped;
  });
  std::printf("%d failed\n", failed);
  return failed ? 1 : 0;
}
