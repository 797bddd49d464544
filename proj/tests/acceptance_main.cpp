// Acceptance suite: runs every reproduction check and prints one line per
// criterion. Exits nonzero if any blocking check fails.

#include <cstdio>
#include <cstring>
#include <optional>
#include <string>

#include "toric_ci/verify.hpp"

int main(int argc, char** argv) {
  toric_ci::VerifyOptions opts;
  for (int i = 1; i + 1 < argc; ++i)
    if (std::strcmp(argv[i], "--only") == 0) opts.only = std::string(argv[i + 1]);

  const auto results = toric_ci::run_verification(opts);
  int failed = 0;
  for (const auto& r : results) {
    const char* status = r.passed ? "PASS" : r.blocking ? "FAIL" : "INFO";
    failed += !r.passed && r.blocking;
    std::printf("[%s] criterion %d (%s): %s -- %s (%.1f ms)\n", status, r.id, r.group.c_str(),
                r.name.c_str(), r.detail.c_str(), r.elapsed_ms);
  }
  std::printf("%zu criteria, %d failed\n", results.size(), failed);
  return failed == 0 ? 0 : 1;
}
