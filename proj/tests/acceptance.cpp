#include <cstdio>
#include <cstdlib>
#include <string>

#include "groupcodes/selftest.hpp"

int main(int argc, char** argv) {
  groupcodes::selftest::Options opts;
  if (argc > 1) opts.seed = std::strtoull(argv[1], nullptr, 10);
  int failed = 0;
  for (int id = 1; id <= groupcodes::selftest::kCriterionCount; ++id) {
    const auto r = groupcodes::selftest::run_criterion(id, opts);
    std::printf("[%s] %d %-32s %7.3fs / %.0fs  %s\n", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(), r.seconds,
                r.budget_seconds, r.detail.c_str());
    std::fflush(stdout);
    failed += !r.pass;
  }
  std::printf("%d/%d criteria passed\n", groupcodes::selftest::kCriterionCount - failed,
              groupcodes::selftest::kCriterionCount);
  return failed == 0 ? 0 : 1;
}
