#include <cstdio>
#include <exception>
#include <iostream>

#include "silt/verify/criteria.hpp"

int main() {
  using namespace silt;
  const RationalField q;
  int failed = 0;
  for (const auto& c : acceptance_criteria()) {
    CriterionResult res{c, {}, 0.0};
    std::string error;
    try {
      res = run_criterion(c, q);
    } catch (const std::exception& e) {
      error = e.what();
    }
    const bool ok = error.empty() && res.pass();
    failed += !ok;
    std::printf("%s %2d %-22s %7.2fs\n", ok ? "PASS" : "FAIL", c.id, c.name.c_str(), res.seconds);
    if (!error.empty()) std::printf("       error: %s\n", error.c_str());
    for (const auto& r : res.runs) {
      std::printf("       n=%d: %s\n", r.n, r.computed.c_str());
      if (!ok) std::printf("       expected: %s\n", r.expected.c_str());
      for (const auto& why : r.failures) std::printf("       failed: %s\n", why.c_str());
    }
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
