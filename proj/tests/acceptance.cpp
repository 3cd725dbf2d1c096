#include <cstdio>
#include <cstring>
#include <string>

#include "branching/verify/suites.hpp"

using namespace branching::verify;

int main(int argc, char** argv) {
  bool verbose = false;
  std::vector<int> ids = suite_criteria("all");
  for (int k = 1; k < argc; ++k) {
    if (!std::strcmp(argv[k], "--criterion") && k + 1 < argc) {
      ids = {std::stoi(argv[++k])};
    } else if (!std::strcmp(argv[k], "-v") || !std::strcmp(argv[k], "--verbose")) {
      verbose = true;
    } else {
      std::fprintf(stderr, "usage: acceptance [--criterion N] [-v]\n");
      return 1;
    }
  }
  int failed = 0;
  for (int id : ids) {
    const CriterionReport r = run_criterion(id);
    std::printf("%s\n", r.status_line().c_str());
    if (verbose || !r.passed)
      for (const auto& line : r.details) std::printf("    %s\n", line.c_str());
    std::fflush(stdout);
    failed += !r.passed;
  }
  return failed == 0 ? 0 : 1;
}
