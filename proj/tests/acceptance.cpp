#include <cstdio>
#include <cstdlib>
#include <string>

#include "susy/errors.hpp"
#include "susy/verify.hpp"

int main(int argc, char** argv) {
  int first = 1;
  int last = susy::kCriterionCount;
  if (argc > 1) first = last = std::atoi(argv[1]);
  if (first < 1 || last > susy::kCriterionCount) {
    std::fprintf(stderr, "criterion id must be 1..%d\n", susy::kCriterionCount);
    return 2;
  }
  bool all = true;
  for (int id = first; id <= last; ++id) {
    const susy::CriterionResult r = susy::run_criterion(id);
    std::printf("%s criterion %d: %s\n", r.passed ? "PASS" : "FAIL", id, r.title.c_str());
    for (const auto& d : r.details) std::printf("    %s\n", d.c_str());
    all = all && r.passed;
  }
  return all ? 0 : 1;
}
