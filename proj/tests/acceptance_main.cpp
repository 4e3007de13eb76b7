// Acceptance gate: one line per criterion, nonzero exit on any failure.
#include <cstdio>
#include <cstdlib>
#include <exception>

#include "monopole/acceptance.hpp"

int main(int argc, char** argv) {
  double scale = 1.0;
  if (argc > 1) {
    char* end = nullptr;
    scale = std::strtod(argv[1], &end);
    if (end == argv[1] || scale <= 0.0) {
      std::fprintf(stderr, "usage: %s [tolerance-scale > 0]\n", argv[0]);
      return 2;
    }
  }
  int failures = 0;
  try {
    const auto results = monopole::run_acceptance(scale);
    for (const auto& r : results) {
      std::printf("%s %2d %-24s %s\n", r.passed ? "PASS" : "FAIL", r.index,
                  r.name.c_str(), r.detail.c_str());
      if (!r.passed) ++failures;
    }
    std::printf("%zu/%zu criteria passed\n", results.size() - failures,
                results.size());
  } catch (const std::exception& e) {
    std::fprintf(stderr, "acceptance run aborted: %s\n", e.what());
    return 2;
  }
  return failures == 0 ? 0 : 1;
}
