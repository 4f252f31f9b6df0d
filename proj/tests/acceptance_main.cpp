// Acceptance battery runner: one criterion per invocation so every battery
// line is a separate ctest entry.  Prints exactly one PASS/FAIL line with
// the measured numbers and exits 0 (pass) / 1 (fail) / 2 (usage).
#include <cstdio>
#include <cstdlib>
#include <exception>

#include "softedge/verify.hpp"

int main(int argc, char** argv) {
  if (argc != 2) {
    std::fprintf(stderr, "usage: softedge_acceptance <criterion 1-9>\n");
    return 2;
  }
  const int index = std::atoi(argv[1]);
  if (index < 1 || index > 9) {
    std::fprintf(stderr, "criterion index must lie in 1..9\n");
    return 2;
  }
  try {
    const auto r = softedge::verify::run_criterion(index);
    std::printf("%s criterion %d [%s]: %s (%.1fs)\n",
                r.pass ? "PASS" : "FAIL", r.index, r.name.c_str(),
                r.detail.c_str(), r.seconds);
    return r.pass ? 0 : 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "criterion %d crashed: %s\n", index, e.what());
    return 1;
  }
}
