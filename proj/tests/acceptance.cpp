// Acceptance suite: one line per criterion, exit 0 iff all pass.
#include "rootlen/verify.hpp"

#include <chrono>
#include <exception>
#include <iostream>

int main() {
  using Clock = std::chrono::steady_clock;
  using rootlen::verify::CheckResult;
  using rootlen::verify::Options;

  const Options opt;
  std::vector<CheckResult (*)(const Options&)> checks = {
      rootlen::verify::check_oracle_equality, rootlen::verify::check_intro_example,
      rootlen::verify::check_theorem_b,       rootlen::verify::check_normality,
      rootlen::verify::check_integral_closure, rootlen::verify::check_type_a,
      rootlen::verify::check_type_c,          rootlen::verify::check_strictness,
      rootlen::verify::check_geometry,        rootlen::verify::check_lattice,
  };

  bool all = true;
  for (auto check : checks) {
    auto t0 = Clock::now();
    try {
      CheckResult r = check(opt);
      double secs = std::chrono::duration<double>(Clock::now() - t0).count();
      std::cout << (r.pass ? "PASS" : "FAIL") << " [" << r.criterion << "] " << r.name << "  ("
                << secs << "s)\n";
      for (const auto& n : r.notes) std::cout << "       " << n << "\n";
      all = all && r.pass;
    } catch (const std::exception& e) {
      std::cout << "FAIL [criterion aborted] " << e.what() << "\n";
      all = false;
    }
    std::cout.flush();
  }
  std::cout << (all ? "ACCEPTANCE: all criteria passed" : "ACCEPTANCE: failures above") << "\n";
  return all ? 0 : 1;
}
