#ifndef ROOTLEN_VERIFY_HPP
#define ROOTLEN_VERIFY_HPP

#include <cstddef>
#include <string>
#include <vector>

namespace rootlen::verify {

struct Options {
  long long level_bound = 7;     // generator slab bound (stability at +1)
  long long closure_bound = 4;   // normality / integral-closure bound
  int samples = 500;             // sampled box points per rank-4 type
  unsigned seed = 390625;        // sampling seed (deterministic runs)
  int max_rank = 0;              // 0 = suite default; lowers rank coverage when set
  std::size_t cap = 1000000000;  // slab/orbit caps
};

struct CheckResult {
  int criterion = 0;
  std::string name;
  bool pass = false;
  std::vector<std::string> notes;
};

CheckResult check_oracle_equality(const Options& opt = {});   // 1
CheckResult check_intro_example(const Options& opt = {});     // 2
CheckResult check_theorem_b(const Options& opt = {});         // 3
CheckResult check_normality(const Options& opt = {});         // 4
CheckResult check_integral_closure(const Options& opt = {});  // 5
CheckResult check_type_a(const Options& opt = {});            // 6
CheckResult check_type_c(const Options& opt = {});            // 7
CheckResult check_strictness(const Options& opt = {});        // 8
CheckResult check_geometry(const Options& opt = {});          // 9
CheckResult check_lattice(const Options& opt = {});           // 10

/// Suites: length-oracle, intro, theoremB, normality, integral-closure,
/// typeA, typeC, strictness, geometry, lattice, all.
std::vector<CheckResult> run_suite(const std::string& suite, const Options& opt = {});
std::vector<std::string> suite_names();

} // namespace rootlen::verify

#endif
