#ifndef INVGEN_BUDGET_HPP
#define INVGEN_BUDGET_HPP

#include <cstdint>
#include <cstdlib>

namespace invgen {

/// Search/enumeration caps. Exhaustive operations fail with a budget error
/// instead of silently approximating once a cap is hit. The INVGEN_BUDGET
/// environment variable, when set to a positive integer, replaces every cap.
struct Budget {
  std::int64_t closure_cap = 10000;       // max elements in a group closure
  std::int64_t search_nodes = 20000000;   // invariable-generation DFS nodes
  std::int64_t word_cap = 10000000;       // words evaluated per certification
  std::int64_t trial_cap = 100000;        // randomized trials

  static Budget from_env() {
    Budget b;
    if (const char* env = std::getenv("INVGEN_BUDGET")) {
      char* end = nullptr;
      long long v = std::strtoll(env, &end, 10);
      if (end != env && v > 0) {
        b.closure_cap = v;
        b.search_nodes = v;
        b.word_cap = v;
        b.trial_cap = v;
      }
    }
    return b;
  }
};

}  // namespace invgen

#endif  // INVGEN_BUDGET_HPP
