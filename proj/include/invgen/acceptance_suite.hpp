#ifndef INVGEN_ACCEPTANCE_SUITE_HPP
#define INVGEN_ACCEPTANCE_SUITE_HPP

#include <iosfwd>

namespace invgen {

/// Runs the acceptance criteria, printing one pass/fail line per criterion
/// (plus failure details). `only` restricts the run to a single criterion
/// (1-10); 0 runs everything. Returns true iff every executed criterion
/// passed, including its runtime budget.
bool run_acceptance_suite(std::ostream& out, int only = 0);

}  // namespace invgen

#endif  // INVGEN_ACCEPTANCE_SUITE_HPP
