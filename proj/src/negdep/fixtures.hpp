#pragma once

#include <string>
#include <vector>

#include "negdep/core.hpp"

namespace negdep::fixtures {

/// Built-in distributions used throughout the test and experiment suites:
///   "table2-wnr"          4 elements; WNR but neither NA nor NR.
///   "dominance-not-wnr"   3 elements; satisfies dominance, violates WNR.
///   "ncd-counterexample-4" 4 elements; NCD but violates dominance.
///   "ncd-homogeneous-8"   8 elements; homogeneous, NCD, violates dominance.
std::vector<std::string> names();

bool is_fixture(const std::string& name);

core::Distribution<Rational> get(const std::string& name);

/// Optional human-readable note stored in the emitted JSON "comment" field.
std::string comment(const std::string& name);

}  // namespace negdep::fixtures
