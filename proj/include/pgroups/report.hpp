#pragma once

#include <string>
#include <vector>

namespace pgroups {

/// Outcome of an exhaustive check: the claim, the range covered, and every
/// counterexample found (formatted). Empty violations means the claim held.
struct Report {
  std::string claim;
  std::string range;
  std::vector<std::string> violations;
  std::vector<std::string> notes;

  bool ok() const { return violations.empty(); }
  void fail(std::string what) {
    // cap the list so a broken invariant does not flood the output
    if (violations.size() < 50) violations.push_back(std::move(what));
    else if (violations.size() == 50) violations.push_back("...");
  }
};

}  // namespace pgroups
