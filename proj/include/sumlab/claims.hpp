#pragma once

// Finite-scale claim bundles for the worked examples, one bundle per
// example identifier.

#include <string>
#include <string_view>
#include <vector>

namespace sumlab {

struct ClaimResult {
  std::string name;
  bool pass = false;
  std::string detail;  // measured values behind the verdict
};

/// upper-42, epsilon-28, optimal-41, big-44, nonpws-12.
const std::vector<std::string_view>& example_ids();

/// Runs every claim of one example. Throws NotFound for an unknown id.
std::vector<ClaimResult> verify_example(std::string_view id, unsigned threads = 1);

}  // namespace sumlab
