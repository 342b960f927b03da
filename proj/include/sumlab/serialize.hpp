#pragma once

// Text persistence for LatticeSet:
//
//   window <dim> <convention> <N>
//   run <start-index> <length>
//   ...
//
// Runs are maximal spans of members in row-major index order, strictly
// increasing and separated by at least one absent cell. Only canonical input
// is accepted, so parse followed by serialize reproduces the bytes exactly.

#include <string>
#include <string_view>

#include "sumlab/lattice.hpp"

namespace sumlab {

std::string serialize(const LatticeSet& set);
LatticeSet deserialize(std::string_view text);

}  // namespace sumlab
