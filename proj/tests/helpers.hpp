#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "sumlab/lattice.hpp"

namespace sumlab::test {

inline LatticeSet from_mask(const Window& w, std::uint64_t mask) {
  BitVector bits(static_cast<std::size_t>(w.cell_count()));
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if ((mask >> i) & 1U) bits.set(i);
  }
  return LatticeSet(w, std::move(bits));
}

inline LatticeSet random_set(const Window& w, std::mt19937_64& rng, double p = 0.5) {
  std::bernoulli_distribution coin(p);
  BitVector bits(static_cast<std::size_t>(w.cell_count()));
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (coin(rng)) bits.set(i);
  }
  return LatticeSet(w, std::move(bits));
}

inline bool subset_of(const LatticeSet& a, const LatticeSet& b) { return difference(a, b).empty(); }

// Brute-force A+B on a one-dimensional window.
inline LatticeSet naive_sum(const LatticeSet& a, const LatticeSet& b) {
  const Window& w = a.window();
  std::vector<std::int64_t> out;
  for (auto x : a.values()) {
    for (auto y : b.values()) {
      if (x + y >= w.lower() && x + y <= w.upper()) out.push_back(x + y);
    }
  }
  return build_set(w, std::span<const std::int64_t>(out));
}

}  // namespace sumlab::test
