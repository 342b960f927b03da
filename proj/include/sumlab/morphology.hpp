#pragma once

// Minkowski operations on windowed sets: sumsets, cube dilation and erosion,
// and the n-block transforms A_[n] and A^[n].

#include <cstdint>

#include "sumlab/lattice.hpp"

namespace sumlab {

enum class SumWindow {
  Clip,    ///< result on the operands' window
  Expand,  ///< result on a window of twice the radius
};

/// {a + b : a in A, b in B} ∩ window.
LatticeSet sumset(const LatticeSet& a, const LatticeSet& b, SumWindow mode = SumWindow::Clip);

/// A + [-m, m]^dim.
LatticeSet dilate_cube(const LatticeSet& a, std::int64_t m);

/// {z : z + [-k, k]^dim ⊆ S}, restricted to cells at least k inside the window.
LatticeSet erode_cube(const LatticeSet& s, std::int64_t k);

/// A + [0, n-1]^dim. For n = m + 1 this is the one-sided dilation A + [0, m].
LatticeSet dilate_block(const LatticeSet& a, std::int64_t n);

/// x ∈ A_[n] iff (n x + [0, n-1]^dim) ∩ A ≠ ∅, on the window of radius floor(N/n).
LatticeSet block_quotient(const LatticeSet& a, std::int64_t n);

/// Union of the aligned blocks n x + [0, n-1]^dim that meet A, clipped to the
/// window. Edge blocks only partly inside the window are included, so A ⊆ A^[n].
LatticeSet block_fill(const LatticeSet& a, std::int64_t n);

/// Floor division, used for block coordinates of negative cells.
constexpr std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  const std::int64_t q = a / b;
  return (a % b != 0 && ((a < 0) != (b < 0))) ? q - 1 : q;
}

/// Non-negative remainder for a positive modulus.
constexpr std::int64_t floor_mod(std::int64_t a, std::int64_t b) { return a - b * floor_div(a, b); }

}  // namespace sumlab
