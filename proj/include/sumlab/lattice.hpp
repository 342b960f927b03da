#pragma once

// Windowed integer sets: a bounded box of Z^d with a dense membership bit
// vector in row-major cell order (last axis fastest).

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sumlab/bitvector.hpp"

namespace sumlab {

inline constexpr int kMaxDim = 3;
inline constexpr std::int64_t kMaxCells = std::int64_t{1} << 31;

/// Lattice point; axes at or beyond the window dimension are ignored and kept 0.
using Point = std::array<std::int64_t, kMaxDim>;

enum class Convention {
  Classical1D,  ///< [1, N]
  Centered,     ///< [-N, N]^dim
};

std::string_view to_string(Convention c);

class Window {
 public:
  static Window classical(std::int64_t n);
  static Window centered(std::int64_t radius, int dim = 1);
  /// Accepts "1d:N" and "cN:d".
  static Window parse(std::string_view spec);

  [[nodiscard]] int dim() const noexcept { return dim_; }
  [[nodiscard]] Convention convention() const noexcept { return convention_; }
  [[nodiscard]] std::int64_t radius() const noexcept { return radius_; }
  [[nodiscard]] bool is_classical() const noexcept { return convention_ == Convention::Classical1D; }

  /// Smallest and largest coordinate on every axis.
  [[nodiscard]] std::int64_t lower() const noexcept { return is_classical() ? 1 : -radius_; }
  [[nodiscard]] std::int64_t upper() const noexcept { return radius_; }
  /// Cells per axis.
  [[nodiscard]] std::int64_t extent() const noexcept { return upper() - lower() + 1; }
  [[nodiscard]] std::int64_t cell_count() const noexcept;
  [[nodiscard]] std::int64_t stride(int axis) const noexcept;

  [[nodiscard]] bool contains(const Point& p) const noexcept;
  /// True when p lies at least `margin` cells inside every face.
  [[nodiscard]] bool interior(const Point& p, std::int64_t margin) const noexcept;
  [[nodiscard]] std::int64_t index_of(const Point& p) const noexcept;
  [[nodiscard]] Point point_of(std::int64_t index) const noexcept;

  /// Same convention and dimension, different radius.
  [[nodiscard]] Window with_radius(std::int64_t radius) const;

  /// Canonical CLI spelling, inverse of parse().
  [[nodiscard]] std::string spec() const;

  friend bool operator==(const Window&, const Window&) = default;

 private:
  Window(int dim, Convention convention, std::int64_t radius);

  int dim_ = 1;
  Convention convention_ = Convention::Classical1D;
  std::int64_t radius_ = 1;
};

std::string to_string(const Point& p, int dim);

/// Immutable subset of a window. All set operations return new values.
class LatticeSet {
 public:
  /// The empty set on `window`.
  explicit LatticeSet(Window window);
  /// Takes ownership of a membership vector of exactly window.cell_count() bits.
  LatticeSet(Window window, BitVector bits, bool clipped = false);

  static LatticeSet full(const Window& window);

  [[nodiscard]] const Window& window() const noexcept { return window_; }
  [[nodiscard]] const BitVector& bits() const noexcept { return bits_; }
  [[nodiscard]] std::int64_t cardinality() const noexcept { return cardinality_; }
  [[nodiscard]] bool empty() const noexcept { return cardinality_ == 0; }
  /// Set when an operation dropped elements at the window boundary.
  [[nodiscard]] bool clipped() const noexcept { return clipped_; }

  [[nodiscard]] bool contains(const Point& p) const noexcept;
  [[nodiscard]] bool contains(std::int64_t x) const noexcept { return contains(Point{x, 0, 0}); }
  [[nodiscard]] std::vector<Point> points() const;
  /// Members of a one-dimensional set in increasing order.
  [[nodiscard]] std::vector<std::int64_t> values() const;

  /// Recounts from scratch; equals cardinality() for every valid value.
  [[nodiscard]] std::int64_t recount() const noexcept { return static_cast<std::int64_t>(bits_.count()); }

  /// Window and membership equality; the clipped flag is provenance, not content.
  friend bool operator==(const LatticeSet& a, const LatticeSet& b) noexcept {
    return a.window_ == b.window_ && a.bits_ == b.bits_;
  }

 private:
  Window window_;
  BitVector bits_;
  std::int64_t cardinality_ = 0;
  bool clipped_ = false;
};

LatticeSet build_set(const Window& window, std::span<const Point> coords);
/// One-dimensional convenience overload.
LatticeSet build_set(const Window& window, std::span<const std::int64_t> values);
LatticeSet build_set(const Window& window, std::initializer_list<std::int64_t> values);

enum class BoolOp { Union, Intersect, Difference, Complement };

/// Pointwise boolean algebra. `b` must be null for Complement and set otherwise.
LatticeSet boolean_op(BoolOp op, const LatticeSet& a, const LatticeSet* b = nullptr);

inline LatticeSet set_union(const LatticeSet& a, const LatticeSet& b) { return boolean_op(BoolOp::Union, a, &b); }
inline LatticeSet intersect(const LatticeSet& a, const LatticeSet& b) { return boolean_op(BoolOp::Intersect, a, &b); }
inline LatticeSet difference(const LatticeSet& a, const LatticeSet& b) { return boolean_op(BoolOp::Difference, a, &b); }
inline LatticeSet complement(const LatticeSet& a) { return boolean_op(BoolOp::Complement, a); }

/// {a + v : a in A} ∩ window; sets the clipped flag when elements fall off.
LatticeSet translate(const LatticeSet& a, const Point& v);

/// Copies `a` into another window of the same convention and dimension;
/// cells outside the target are dropped and flagged.
LatticeSet reembed(const LatticeSet& a, const Window& target);

/// Cells at least `margin` inside every face.
LatticeSet interior_mask(const Window& window, std::int64_t margin);

namespace detail {

/// Moves every bit by t cells along one axis, dropping cells that leave the window.
BitVector shift_axis(const BitVector& bits, const Window& w, int axis, std::int64_t t);

/// bits + [lo, hi] along one axis (lo <= 0 <= hi), clipped to the window.
BitVector dilate_axis(const BitVector& bits, const Window& w, int axis, std::int64_t lo, std::int64_t hi);

void require_same_window(const LatticeSet& a, const LatticeSet& b);

}  // namespace detail

}  // namespace sumlab
