#include "sumlab/morphology.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <string>

#include "sumlab/errors.hpp"

namespace sumlab {

namespace {

void require_radius(const LatticeSet& a, std::int64_t r, const char* what) {
  if (r < 0) throw InvalidArgument(std::string(what) + " radius must be non-negative");
  if (r > a.window().radius()) {
    throw RadiusTooLarge(std::string(what) + " radius " + std::to_string(r) + " exceeds window radius " +
                         std::to_string(a.window().radius()));
  }
}

BitVector dilate_all_axes(const BitVector& bits, const Window& w, std::int64_t lo, std::int64_t hi) {
  BitVector out = bits;
  for (int axis = 0; axis < w.dim(); ++axis) out = detail::dilate_axis(out, w, axis, lo, hi);
  return out;
}

struct AxisExtremes {
  Point min{0, 0, 0};
  Point max{0, 0, 0};
};

AxisExtremes extremes(const LatticeSet& s) {
  AxisExtremes e;
  bool first = true;
  for (const Point& p : s.points()) {
    for (int a = 0; a < s.window().dim(); ++a) {
      if (first || p[a] < e.min[a]) e.min[a] = p[a];
      if (first || p[a] > e.max[a]) e.max[a] = p[a];
    }
    first = false;
  }
  return e;
}

// Sums fall outside the window exactly when an extreme sum does.
bool sum_overflows(const LatticeSet& a, const LatticeSet& b) {
  const Window& w = a.window();
  if (w.dim() == 1) {
    const auto& ab = a.bits();
    const auto& bb = b.bits();
    auto last = [](const BitVector& v) {
      auto words = v.words();
      std::size_t i = words.size();
      while (words[i - 1] == 0) --i;
      return static_cast<std::int64_t>((i - 1) * BitVector::kWordBits + 63 - std::countl_zero(words[i - 1]));
    };
    const std::int64_t lo = static_cast<std::int64_t>(ab.find_next(0)) + static_cast<std::int64_t>(bb.find_next(0)) +
                            2 * w.lower();
    const std::int64_t hi = last(ab) + last(bb) + 2 * w.lower();
    return lo < w.lower() || hi > w.upper();
  }
  const auto ea = extremes(a);
  const auto eb = extremes(b);
  for (int ax = 0; ax < w.dim(); ++ax) {
    if (ea.min[ax] + eb.min[ax] < w.lower() || ea.max[ax] + eb.max[ax] > w.upper()) return true;
  }
  return false;
}

BitVector sumset_1d(const LatticeSet& base, const LatticeSet& shifts) {
  const Window& w = base.window();
  BitVector out(base.bits().size());
  // Group runs of the shift operand by length so each dilation is built once.
  std::map<std::int64_t, std::vector<std::int64_t>> by_length;
  for (auto [start, len] : shifts.bits().runs()) {
    by_length[static_cast<std::int64_t>(len)].push_back(static_cast<std::int64_t>(start) + w.lower());
  }
  for (const auto& [len, starts] : by_length) {
    BitVector forward, backward;
    for (std::int64_t s : starts) {
      const std::int64_t e = s + len - 1;
      if (s > 0) {
        if (forward.size() == 0) forward = detail::dilate_axis(base.bits(), w, 0, 0, len - 1);
        out.or_shifted(forward, s);
      } else if (e < 0) {
        if (backward.size() == 0) backward = detail::dilate_axis(base.bits(), w, 0, -(len - 1), 0);
        out.or_shifted(backward, e);
      } else {
        out |= detail::dilate_axis(base.bits(), w, 0, s, e);
      }
    }
  }
  return out;
}

BitVector sumset_nd(const LatticeSet& base, const LatticeSet& shifts) {
  const Window& w = base.window();
  BitVector out(base.bits().size());
  for (const Point& v : shifts.points()) {
    BitVector moved = base.bits();
    for (int axis = 0; axis < w.dim() && moved.any(); ++axis) moved = detail::shift_axis(moved, w, axis, v[axis]);
    out |= moved;
  }
  return out;
}

}  // namespace

LatticeSet sumset(const LatticeSet& a, const LatticeSet& b, SumWindow mode) {
  detail::require_same_window(a, b);
  if (mode == SumWindow::Expand) {
    const Window wide = a.window().with_radius(2 * a.window().radius());
    return sumset(reembed(a, wide), reembed(b, wide), SumWindow::Clip);
  }
  if (a.empty() || b.empty()) return LatticeSet(a.window());
  const LatticeSet& shifts = a.cardinality() <= b.cardinality() ? a : b;
  const LatticeSet& base = a.cardinality() <= b.cardinality() ? b : a;
  BitVector bits = a.window().dim() == 1 ? sumset_1d(base, shifts) : sumset_nd(base, shifts);
  return LatticeSet(a.window(), std::move(bits), sum_overflows(a, b));
}

LatticeSet dilate_cube(const LatticeSet& a, std::int64_t m) {
  require_radius(a, m, "dilation");
  if (m == 0) return LatticeSet(a.window(), a.bits());
  return LatticeSet(a.window(), dilate_all_axes(a.bits(), a.window(), -m, m));
}

LatticeSet erode_cube(const LatticeSet& s, std::int64_t k) {
  require_radius(s, k, "erosion");
  BitVector gaps = s.bits();
  gaps.flip();
  BitVector kept = dilate_all_axes(gaps, s.window(), -k, k);
  kept.flip();
  kept &= interior_mask(s.window(), k).bits();
  return LatticeSet(s.window(), std::move(kept));
}

LatticeSet dilate_block(const LatticeSet& a, std::int64_t n) {
  if (n < 1) throw InvalidArgument("block size must be positive");
  if (n == 1) return LatticeSet(a.window(), a.bits());
  return LatticeSet(a.window(), dilate_all_axes(a.bits(), a.window(), 0, n - 1));
}

LatticeSet block_quotient(const LatticeSet& a, std::int64_t n) {
  if (n < 1) throw InvalidArgument("block size must be positive");
  if (n == 1) return LatticeSet(a.window(), a.bits());
  const Window& w = a.window();
  if (n > w.radius()) throw InvalidArgument("block size " + std::to_string(n) + " exceeds the window radius");
  const Window q = w.with_radius(w.radius() / n);
  // hit(z): the block starting at z meets A.
  const BitVector hit = dilate_all_axes(a.bits(), w, -(n - 1), 0);
  BitVector bits(static_cast<std::size_t>(q.cell_count()));
  for (std::int64_t i = 0; i < q.cell_count(); ++i) {
    Point x = q.point_of(i);
    for (int ax = 0; ax < w.dim(); ++ax) x[ax] *= n;
    if (hit.test(static_cast<std::size_t>(w.index_of(x)))) bits.set(static_cast<std::size_t>(i));
  }
  return LatticeSet(q, std::move(bits));
}

LatticeSet block_fill(const LatticeSet& a, std::int64_t n) {
  if (n < 1) throw InvalidArgument("block size must be positive");
  if (n == 1) return LatticeSet(a.window(), a.bits());
  const Window& w = a.window();
  const std::int64_t lo = w.lower();
  const std::int64_t hi = w.upper();

  if (w.dim() == 1) {
    const BitVector hit = detail::dilate_axis(a.bits(), w, 0, -(n - 1), 0);
    BitVector starts(hit.size());
    for (std::int64_t z = n * floor_div(lo + n - 1, n); z <= hi; z += n) starts.set(static_cast<std::size_t>(z - lo));
    starts &= hit;
    BitVector out = detail::dilate_axis(starts, w, 0, 0, n - 1);
    // Block straddling the lower face starts outside the window.
    const std::int64_t first_start = n * floor_div(lo, n);
    if (first_start < lo) {
      const std::size_t end = static_cast<std::size_t>(std::min(first_start + n - 1, hi) - lo + 1);
      if (a.bits().count_range(0, end) > 0) out.set_range(0, end);
    }
    return LatticeSet(w, std::move(out));
  }

  const std::int64_t blo = floor_div(lo, n);
  const std::int64_t span = floor_div(hi, n) - blo + 1;
  auto block_id = [&](const Point& p) {
    std::int64_t id = 0;
    for (int ax = 0; ax < w.dim(); ++ax) id = id * span + (floor_div(p[ax], n) - blo);
    return static_cast<std::size_t>(id);
  };
  std::int64_t blocks = 1;
  for (int ax = 0; ax < w.dim(); ++ax) blocks *= span;
  std::vector<char> marked(static_cast<std::size_t>(blocks), 0);
  for (const Point& p : a.points()) marked[block_id(p)] = 1;
  BitVector out(a.bits().size());
  for (std::int64_t i = 0; i < w.cell_count(); ++i) {
    if (marked[block_id(w.point_of(i))]) out.set(static_cast<std::size_t>(i));
  }
  return LatticeSet(w, std::move(out));
}

}  // namespace sumlab
