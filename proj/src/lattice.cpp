#include "sumlab/lattice.hpp"

#include <algorithm>
#include <charconv>

#include "sumlab/errors.hpp"

namespace sumlab {

std::string_view to_string(Convention c) {
  return c == Convention::Classical1D ? "classical1d" : "centered";
}

// ---------------------------------------------------------------------------
// Window

Window::Window(int dim, Convention convention, std::int64_t radius)
    : dim_(dim), convention_(convention), radius_(radius) {}

Window Window::classical(std::int64_t n) {
  if (n < 1) throw InvalidWindow("classical window needs N >= 1, got " + std::to_string(n));
  if (n > kMaxCells) throw InvalidWindow("window exceeds 2^31 cells");
  return Window(1, Convention::Classical1D, n);
}

Window Window::centered(std::int64_t radius, int dim) {
  if (dim < 1 || dim > kMaxDim) throw InvalidWindow("dimension must be 1..3, got " + std::to_string(dim));
  if (radius < 1) throw InvalidWindow("centered window needs N >= 1, got " + std::to_string(radius));
  const std::int64_t side = 2 * radius + 1;
  std::int64_t cells = 1;
  for (int a = 0; a < dim; ++a) {
    if (side > kMaxCells || cells > kMaxCells / side) throw InvalidWindow("window exceeds 2^31 cells");
    cells *= side;
  }
  return Window(dim, Convention::Centered, radius);
}

namespace {

std::int64_t parse_positive(std::string_view s, std::string_view spec) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw InvalidWindow("bad window spec '" + std::string(spec) + "' (expected 1d:N or cN:d)");
  }
  return v;
}

}  // namespace

Window Window::parse(std::string_view spec) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) {
    throw InvalidWindow("bad window spec '" + std::string(spec) + "' (expected 1d:N or cN:d)");
  }
  const std::string_view head = spec.substr(0, colon);
  const std::string_view tail = spec.substr(colon + 1);
  if (head == "1d") return classical(parse_positive(tail, spec));
  if (!head.empty() && head.front() == 'c') {
    return centered(parse_positive(head.substr(1), spec), static_cast<int>(parse_positive(tail, spec)));
  }
  throw InvalidWindow("bad window spec '" + std::string(spec) + "' (expected 1d:N or cN:d)");
}

std::string Window::spec() const {
  if (is_classical()) return "1d:" + std::to_string(radius_);
  return "c" + std::to_string(radius_) + ":" + std::to_string(dim_);
}

std::int64_t Window::cell_count() const noexcept {
  std::int64_t cells = 1;
  for (int a = 0; a < dim_; ++a) cells *= extent();
  return cells;
}

std::int64_t Window::stride(int axis) const noexcept {
  std::int64_t s = 1;
  for (int a = axis + 1; a < dim_; ++a) s *= extent();
  return s;
}

bool Window::contains(const Point& p) const noexcept {
  for (int a = 0; a < dim_; ++a) {
    if (p[a] < lower() || p[a] > upper()) return false;
  }
  return true;
}

bool Window::interior(const Point& p, std::int64_t margin) const noexcept {
  for (int a = 0; a < dim_; ++a) {
    if (p[a] < lower() + margin || p[a] > upper() - margin) return false;
  }
  return true;
}

std::int64_t Window::index_of(const Point& p) const noexcept {
  std::int64_t idx = 0;
  for (int a = 0; a < dim_; ++a) idx = idx * extent() + (p[a] - lower());
  return idx;
}

Point Window::point_of(std::int64_t index) const noexcept {
  Point p{0, 0, 0};
  for (int a = dim_ - 1; a >= 0; --a) {
    p[a] = index % extent() + lower();
    index /= extent();
  }
  return p;
}

Window Window::with_radius(std::int64_t radius) const {
  return is_classical() ? classical(radius) : centered(radius, dim_);
}

std::string to_string(const Point& p, int dim) {
  std::string s = "(";
  for (int a = 0; a < dim; ++a) {
    if (a) s += ",";
    s += std::to_string(p[a]);
  }
  return s + ")";
}

// ---------------------------------------------------------------------------
// LatticeSet

LatticeSet::LatticeSet(Window window)
    : window_(window), bits_(static_cast<std::size_t>(window.cell_count())) {}

LatticeSet::LatticeSet(Window window, BitVector bits, bool clipped)
    : window_(window), bits_(std::move(bits)), clipped_(clipped) {
  if (bits_.size() != static_cast<std::size_t>(window_.cell_count())) {
    throw InvalidArgument("membership vector size does not match the window");
  }
  cardinality_ = static_cast<std::int64_t>(bits_.count());
}

LatticeSet LatticeSet::full(const Window& window) {
  return LatticeSet(window, BitVector(static_cast<std::size_t>(window.cell_count()), true));
}

bool LatticeSet::contains(const Point& p) const noexcept {
  return window_.contains(p) && bits_.test(static_cast<std::size_t>(window_.index_of(p)));
}

std::vector<Point> LatticeSet::points() const {
  std::vector<Point> out;
  out.reserve(static_cast<std::size_t>(cardinality_));
  for (std::size_t i = bits_.find_next(0); i < bits_.size(); i = bits_.find_next(i + 1)) {
    out.push_back(window_.point_of(static_cast<std::int64_t>(i)));
  }
  return out;
}

std::vector<std::int64_t> LatticeSet::values() const {
  std::vector<std::int64_t> out;
  out.reserve(static_cast<std::size_t>(cardinality_));
  for (std::size_t i = bits_.find_next(0); i < bits_.size(); i = bits_.find_next(i + 1)) {
    out.push_back(static_cast<std::int64_t>(i) + window_.lower());
  }
  return out;
}

LatticeSet build_set(const Window& window, std::span<const Point> coords) {
  BitVector bits(static_cast<std::size_t>(window.cell_count()));
  for (const Point& p : coords) {
    if (!window.contains(p)) {
      throw OutOfWindow("coordinate " + to_string(p, window.dim()) + " lies outside window " + window.spec());
    }
    bits.set(static_cast<std::size_t>(window.index_of(p)));
  }
  return LatticeSet(window, std::move(bits));
}

LatticeSet build_set(const Window& window, std::span<const std::int64_t> values) {
  if (window.dim() != 1) throw InvalidArgument("scalar coordinates need a one-dimensional window");
  std::vector<Point> pts;
  pts.reserve(values.size());
  for (auto v : values) pts.push_back(Point{v, 0, 0});
  return build_set(window, std::span<const Point>(pts));
}

LatticeSet build_set(const Window& window, std::initializer_list<std::int64_t> values) {
  return build_set(window, std::span<const std::int64_t>(values.begin(), values.size()));
}

namespace detail {

void require_same_window(const LatticeSet& a, const LatticeSet& b) {
  if (!(a.window() == b.window())) {
    throw WindowMismatch("window mismatch: " + a.window().spec() + " vs " + b.window().spec());
  }
}

namespace {

// Cells whose coordinate along `axis` lies in [lo, hi) (0-based axis offsets).
BitVector axis_slab(const Window& w, int axis, std::int64_t lo, std::int64_t hi) {
  BitVector mask(static_cast<std::size_t>(w.cell_count()));
  const std::int64_t st = w.stride(axis);
  const std::int64_t period = w.extent() * st;
  for (std::int64_t o = 0; o < w.cell_count(); o += period) {
    mask.set_range(static_cast<std::size_t>(o + lo * st), static_cast<std::size_t>(o + hi * st));
  }
  return mask;
}

}  // namespace

BitVector shift_axis(const BitVector& bits, const Window& w, int axis, std::int64_t t) {
  if (t == 0) return bits;
  const std::int64_t L = w.extent();
  if (t >= L || -t >= L) return BitVector(bits.size());
  const std::int64_t st = w.stride(axis);
  if (axis == 0) return bits.shifted(t * st);
  BitVector src = bits;
  src &= axis_slab(w, axis, std::max<std::int64_t>(0, -t), std::min(L, L - t));
  return src.shifted(t * st);
}

BitVector dilate_axis(const BitVector& bits, const Window& w, int axis, std::int64_t lo, std::int64_t hi) {
  const std::int64_t L = w.extent();
  const std::int64_t fwd = std::min(hi, L - 1);
  const std::int64_t bwd = std::min(-lo, L - 1);
  BitVector out = bits;
  // out = bits + [0, c-1]; doubling keeps every intermediate point between x and x+t.
  for (std::int64_t c = 1; c <= fwd;) {
    const std::int64_t s = std::min(c, fwd + 1 - c);
    out |= shift_axis(out, w, axis, s);
    c += s;
  }
  if (bwd > 0) {
    BitVector back = bits;
    for (std::int64_t c = 1; c <= bwd;) {
      const std::int64_t s = std::min(c, bwd + 1 - c);
      back |= shift_axis(back, w, axis, -s);
      c += s;
    }
    out |= back;
  }
  return out;
}

}  // namespace detail

LatticeSet boolean_op(BoolOp op, const LatticeSet& a, const LatticeSet* b) {
  if (op == BoolOp::Complement) {
    if (b != nullptr) throw InvalidArgument("complement takes a single operand");
    BitVector bits = a.bits();
    bits.flip();
    return LatticeSet(a.window(), std::move(bits));
  }
  if (b == nullptr) throw InvalidArgument("binary set operation needs two operands");
  detail::require_same_window(a, *b);
  BitVector bits = a.bits();
  switch (op) {
    case BoolOp::Union: bits |= b->bits(); break;
    case BoolOp::Intersect: bits &= b->bits(); break;
    case BoolOp::Difference: bits.and_not(b->bits()); break;
    case BoolOp::Complement: break;
  }
  return LatticeSet(a.window(), std::move(bits));
}

LatticeSet translate(const LatticeSet& a, const Point& v) {
  BitVector bits = a.bits();
  for (int axis = 0; axis < a.window().dim(); ++axis) {
    bits = detail::shift_axis(bits, a.window(), axis, v[axis]);
  }
  LatticeSet out(a.window(), std::move(bits));
  return LatticeSet(a.window(), out.bits(), out.cardinality() < a.cardinality());
}

LatticeSet reembed(const LatticeSet& a, const Window& target) {
  const Window& src = a.window();
  if (src.convention() != target.convention() || src.dim() != target.dim()) {
    throw WindowMismatch("cannot re-embed " + src.spec() + " into " + target.spec());
  }
  BitVector bits(static_cast<std::size_t>(target.cell_count()));
  if (src.dim() == 1) {
    const std::int64_t offset = src.lower() - target.lower();
    const std::int64_t size = target.cell_count();
    for (auto [start, len] : a.bits().runs()) {
      const std::int64_t lo = std::max<std::int64_t>(0, static_cast<std::int64_t>(start) + offset);
      const std::int64_t hi = std::min<std::int64_t>(size, static_cast<std::int64_t>(start + len) + offset);
      if (lo < hi) bits.set_range(static_cast<std::size_t>(lo), static_cast<std::size_t>(hi));
    }
  } else {
    for (const Point& p : a.points()) {
      if (target.contains(p)) bits.set(static_cast<std::size_t>(target.index_of(p)));
    }
  }
  LatticeSet out(target, std::move(bits));
  const bool clipped = out.cardinality() < a.cardinality();
  return clipped ? LatticeSet(target, out.bits(), true) : out;
}

LatticeSet interior_mask(const Window& window, std::int64_t margin) {
  BitVector bits(static_cast<std::size_t>(window.cell_count()));
  const std::int64_t L = window.extent();
  if (2 * margin >= L) return LatticeSet(window, std::move(bits));
  // Recurse over axes; the last axis is a contiguous range.
  const int dim = window.dim();
  auto fill = [&](auto&& self, int axis, std::int64_t base) -> void {
    const std::int64_t st = window.stride(axis);
    if (axis == dim - 1) {
      bits.set_range(static_cast<std::size_t>(base + margin), static_cast<std::size_t>(base + L - margin));
      return;
    }
    for (std::int64_t c = margin; c < L - margin; ++c) self(self, axis + 1, base + c * st);
  };
  fill(fill, 0, 0);
  return LatticeSet(window, std::move(bits));
}

}  // namespace sumlab
