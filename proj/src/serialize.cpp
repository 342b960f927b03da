#include "sumlab/serialize.hpp"

#include <charconv>
#include <vector>

#include "sumlab/errors.hpp"

namespace sumlab {

std::string serialize(const LatticeSet& set) {
  const Window& w = set.window();
  std::string out = "window " + std::to_string(w.dim()) + " " + std::string(to_string(w.convention())) + " " +
                    std::to_string(w.radius()) + "\n";
  for (auto [start, len] : set.bits().runs()) {
    out += "run " + std::to_string(start) + " " + std::to_string(len) + "\n";
  }
  return out;
}

namespace {

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw FormatError("set file line " + std::to_string(line) + ": " + what);
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t pos = 0;
  while (pos <= line.size()) {
    const std::size_t sp = line.find(' ', pos);
    const std::size_t end = sp == std::string_view::npos ? line.size() : sp;
    fields.push_back(line.substr(pos, end - pos));
    pos = end + 1;
  }
  return fields;
}

std::int64_t field_int(std::string_view s, std::size_t line) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) fail(line, "expected integer, got '" + std::string(s) + "'");
  // Reject leading zeros and signs so the text stays canonical.
  if (std::to_string(v) != s) fail(line, "non-canonical integer '" + std::string(s) + "'");
  return v;
}

}  // namespace

LatticeSet deserialize(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) fail(lines.size() + 1, "missing trailing newline");
    lines.push_back(text.substr(pos, nl - pos));
    pos = nl + 1;
  }
  if (lines.empty()) fail(1, "missing window header");

  auto header = split_fields(lines[0]);
  if (header.size() != 4 || header[0] != "window") fail(1, "expected 'window <dim> <convention> <N>'");
  const std::int64_t dim = field_int(header[1], 1);
  const std::int64_t radius = field_int(header[3], 1);
  Window window = Window::classical(1);
  try {
    if (header[2] == to_string(Convention::Classical1D)) {
      if (dim != 1) fail(1, "classical1d windows are one-dimensional");
      window = Window::classical(radius);
    } else if (header[2] == to_string(Convention::Centered)) {
      window = Window::centered(radius, static_cast<int>(dim));
    } else {
      fail(1, "unknown convention '" + std::string(header[2]) + "'");
    }
  } catch (const InvalidWindow& e) {
    fail(1, e.what());
  }

  const std::int64_t cells = window.cell_count();
  BitVector bits(static_cast<std::size_t>(cells));
  std::int64_t next_free = 0;  // first index a new run may start at
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto f = split_fields(lines[i]);
    if (f.size() != 3 || f[0] != "run") fail(i + 1, "expected 'run <start-index> <length>'");
    const std::int64_t start = field_int(f[1], i + 1);
    const std::int64_t len = field_int(f[2], i + 1);
    if (len < 1) fail(i + 1, "run length must be positive");
    if (start < next_free) fail(i + 1, "runs must be increasing and separated");
    if (start > cells - len) fail(i + 1, "run exceeds window");
    bits.set_range(static_cast<std::size_t>(start), static_cast<std::size_t>(start + len));
    next_free = start + len + 1;
  }
  return LatticeSet(window, std::move(bits));
}

}  // namespace sumlab
