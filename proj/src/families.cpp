#include "sumlab/families.hpp"

#include <algorithm>
#include <limits>

#include "sumlab/errors.hpp"

namespace sumlab {

namespace mp = boost::multiprecision;

namespace {

void require_classical(const Window& w, const char* family) {
  if (!w.is_classical()) throw WrongConvention(std::string(family) + " is defined on classical [1,N] windows");
}

// Sets [lo, hi] (values) clipped to the window.
void add_interval(BitVector& bits, const Window& w, std::int64_t lo, std::int64_t hi) {
  lo = std::max(lo, w.lower());
  hi = std::min(hi, w.upper());
  if (lo > hi) return;
  bits.set_range(static_cast<std::size_t>(lo - w.lower()), static_cast<std::size_t>(hi - w.lower() + 1));
}

// Multiples of `step` in [lo, hi], clipped.
void add_progression(BitVector& bits, const Window& w, std::int64_t step, std::int64_t lo, std::int64_t hi) {
  lo = std::max(lo, w.lower());
  hi = std::min(hi, w.upper());
  if (lo > hi) return;
  std::int64_t first = lo % step == 0 ? lo : lo + (step - ((lo % step) + step) % step);
  for (std::int64_t v = first; v <= hi; v += step) bits.set(static_cast<std::size_t>(v - w.lower()));
}

std::int64_t checked_pow(std::int64_t base, std::int64_t e) {
  std::int64_t r = 1;
  for (std::int64_t i = 0; i < e; ++i) {
    if (r > std::numeric_limits<std::int64_t>::max() / base) throw GrowthTooLarge("power exceeds 64-bit range");
    r *= base;
  }
  return r;
}

// n! for n <= 20, saturating above.
std::int64_t factorial_or_max(std::int64_t n) {
  std::int64_t r = 1;
  for (std::int64_t i = 2; i <= n; ++i) {
    if (r > std::numeric_limits<std::int64_t>::max() / i) return std::numeric_limits<std::int64_t>::max();
    r *= i;
  }
  return r;
}

// Members of D (restricted to gap levels p <= p_max) among 0 .. length-1.
BitVector d_segment(std::int64_t base, std::int64_t length, std::int64_t p_max) {
  BitVector d(static_cast<std::size_t>(length), true);
  for (std::int64_t p = 1; p <= p_max; ++p) {
    const std::int64_t gap = checked_pow(base, p);
    if (gap >= length) break;
    const std::int64_t period = gap * gap;
    if (period - gap >= length) break;
    for (std::int64_t top = period; top - gap < length; top += period) {
      const std::int64_t hi = std::min(top - 1, length - 1);
      for (std::int64_t x = top - gap; x <= hi; ++x) d.reset(static_cast<std::size_t>(x));
    }
  }
  return d;
}

void or_segment(BitVector& bits, const Window& w, const BitVector& seg, std::int64_t offset) {
  for (auto [start, len] : seg.runs()) {
    add_interval(bits, w, offset + static_cast<std::int64_t>(start), offset + static_cast<std::int64_t>(start + len) - 1);
  }
}

}  // namespace

SetPair gen_upper_pair(const Window& window) {
  require_classical(window, "upper_pair");
  const std::int64_t n_max = window.upper();
  BitVector a(static_cast<std::size_t>(window.cell_count()));
  for (std::int64_t p = 2; p <= n_max; p *= 2) add_interval(a, window, p, p + p / 2);
  BitVector b(a.size());
  std::int64_t f = 1;
  for (std::int64_t n = 1; f <= n_max; ++n) {
    f *= n;
    if (f > n_max) break;
    add_interval(b, window, f, f + n);
  }
  return {LatticeSet(window, std::move(a)), LatticeSet(window, std::move(b))};
}

LatticeSet gen_epsilon_set(const Window& window) {
  require_classical(window, "epsilon_set");
  const std::int64_t n_max = window.upper();
  BitVector bits(static_cast<std::size_t>(window.cell_count()));
  for (std::int64_t j = 1; j < 62 && (std::int64_t{1} << (j - 1)) <= n_max; ++j) {
    const std::int64_t top = std::int64_t{1} << j;
    for (std::int64_t i = 1; i <= j; ++i) {
      const std::int64_t lo = top - (std::int64_t{1} << (j - i));
      // For i = j the right end is 2^j - 1/2; only 2^j - 1 is an integer below it.
      const std::int64_t hi = i < j ? top - (std::int64_t{1} << (j - i - 1)) : top - 1;
      if (lo > n_max) break;
      add_progression(bits, window, i, lo, hi);
    }
  }
  return LatticeSet(window, std::move(bits));
}

std::int64_t optimal_block_length(std::int64_t i) {
  if (i < 1) throw InvalidArgument("block index starts at 1");
  // Group g has g + 1 entries 1..g+1.
  std::int64_t g = 1;
  while (i > g + 1) {
    i -= g + 1;
    ++g;
  }
  return i;
}

LatticeSet gen_optimal_C(const Window& window) {
  require_classical(window, "optimal_C");
  const std::int64_t n_max = window.upper();
  if (n_max > factorial_or_max(11)) throw InvalidArgument("optimal_C needs N <= 11!");
  BitVector bits(static_cast<std::size_t>(window.cell_count()));
  std::int64_t start = 1;
  for (std::int64_t i = 1; start <= n_max; ++i) {
    const std::int64_t end = std::min(start * (i + 1) - 1, n_max);
    const std::int64_t s = optimal_block_length(i);
    // First run of C at or before `start`: residue 0 mod 2s.
    for (std::int64_t run = start - start % (2 * s); run <= end; run += 2 * s) {
      add_interval(bits, window, std::max(run, start), std::min(run + s - 1, end));
    }
    start *= i + 1;
  }
  return LatticeSet(window, std::move(bits));
}

LatticeSet gen_optimal_C_segment(std::int64_t i, std::int64_t length) {
  if (i < 1) throw InvalidArgument("block index starts at 1");
  if (length < 1) throw InvalidArgument("segment length must be positive");
  const std::int64_t s = optimal_block_length(i);
  const std::int64_t period = 2 * s;
  std::int64_t r0 = 1;
  for (std::int64_t t = 2; t <= i; ++t) r0 = (r0 * t) % period;
  const Window w = Window::classical(length);
  BitVector bits(static_cast<std::size_t>(length));
  for (std::int64_t t = 0; t < length; ++t) {
    if ((r0 + t) % period < s) bits.set(static_cast<std::size_t>(t));
  }
  return LatticeSet(w, std::move(bits));
}

std::int64_t GrowthMap::at(std::int64_t n, std::int64_t p) const {
  if (n < first_n || n > last_n()) throw InvalidArgument("growth row " + std::to_string(n) + " not in the map");
  const auto& row = rows[static_cast<std::size_t>(n - first_n)];
  if (p < 0 || p >= static_cast<std::int64_t>(row.size())) {
    throw InvalidArgument("growth column " + std::to_string(p) + " not in row " + std::to_string(n));
  }
  return row[static_cast<std::size_t>(p)];
}

GrowthMap default_growth(std::int64_t base) {
  if (base < 3) throw InvalidArgument("base must be at least 3");
  GrowthMap g;
  g.first_n = 2;
  g.rows = {{checked_pow(base, 4), checked_pow(base, 5), checked_pow(base, 6)},
            {checked_pow(base, 7), checked_pow(base, 8), checked_pow(base, 9), checked_pow(base, 13)}};
  return g;
}

mp::cpp_rational big_pair_r(std::int64_t base, std::int64_t p) {
  if (base < 3) throw InvalidArgument("base must be at least 3");
  if (p < 1) throw InvalidArgument("r_p is defined for p >= 1");
  const mp::cpp_int bp = mp::pow(mp::cpp_int(base), static_cast<unsigned>(p));
  return mp::cpp_rational(bp - 2, 2 * (bp - 1));
}

LatticeSet big_pair_D(std::int64_t base, const Window& window) {
  require_classical(window, "big_pair");
  if (base < 3) throw InvalidArgument("base must be at least 3");
  const std::int64_t n_max = window.upper();
  const BitVector seg = d_segment(base, n_max + 1, std::numeric_limits<std::int64_t>::max());
  BitVector bits(static_cast<std::size_t>(window.cell_count()));
  or_segment(bits, window, seg, 0);
  return LatticeSet(window, std::move(bits));
}

SetPair gen_big_pair(std::int64_t base, const GrowthMap& growth, const Window& window) {
  require_classical(window, "big_pair");
  if (base < 3) throw InvalidArgument("base must be at least 3");
  const std::int64_t n_max = window.upper();
  if (growth.rows.empty()) throw InvalidArgument("growth map has no rows");
  std::int64_t prev = 0;
  for (std::int64_t n = growth.first_n; n <= growth.last_n(); ++n) {
    const auto& row = growth.rows[static_cast<std::size_t>(n - growth.first_n)];
    if (static_cast<std::int64_t>(row.size()) != n + 1) {
      throw InvalidArgument("growth row " + std::to_string(n) + " needs " + std::to_string(n + 1) + " values");
    }
    for (std::int64_t v : row) {
      if (v <= prev) throw InvalidArgument("growth map must be strictly increasing");
      if (v > n_max) throw GrowthTooLarge("growth value " + std::to_string(v) + " exceeds N = " + std::to_string(n_max));
      prev = v;
    }
  }
  auto next_row_start = [&](std::int64_t n) { return n < growth.last_n() ? growth.at(n + 1, 0) : n_max; };

  BitVector a(static_cast<std::size_t>(window.cell_count()));
  add_progression(a, window, 2, 1, growth.at(growth.first_n, 0) - 1);
  for (std::int64_t n = growth.first_n; n <= growth.last_n(); ++n) {
    add_progression(a, window, 2, growth.at(n, 0), growth.at(n, 1));
    for (std::int64_t p = 1; p < n; ++p) {
      const std::int64_t lo = growth.at(n, p);
      const std::int64_t hi = growth.at(n, p + 1);
      const mp::cpp_rational r = big_pair_r(base, p);
      const mp::cpp_int scaled = mp::numerator(r) * (hi - lo) / mp::denominator(r);  // floor, all positive
      const std::int64_t len = scaled.convert_to<std::int64_t>();
      add_interval(a, window, lo, lo + len);
      add_progression(a, window, checked_pow(base, p), lo + len, hi);
    }
    add_progression(a, window, 2, growth.at(n, n), next_row_start(n));
  }

  BitVector b(a.size());
  for (std::int64_t n = growth.first_n; n <= growth.last_n(); ++n) {
    const std::int64_t offset = growth.at(n, 0);
    const std::int64_t f_len = std::min(checked_pow(base, 2 * n), n_max - offset + 1);
    or_segment(b, window, d_segment(base, f_len, n), offset);
  }
  return {LatticeSet(window, std::move(a)), LatticeSet(window, std::move(b))};
}

LatticeSet gen_non_pws(std::int64_t n0, const Window& window) {
  if (n0 < 3) throw InvalidArgument("non_pws needs n0 >= 3");
  if (window.dim() != 1) throw WrongConvention("non_pws is one-dimensional");
  const std::int64_t lo = window.lower();
  const std::int64_t hi = window.upper();
  const std::int64_t reach = std::max(-lo, hi);
  BitVector blocks(static_cast<std::size_t>(window.cell_count()));
  for (std::int64_t j = n0;; ++j) {
    const std::int64_t jf = factorial_or_max(j);
    const std::int64_t len = factorial_or_max(j - 1);
    // x = -1 gives [-j! + 1, -j! + (j-1)!], the block nearest the origin.
    if (jf == std::numeric_limits<std::int64_t>::max() || jf - len > reach) break;
    const std::int64_t x_lo = -((len - lo) / jf) - 1;
    const std::int64_t x_hi = hi / jf;
    for (std::int64_t x = x_lo; x <= x_hi; ++x) {
      if (x != 0) add_interval(blocks, window, jf * x + 1, jf * x + len);
    }
  }
  blocks.flip();
  return LatticeSet(window, std::move(blocks));
}

const std::vector<FamilyInfo>& family_catalog() {
  static const std::vector<FamilyInfo> catalog = {
      {"upper_pair", true, {}},
      {"epsilon_set", false, {}},
      {"optimal_C", false, {}},
      {"big_pair", true, {"base"}},
      {"non_pws", false, {"n0"}},
  };
  return catalog;
}

namespace {

std::int64_t param_or(const FamilyParams& params, std::string_view key, std::int64_t fallback) {
  auto it = params.find(key);
  return it == params.end() ? fallback : it->second;
}

}  // namespace

SetPair generate_family(std::string_view name, const FamilyParams& params, const Window& window) {
  const auto& catalog = family_catalog();
  auto info = std::find_if(catalog.begin(), catalog.end(), [&](const FamilyInfo& f) { return f.name == name; });
  if (info == catalog.end()) throw NotFound("unknown family '" + std::string(name) + "'");
  for (const auto& [key, value] : params) {
    if (std::find(info->params.begin(), info->params.end(), key) == info->params.end()) {
      throw InvalidArgument("family '" + std::string(name) + "' has no parameter '" + key + "'");
    }
  }
  const LatticeSet none(window);
  if (name == "upper_pair") return gen_upper_pair(window);
  if (name == "epsilon_set") return {gen_epsilon_set(window), none};
  if (name == "optimal_C") return {gen_optimal_C(window), none};
  if (name == "big_pair") {
    const std::int64_t base = param_or(params, "base", 4);
    return gen_big_pair(base, default_growth(base), window);
  }
  return {gen_non_pws(param_or(params, "n0", 3), window), none};
}

LatticeSet family_member(std::string_view name, const FamilyParams& params, std::string_view member,
                         const Window& window) {
  const auto& catalog = family_catalog();
  auto info = std::find_if(catalog.begin(), catalog.end(), [&](const FamilyInfo& f) { return f.name == name; });
  if (info == catalog.end()) throw NotFound("unknown family '" + std::string(name) + "'");
  if (info->is_pair) {
    if (member != "A" && member != "B") {
      throw InvalidArgument("family '" + std::string(name) + "' is a pair; select member .A or .B");
    }
  } else if (!member.empty()) {
    throw InvalidArgument("family '" + std::string(name) + "' has no members");
  }
  SetPair pair = generate_family(name, params, window);
  return member == "B" ? std::move(pair.b) : std::move(pair.a);
}

}  // namespace sumlab
