#include "sumlab/density.hpp"

#include <algorithm>
#include <cmath>

#include "sumlab/errors.hpp"
#include "sumlab/morphology.hpp"
#include "sumlab/parallel.hpp"

namespace sumlab {

namespace {

std::int64_t cube_volume(std::int64_t n, int dim) {
  std::int64_t v = 1;
  for (int a = 0; a < dim; ++a) v *= 2 * n + 1;
  return v;
}

// Counts |A ∩ window_n| for any n in O(1) after one pass over the set.
class WindowCounter {
 public:
  explicit WindowCounter(const LatticeSet& a) : w_(a.window()) {
    if (w_.dim() == 1) {
      prefix_.emplace(a.bits());
      return;
    }
    // Histogram by sup-norm, then cumulate.
    shells_.assign(static_cast<std::size_t>(w_.radius()) + 1, 0);
    const BitVector& bits = a.bits();
    for (std::size_t i = bits.find_next(0); i < bits.size(); i = bits.find_next(i + 1)) {
      const Point p = w_.point_of(static_cast<std::int64_t>(i));
      std::int64_t r = 0;
      for (int ax = 0; ax < w_.dim(); ++ax) r = std::max(r, p[ax] < 0 ? -p[ax] : p[ax]);
      ++shells_[static_cast<std::size_t>(r)];
    }
    for (std::size_t r = 1; r < shells_.size(); ++r) shells_[r] += shells_[r - 1];
  }

  [[nodiscard]] std::int64_t count(std::int64_t n) const {
    if (w_.is_classical()) return prefix_->prefix(static_cast<std::size_t>(n));
    if (w_.dim() == 1) {
      const std::int64_t mid = w_.radius();
      return prefix_->count(static_cast<std::size_t>(mid - n), static_cast<std::size_t>(mid + n + 1));
    }
    return shells_[static_cast<std::size_t>(n)];
  }

  [[nodiscard]] std::int64_t size(std::int64_t n) const { return w_.is_classical() ? n : cube_volume(n, w_.dim()); }

 private:
  Window w_;
  std::optional<PrefixCounter> prefix_;
  std::vector<std::int64_t> shells_;
};

// a/b < c/d for non-negative counts below 2^31.
bool less_ratio(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) { return a * d < c * b; }

std::vector<std::int64_t> normalize_radii(std::span<const std::int64_t> radii, std::int64_t n_max) {
  std::vector<std::int64_t> out;
  for (std::int64_t n : radii) {
    if (n >= 1 && n <= n_max) out.push_back(n);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool in_tail(const DensityProfile& p, std::int64_t n) { return Rational(n) >= p.tail_fraction * Rational(p.radius); }

}  // namespace

std::vector<std::int64_t> geometric_ladder(std::int64_t n_max, int count) {
  if (n_max < 1) throw InvalidArgument("ladder needs a positive top radius");
  if (count < 2) throw InvalidArgument("ladder needs at least two samples");
  std::vector<std::int64_t> out;
  out.reserve(static_cast<std::size_t>(count) + 1);
  const double top = std::log(static_cast<double>(n_max));
  for (int i = 0; i < count; ++i) {
    const double x = std::exp(top * i / (count - 1));
    out.push_back(std::clamp<std::int64_t>(std::llround(x), 1, n_max));
  }
  out.push_back(n_max);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Rational prefix_ratio(const LatticeSet& a, std::int64_t n) {
  if (n < 1 || n > a.window().radius()) throw InvalidArgument("prefix radius outside the window");
  WindowCounter counter(a);
  return Rational(counter.count(n), counter.size(n));
}

DensityProfile prefix_profile_at(const LatticeSet& a, std::span<const std::int64_t> radii, Rational tail_fraction) {
  if (tail_fraction <= Rational(0) || tail_fraction >= Rational(1)) {
    throw InvalidArgument("tail fraction must lie in (0,1)");
  }
  DensityProfile p;
  p.convention = a.window().convention();
  p.tail_fraction = tail_fraction;
  p.radius = a.window().radius();
  WindowCounter counter(a);
  for (std::int64_t n : normalize_radii(radii, p.radius)) {
    p.samples.push_back({n, Rational(counter.count(n), counter.size(n))});
  }
  return p;
}

DensityProfile prefix_profile(const LatticeSet& a, int sample_count, Rational tail_fraction) {
  const auto radii = geometric_ladder(a.window().radius(), sample_count);
  return prefix_profile_at(a, radii, tail_fraction);
}

TailEstimates tail_estimates(const DensityProfile& p) {
  if (p.samples.empty()) throw InvalidArgument("empty density profile");
  std::optional<TailEstimates> est;
  for (const auto& s : p.samples) {
    if (!in_tail(p, s.n)) continue;
    if (!est) {
      est = TailEstimates{s.ratio, s.ratio};
    } else {
      est->lower = std::min(est->lower, s.ratio);
      est->upper = std::max(est->upper, s.ratio);
    }
  }
  // The last sample is N itself, always in the tail, unless the caller chose radii.
  if (!est) throw InvalidArgument("density profile has no sample in its tail");
  return *est;
}

Rational schnirelmann(const LatticeSet& a) {
  if (!a.window().is_classical()) throw WrongConvention("Schnirelmann density needs a classical [1,N] window");
  const PrefixCounter prefix(a.bits());
  std::int64_t best_num = 1, best_den = 1;
  for (std::int64_t n = 1; n <= a.window().radius(); ++n) {
    const std::int64_t c = prefix.prefix(static_cast<std::size_t>(n));
    if (less_ratio(c, n, best_num, best_den)) {
      best_num = c;
      best_den = n;
      if (c == 0) break;
    }
  }
  return Rational(best_num, best_den);
}

std::vector<BanachValue> banach_profile(const LatticeSet& a, std::span<const std::int64_t> n_values) {
  const Window& w = a.window();
  std::vector<BanachValue> out;
  for (std::int64_t n : n_values) {
    if (n < 1) throw InvalidArgument("Banach radius must be positive");
    if (n > w.radius() / 2) {
      throw RadiusTooLarge("Banach radius " + std::to_string(n) + " exceeds N/2 = " + std::to_string(w.radius() / 2));
    }
  }
  if (w.dim() == 1) {
    const PrefixCounter prefix(a.bits());
    const std::int64_t cells = w.cell_count();
    for (std::int64_t n : n_values) {
      std::int64_t best = 0;
      for (std::int64_t c = n; c + n < cells; ++c) {
        best = std::max(best, prefix.count(static_cast<std::size_t>(c - n), static_cast<std::size_t>(c + n + 1)));
      }
      out.push_back({n, Rational(best, 2 * n + 1)});
    }
    return out;
  }

  const std::int64_t cells = w.cell_count();
  const std::int64_t ext = w.extent();
  for (std::int64_t n : n_values) {
    std::vector<std::uint32_t> cur(static_cast<std::size_t>(cells));
    for (std::int64_t i = 0; i < cells; ++i) cur[static_cast<std::size_t>(i)] = a.bits().test(static_cast<std::size_t>(i));
    std::vector<std::uint32_t> next(cur.size());
    std::vector<std::uint64_t> line(static_cast<std::size_t>(ext) + 1);
    for (int axis = 0; axis < w.dim(); ++axis) {
      const std::int64_t s = w.stride(axis);
      const std::int64_t outer = cells / (ext * s);
      std::fill(next.begin(), next.end(), 0U);
      for (std::int64_t o = 0; o < outer; ++o) {
        for (std::int64_t in = 0; in < s; ++in) {
          const std::int64_t base = o * ext * s + in;
          line[0] = 0;
          for (std::int64_t i = 0; i < ext; ++i) line[i + 1] = line[i] + cur[static_cast<std::size_t>(base + i * s)];
          for (std::int64_t i = n; i + n < ext; ++i) {
            next[static_cast<std::size_t>(base + i * s)] = static_cast<std::uint32_t>(line[i + n + 1] - line[i - n]);
          }
        }
      }
      cur.swap(next);
    }
    std::uint32_t best = 0;
    for (std::uint32_t v : cur) best = std::max(best, v);
    out.push_back({n, Rational(best, cube_volume(n, w.dim()))});
  }
  return out;
}

const WitnessEntry& WitnessTable::at(std::int64_t m, std::int64_t k) const {
  for (const auto& e : entries) {
    if (e.m == m && e.k == k) return e;
  }
  throw NotFound("no witness entry for m=" + std::to_string(m) + ", k=" + std::to_string(k));
}

LatticeSet witness_set(const LatticeSet& s, std::int64_t m, std::int64_t k) {
  return erode_cube(dilate_cube(s, m), k);
}

WitnessTable witness_table(const LatticeSet& s, std::int64_t m_max, std::int64_t k_max,
                           std::span<const std::int64_t> strong_sequence, std::string source, unsigned threads) {
  if (m_max < 0 || k_max < 0) throw InvalidArgument("m_max and k_max must be non-negative");
  const std::int64_t n = s.window().radius();
  if (m_max + k_max > n / 4) {
    throw RadiusTooLarge("m_max + k_max = " + std::to_string(m_max + k_max) + " exceeds N/4 = " + std::to_string(n / 4));
  }
  const auto radii = geometric_ladder(n, kDefaultSamples);
  std::vector<std::int64_t> strong(strong_sequence.begin(), strong_sequence.end());
  if (strong.empty()) strong = radii;

  const std::size_t per_m = static_cast<std::size_t>(k_max + 1);
  WitnessTable table;
  table.source = std::move(source);
  table.entries.resize(static_cast<std::size_t>(m_max + 1) * per_m);
  parallel_for(static_cast<std::size_t>(m_max + 1), threads, [&](std::size_t mi) {
    const auto m = static_cast<std::int64_t>(mi);
    const LatticeSet dilated = dilate_cube(s, m);
    for (std::int64_t k = 0; k <= k_max; ++k) {
      const LatticeSet w = erode_cube(dilated, k);
      const auto est = tail_estimates(prefix_profile_at(w, radii));
      const DensityProfile sp = prefix_profile_at(w, strong);
      std::optional<Rational> best;
      for (const auto& smp : sp.samples) {
        if (in_tail(sp, smp.n)) best = best ? std::max(*best, smp.ratio) : smp.ratio;
      }
      if (!best) throw InvalidArgument("strong sequence has no radius in the tail of the window");
      table.entries[mi * per_m + static_cast<std::size_t>(k)] = {m, k, est.lower, est.upper, *best};
    }
  });
  return table;
}

std::optional<std::int64_t> minimal_m_search(const LatticeSet& s, Rational level, Rational epsilon,
                                             std::int64_t k_max, EstimateMode mode,
                                             std::optional<std::int64_t> m_cap) {
  if (level <= Rational(0) || level > Rational(1)) throw InvalidArgument("level must lie in (0,1]");
  if (epsilon < Rational(0)) throw InvalidArgument("epsilon must be non-negative");
  if (k_max < 0) throw InvalidArgument("k_max must be non-negative");
  const std::int64_t quarter = s.window().radius() / 4;
  const std::int64_t cap = std::min(m_cap.value_or(quarter - k_max), quarter - k_max);
  const auto radii = geometric_ladder(s.window().radius(), kDefaultSamples);
  const Rational target = level - epsilon;
  LatticeSet dilated(s.window(), s.bits());
  for (std::int64_t m = 0; m <= cap; ++m) {
    if (m > 0) dilated = dilate_cube(dilated, 1);
    // Witness sets shrink as k grows, so k = k_max decides every k <= k_max.
    const auto est = tail_estimates(prefix_profile_at(erode_cube(dilated, k_max), radii));
    const Rational& v = mode == EstimateMode::Lower ? est.lower : est.upper;
    if (v >= target) return m;
  }
  return std::nullopt;
}

namespace {

// σ(A ∪ [1,m]) on a classical window.
Rational schnirelmann_with_prefix(const LatticeSet& a, const PrefixCounter& prefix, std::int64_t m) {
  const std::int64_t n_max = a.window().radius();
  if (m >= n_max) return Rational(1);
  std::int64_t best_num = 1, best_den = 1;
  const std::int64_t base = prefix.prefix(static_cast<std::size_t>(m));
  for (std::int64_t n = m + 1; n <= n_max; ++n) {
    const std::int64_t c = m + prefix.prefix(static_cast<std::size_t>(n)) - base;
    if (less_ratio(c, n, best_num, best_den)) {
      best_num = c;
      best_den = n;
    }
  }
  return Rational(best_num, best_den);
}

}  // namespace

SaturationResult saturation_search(const LatticeSet& a, Rational epsilon, SaturationMode mode, std::int64_t n_test) {
  if (epsilon <= Rational(0) || epsilon >= Rational(1)) throw InvalidArgument("epsilon must lie in (0,1)");
  const std::int64_t n_max = a.window().radius();
  const std::int64_t m_hi = n_max / 4;

  if (mode == SaturationMode::SchnirelmannUnion) {
    if (!a.window().is_classical()) throw WrongConvention("Schnirelmann saturation needs a classical [1,N] window");
    const Rational target = tail_estimates(prefix_profile(a)).upper - epsilon;
    const PrefixCounter prefix(a.bits());
    auto value = [&](std::int64_t m) { return schnirelmann_with_prefix(a, prefix, m); };
    if (value(m_hi) < target) {
      throw NotFound("no m <= N/4 brings the Schnirelmann density within epsilon of the upper density");
    }
    std::int64_t lo = 0, hi = m_hi;
    while (lo < hi) {
      const std::int64_t mid = lo + (hi - lo) / 2;
      if (value(mid) >= target) hi = mid; else lo = mid + 1;
    }
    return {lo, value(lo), target};
  }

  if (n_test == 0) n_test = std::max<std::int64_t>(1, n_max / 16);
  const std::int64_t radii[] = {n_test};
  if (banach_profile(a, radii).front().sup_ratio == Rational(0)) {
    throw InvalidArgument("Banach saturation needs a set with positive Banach estimate");
  }
  const Rational target = Rational(1) - epsilon;
  auto value = [&](std::int64_t m) { return banach_profile(dilate_cube(a, m), radii).front().sup_ratio; };
  if (!(value(m_hi) > target)) throw NotFound("no m <= N/4 lifts the Banach estimate above 1 - epsilon");
  std::int64_t lo = 0, hi = m_hi;
  while (lo < hi) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    if (value(mid) > target) hi = mid; else lo = mid + 1;
  }
  return {lo, value(lo), target};
}

AdaptiveResult adaptive_gap_check(const LatticeSet& s, std::span<const std::int64_t> f, std::int64_t m_f,
                                  Rational level) {
  if (m_f < 1) throw InvalidArgument("m_f must be positive");
  if (static_cast<std::int64_t>(f.size()) < m_f) throw InvalidArgument("f table shorter than m_f");
  for (std::size_t i = 1; i < f.size(); ++i) {
    if (f[i] < f[i - 1]) throw InvalidArgument("f must be non-decreasing");
  }
  const std::int64_t quarter = s.window().radius() / 4;
  const std::int64_t f_top = static_cast<std::int64_t>(f.size()) > m_f ? f[static_cast<std::size_t>(m_f)]
                                                                        : f[static_cast<std::size_t>(m_f - 1)];
  if (f_top + m_f > quarter) {
    throw RadiusTooLarge("f(m_f) + m_f = " + std::to_string(f_top + m_f) + " exceeds N/4 = " + std::to_string(quarter));
  }
  LatticeSet witnesses(s.window());
  LatticeSet dilated(s.window(), s.bits());
  for (std::int64_t m = 0; m < m_f; ++m) {
    if (m > 0) dilated = dilate_cube(dilated, 1);
    witnesses = set_union(witnesses, erode_cube(dilated, f[static_cast<std::size_t>(m)]));
  }
  AdaptiveResult r;
  r.lower = tail_estimates(prefix_profile(witnesses)).lower;
  r.level = level;
  r.meets_level = r.lower >= level;
  return r;
}

}  // namespace sumlab
