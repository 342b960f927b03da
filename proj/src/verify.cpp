#include "sumlab/verify.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <random>

#include "sumlab/density.hpp"
#include "sumlab/morphology.hpp"
#include "sumlab/parallel.hpp"

namespace sumlab {

Rational mann_sigma_sum(const LatticeSet& a, const LatticeSet& b) {
  detail::require_same_window(a, b);
  if (!a.window().is_classical()) throw WrongConvention("Mann checks need a classical [1,N] window");
  return schnirelmann(set_union(set_union(a, b), sumset(a, b)));
}

MannVerdict mann_check(const LatticeSet& a, const LatticeSet& b) {
  detail::require_same_window(a, b);
  if (!a.window().is_classical()) throw WrongConvention("Mann checks need a classical [1,N] window");
  const LatticeSet s = set_union(set_union(a, b), sumset(a, b));
  MannVerdict v;
  v.sigma_a = schnirelmann(a);
  v.sigma_b = schnirelmann(b);
  v.sigma_sum = schnirelmann(s);
  v.bound = std::min(v.sigma_a + v.sigma_b, Rational(1));
  v.holds = v.sigma_sum >= v.bound;
  if (!v.holds) {
    const PrefixCounter prefix(s.bits());
    for (std::int64_t n = 1; n <= s.window().radius(); ++n) {
      if (Rational(prefix.prefix(static_cast<std::size_t>(n)), n) < v.bound) {
        v.first_violation = n;
        break;
      }
    }
  }
  return v;
}

OracleCount mann_exhaustive(int n, unsigned threads) {
  if (n < 1 || n > 14) throw InvalidArgument("exhaustive Mann oracle needs 1 <= n <= 14");
  const std::uint32_t subsets = 1U << n;
  const std::uint32_t full = subsets - 1;
  // σ of every mask as num/den; bit x-1 stands for x.
  std::vector<std::uint8_t> num(subsets), den(subsets);
  for (std::uint32_t mask = 0; mask < subsets; ++mask) {
    int best_n = 1, best_d = 1;
    for (int k = 1; k <= n; ++k) {
      const int c = std::popcount(mask & ((1U << k) - 1));
      if (c * best_d < best_n * k) {
        best_n = c;
        best_d = k;
      }
    }
    num[mask] = static_cast<std::uint8_t>(best_n);
    den[mask] = static_cast<std::uint8_t>(best_d);
  }
  std::vector<std::uint64_t> per_a(subsets, 0);
  parallel_for(subsets, threads, [&](std::size_t ai) {
    const auto a = static_cast<std::uint32_t>(ai);
    std::uint64_t bad = 0;
    for (std::uint32_t b = 0; b < subsets; ++b) {
      std::uint32_t s = a | b;
      for (std::uint32_t rest = a; rest != 0; rest &= rest - 1) {
        s |= b << (std::countr_zero(rest) + 1);
      }
      s &= full;
      const int an = num[a], ad = den[a], bn = num[b], bd = den[b];
      const int sum_n = an * bd + bn * ad;
      const int sum_d = ad * bd;
      if (sum_n >= sum_d) {
        if (s != full) ++bad;
      } else if (num[s] * sum_d < sum_n * den[s]) {
        ++bad;
      }
    }
    per_a[ai] = bad;
  });
  return {std::uint64_t{subsets} * subsets, std::accumulate(per_a.begin(), per_a.end(), std::uint64_t{0})};
}

OracleCount mann_random(std::int64_t n, std::uint64_t count, std::uint64_t seed, unsigned threads) {
  const Window w = Window::classical(n);
  std::vector<std::uint8_t> bad(count, 0);
  parallel_for(count, threads, [&](std::size_t i) {
    std::seed_seq seq{seed, static_cast<std::uint64_t>(i)};
    std::mt19937_64 rng(seq);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    auto draw = [&] {
      const double p = unit(rng);
      BitVector bits(static_cast<std::size_t>(n));
      for (std::int64_t x = 0; x < n; ++x) {
        if (unit(rng) < p) bits.set(static_cast<std::size_t>(x));
      }
      // Half the draws contain 1 so that σ is not trivially 0.
      if (unit(rng) < 0.5) bits.set(0);
      return LatticeSet(w, std::move(bits));
    };
    const LatticeSet a = draw();
    const LatticeSet b = draw();
    bad[i] = mann_check(a, b).holds ? 0 : 1;
  });
  return {count, static_cast<std::uint64_t>(std::count(bad.begin(), bad.end(), 1))};
}

// ---------------------------------------------------------------------------

HypothesisFailed::HypothesisFailed(Reason reason, const std::string& detail)
    : Error(std::string(to_string(reason)) + ": " + detail), reason_(reason) {}

std::string_view to_string(HypothesisFailed::Reason r) {
  switch (r) {
    case HypothesisFailed::Reason::UncoveredCell: return "uncovered cell";
    case HypothesisFailed::Reason::MultiplicityExceeded: return "multiplicity exceeded";
    case HypothesisFailed::Reason::PerSetRatioExceeded: return "per-set ratio exceeded";
  }
  return "unknown";
}

namespace {

Rational cover_rhs(std::int64_t m, const Rational& t) { return Rational(m) * t / (Rational(1) + Rational(m - 1) * t); }

}  // namespace

CoverVerdict covering_bound_check(const CoverInstance& inst) {
  if (inst.mult_bound < 1) throw InvalidArgument("multiplicity bound must be positive");
  if (inst.threshold <= Rational(0) || inst.threshold >= Rational(1)) throw InvalidArgument("threshold must lie in (0,1)");
  std::map<Point, std::size_t> index;
  for (const Point& p : inst.ground) index.emplace(p, index.size());
  if (index.empty()) throw InvalidArgument("ground set is empty");
  auto lookup = [&](const Point& p, const char* what) {
    auto it = index.find(p);
    if (it == index.end()) throw InvalidArgument(std::string(what) + " cell " + to_string(p, inst.dim) + " is not in the ground set");
    return it->second;
  };

  std::vector<char> in_e(index.size(), 0);
  for (const Point& p : inst.target) in_e[lookup(p, "target")] = 1;
  std::vector<std::int64_t> cover(index.size(), 0);
  std::vector<std::vector<std::size_t>> members;
  for (const auto& t : inst.subsets) {
    std::vector<std::size_t> ids;
    for (const Point& p : t) ids.push_back(lookup(p, "subset"));
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    for (std::size_t id : ids) ++cover[id];
    members.push_back(std::move(ids));
  }
  for (const auto& [p, id] : index) {
    if (cover[id] == 0) throw HypothesisFailed(HypothesisFailed::Reason::UncoveredCell, to_string(p, inst.dim));
    if (cover[id] > inst.mult_bound) {
      throw HypothesisFailed(HypothesisFailed::Reason::MultiplicityExceeded,
                             to_string(p, inst.dim) + " lies in " + std::to_string(cover[id]) + " subsets");
    }
  }
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (members[i].empty()) continue;
    std::int64_t hit = 0;
    for (std::size_t id : members[i]) hit += in_e[id];
    const Rational ratio(hit, static_cast<std::int64_t>(members[i].size()));
    if (ratio > inst.threshold) {
      throw HypothesisFailed(HypothesisFailed::Reason::PerSetRatioExceeded,
                             "subset " + std::to_string(i) + " has ratio " + to_string(ratio));
    }
  }
  CoverVerdict v;
  v.lhs = Rational(std::count(in_e.begin(), in_e.end(), 1), static_cast<std::int64_t>(index.size()));
  v.rhs = cover_rhs(inst.mult_bound, inst.threshold);
  v.holds = v.lhs <= v.rhs;
  return v;
}

CoverOracleCount covering_exhaustive(int max_ground, int max_subsets, std::span<const Rational> thresholds) {
  if (max_ground < 1 || max_ground > 10) throw InvalidArgument("ground size must be 1..10");
  if (max_subsets < 1 || max_subsets > 4) throw InvalidArgument("subset count must be 1..4");
  CoverOracleCount out;
  for (int x = 1; x <= max_ground; ++x) {
    const std::uint32_t full = (1U << x) - 1;
    std::vector<std::uint32_t> family;
    // Non-decreasing tuples of nonempty masks enumerate multisets once.
    auto visit = [&](auto&& self, std::uint32_t first) -> void {
      if (!family.empty()) {
        std::uint32_t covered = 0;
        int worst = 0;
        for (std::uint32_t cell = 0; cell < static_cast<std::uint32_t>(x); ++cell) {
          int c = 0;
          for (std::uint32_t t : family) c += (t >> cell) & 1U;
          worst = std::max(worst, c);
          if (c > 0) covered |= 1U << cell;
        }
        for (std::int64_t m = 1; m <= 3; ++m) {
          for (std::uint32_t e = 0; e <= full; ++e) {
            for (const Rational& t : thresholds) {
              ++out.instances;
              if (covered != full || worst > m) continue;
              bool ratio_ok = true;
              for (std::uint32_t s : family) {
                // |T ∩ E| / |T| <= p/q
                if (static_cast<std::int64_t>(std::popcount(s & e)) * t.denominator() >
                    t.numerator() * std::popcount(s)) {
                  ratio_ok = false;
                  break;
                }
              }
              if (!ratio_ok) continue;
              ++out.hypotheses_ok;
              // |E| / x <= m p / (q + (m - 1) p)
              const std::int64_t p = t.numerator(), q = t.denominator();
              if (std::popcount(e) * (q + (m - 1) * p) > m * p * x) ++out.violations;
            }
          }
        }
      }
      if (static_cast<int>(family.size()) == max_subsets) return;
      for (std::uint32_t s = first; s <= full; ++s) {
        family.push_back(s);
        self(self, s);
        family.pop_back();
      }
    };
    visit(visit, 1);
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

// Calls fn(index) for every window cell of the cube.
template <class Fn>
void for_cube_cells(const Window& w, const Cube& c, Fn&& fn) {
  const int dim = w.dim();
  Point lo{0, 0, 0}, hi{0, 0, 0};
  for (int a = 0; a < dim; ++a) {
    lo[a] = std::max(c.center[a] - c.radius, w.lower());
    hi[a] = std::min(c.center[a] + c.radius, w.upper());
    if (lo[a] > hi[a]) return;
  }
  Point p = lo;
  while (true) {
    fn(static_cast<std::size_t>(w.index_of(p)));
    int a = dim - 1;
    while (a >= 0 && p[a] == hi[a]) {
      p[a] = lo[a];
      --a;
    }
    if (a < 0) return;
    ++p[a];
  }
}

bool cube_contains(const Cube& c, const Point& p, int dim) {
  for (int a = 0; a < dim; ++a) {
    if (p[a] < c.center[a] - c.radius || p[a] > c.center[a] + c.radius) return false;
  }
  return true;
}

}  // namespace

BesicovitchResult besicovitch_select(std::span<const Cube> cubes, const LatticeSet& ground) {
  const Window& w = ground.window();
  const int dim = w.dim();
  const BitVector& g = ground.bits();
  BitVector reach(g.size());
  for (const Cube& c : cubes) {
    if (c.radius < 1) throw InvalidArgument("cube radius must be positive");
    for_cube_cells(w, c, [&](std::size_t i) { reach.set(i); });
  }
  if (!g.is_subset_of(reach)) {
    const std::size_t miss = BitVector(g).and_not(reach).find_next(0);
    throw NotCoverable("ground cell " + to_string(w.point_of(static_cast<std::int64_t>(miss)), dim) +
                       " lies in no cube");
  }

  std::vector<std::size_t> order(cubes.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    if (cubes[i].radius != cubes[j].radius) return cubes[i].radius > cubes[j].radius;
    return cubes[i].center < cubes[j].center;
  });

  BesicovitchResult r;
  r.bound = 1;
  for (int a = 0; a < dim; ++a) r.bound *= 4;
  std::vector<std::int32_t> mult(static_cast<std::size_t>(w.cell_count()), 0);
  std::vector<char> taken(cubes.size(), 0);
  auto take = [&](std::size_t i) {
    taken[i] = 1;
    r.selected.push_back(i);
    for_cube_cells(w, cubes[i], [&](std::size_t cell) { ++mult[cell]; });
  };

  // Largest first; a cube is taken while its center is still uncovered and
  // it reaches some uncovered ground cell.
  for (std::size_t i : order) {
    const Cube& c = cubes[i];
    if (w.contains(c.center) && mult[static_cast<std::size_t>(w.index_of(c.center))] > 0) continue;
    bool useful = false;
    for_cube_cells(w, c, [&](std::size_t cell) { useful = useful || (g.test(cell) && mult[cell] == 0); });
    if (useful) take(i);
  }
  // Ground cells left over get the first cube in greedy order that holds them.
  for (std::size_t cell = g.find_next(0); cell < g.size(); cell = g.find_next(cell + 1)) {
    if (mult[cell] > 0) continue;
    const Point p = w.point_of(static_cast<std::int64_t>(cell));
    for (std::size_t i : order) {
      if (!taken[i] && cube_contains(cubes[i], p, dim)) {
        take(i);
        break;
      }
    }
  }

  bool first = true;
  for (std::size_t i = g.find_next(0); i < g.size(); i = g.find_next(i + 1)) {
    const std::int64_t v = mult[i];
    r.min_multiplicity = first ? v : std::min(r.min_multiplicity, v);
    r.max_multiplicity = first ? v : std::max(r.max_multiplicity, v);
    first = false;
  }
  return r;
}

// ---------------------------------------------------------------------------

void validate(const TwoScaleConfig& cfg) {
  if (cfg.smear < 1) throw ConfigInvalid("smear s must be positive");
  if (!(cfg.smear < cfg.inner_radius)) throw ConfigInvalid("need s < ν");
  if (!(cfg.inner_radius < cfg.outer_radius / 4)) throw ConfigInvalid("need ν < N/4");
  if (cfg.delta <= Rational(0) || cfg.delta >= Rational(1, 2)) throw ConfigInvalid("delta must lie in (0, 1/2)");
}

std::vector<std::int64_t> two_scale_ladder(const TwoScaleConfig& cfg) {
  validate(cfg);
  std::vector<std::int64_t> rungs;
  for (std::int64_t r = 8 * cfg.smear; r < cfg.inner_radius; r *= 2) rungs.push_back(r);
  rungs.push_back(cfg.inner_radius);
  return rungs;
}

namespace {

// |S ∩ (x + [-r,r]^dim)| for every cell x, counting only cells inside the window.
std::vector<std::uint32_t> box_counts(const BitVector& bits, const Window& w, std::int64_t r) {
  const std::int64_t cells = w.cell_count();
  const std::int64_t ext = w.extent();
  std::vector<std::uint32_t> cur(static_cast<std::size_t>(cells));
  for (std::size_t i = bits.find_next(0); i < bits.size(); i = bits.find_next(i + 1)) cur[i] = 1;
  std::vector<std::uint32_t> next(cur.size());
  std::vector<std::uint64_t> line(static_cast<std::size_t>(ext) + 1);
  for (int axis = 0; axis < w.dim(); ++axis) {
    const std::int64_t s = w.stride(axis);
    const std::int64_t outer = cells / (ext * s);
    for (std::int64_t o = 0; o < outer; ++o) {
      for (std::int64_t in = 0; in < s; ++in) {
        const std::int64_t base = o * ext * s + in;
        line[0] = 0;
        for (std::int64_t i = 0; i < ext; ++i) line[i + 1] = line[i] + cur[static_cast<std::size_t>(base + i * s)];
        for (std::int64_t i = 0; i < ext; ++i) {
          const std::int64_t lo = std::max<std::int64_t>(0, i - r);
          const std::int64_t hi = std::min(ext, i + r + 1);
          next[static_cast<std::size_t>(base + i * s)] = static_cast<std::uint32_t>(line[hi] - line[lo]);
        }
      }
    }
    cur.swap(next);
  }
  return cur;
}

}  // namespace

TwoScaleResult two_scale_density_fraction(const LatticeSet& e, const TwoScaleConfig& cfg) {
  validate(cfg);
  const Window& w = e.window();
  if (w.is_classical() || w.radius() != cfg.outer_radius) {
    throw ConfigInvalid("two-scale experiment needs a centered window of radius N = " + std::to_string(cfg.outer_radius));
  }
  const LatticeSet smeared = dilate_cube(e, cfg.smear);
  const auto cells = static_cast<std::size_t>(w.cell_count());
  std::vector<char> good(cells, 1);
  const std::int64_t dn = cfg.delta.numerator(), dd = cfg.delta.denominator();
  const BitVector everything(cells, true);
  for (std::int64_t r : two_scale_ladder(cfg)) {
    // Boxes are cut to the window, so the denominator is the clipped volume.
    const auto counts = box_counts(smeared.bits(), w, r);
    const auto volumes = box_counts(everything, w, r);
    for (std::size_t i = 0; i < cells; ++i) {
      if (good[i] && static_cast<std::int64_t>(counts[i]) * dd < (dd - dn) * std::int64_t{volumes[i]}) good[i] = 0;
    }
  }
  const auto points = static_cast<std::int64_t>(std::count(good.begin(), good.end(), 1));
  return {Rational(points, static_cast<std::int64_t>(cells)),
          Rational(smeared.cardinality(), static_cast<std::int64_t>(cells))};
}

std::vector<SyndeticRow> syndetic_point_fraction(const LatticeSet& x, const LatticeSet& y, const TwoScaleConfig& cfg,
                                                 std::int64_t m_max) {
  detail::require_same_window(x, y);
  validate(cfg);
  const Window& w = x.window();
  if (w.radius() != cfg.outer_radius) throw ConfigInvalid("window radius differs from N");
  if (m_max < 0) throw InvalidArgument("m_max must be non-negative");
  if (m_max + cfg.inner_radius > w.radius() / 4) {
    throw RadiusTooLarge("m_max + ν exceeds N/4 = " + std::to_string(w.radius() / 4));
  }
  LatticeSet dilated = sumset(x, y);
  std::vector<SyndeticRow> rows;
  for (std::int64_t m = 0; m <= m_max; ++m) {
    if (m > 0) dilated = dilate_cube(dilated, 1);
    rows.push_back({m, Rational(erode_cube(dilated, cfg.inner_radius).cardinality(), w.cell_count())});
  }
  return rows;
}

}  // namespace sumlab
