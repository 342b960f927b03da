// Acceptance runner: one PASS/FAIL line per criterion.
//   acceptance                 run all twelve
//   acceptance --criterion N   run one

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "corpus.hpp"
#include "sumlab/density.hpp"
#include "sumlab/families.hpp"
#include "sumlab/morphology.hpp"
#include "sumlab/setlang.hpp"
#include "sumlab/verify.hpp"

using namespace sumlab;
namespace sl = sumlab::setlang;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  const char* title;
  double budget_s;  // 0 means no runtime bound
  std::function<Outcome()> run;
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.5f", v);
  return buf;
}

std::string fmt(const Rational& r) { return fmt(to_double(r)); }

LatticeSet random_set(const Window& w, std::mt19937_64& rng, double p) {
  std::bernoulli_distribution coin(p);
  BitVector bits(static_cast<std::size_t>(w.cell_count()));
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (coin(rng)) bits.set(i);
  }
  return LatticeSet(w, std::move(bits));
}

LatticeSet from_mask(const Window& w, std::uint64_t mask) {
  BitVector bits(static_cast<std::size_t>(w.cell_count()));
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if ((mask >> i) & 1U) bits.set(i);
  }
  return LatticeSet(w, std::move(bits));
}

bool subset_of(const LatticeSet& a, const LatticeSet& b) { return difference(a, b).empty(); }

Outcome upper_pair_densities() {
  const SetPair p = gen_upper_pair(Window::classical(std::int64_t{1} << 20));
  const auto t = tail_estimates(prefix_profile(p.a));
  return {within(t.lower, {1, 2}, {1, 50}) && within(t.upper, {2, 3}, {1, 50}),
          "lower " + fmt(t.lower) + ", upper " + fmt(t.upper)};
}

Outcome upper_pair_witnesses() {
  const SetPair p = gen_upper_pair(Window::classical(std::int64_t{1} << 20));
  const WitnessTable table = witness_table(sumset(p.a, p.b), 8, 8);
  int bad = 0;
  Rational lo_min(1), lo_max(0), up_min(1), up_max(0);
  for (const auto& e : table.entries) {
    if (!within(e.lower, {1, 2}, {3, 100}) || !within(e.upper, {2, 3}, {3, 100})) ++bad;
    lo_min = std::min(lo_min, e.lower);
    lo_max = std::max(lo_max, e.lower);
    up_min = std::min(up_min, e.upper);
    up_max = std::max(up_max, e.upper);
  }
  return {bad == 0, std::to_string(bad) + "/" + std::to_string(table.entries.size()) + " entries off; lower in [" +
                        fmt(lo_min) + ", " + fmt(lo_max) + "], upper in [" + fmt(up_min) + ", " + fmt(up_max) + "]"};
}

Outcome epsilon_gap_bound() {
  const LatticeSet a = gen_epsilon_set(Window::classical(std::int64_t{1} << 22));
  int bad = 0;
  std::string detail;
  for (std::int64_t m = 0; m <= 6; ++m) {
    const auto est = tail_estimates(prefix_profile(witness_set(a, m, 64)));
    const Rational bound = Rational(1) - Rational(1, std::int64_t{1} << m) + Rational(1, 50);
    if (est.upper > bound) ++bad;
    detail += "m=" + std::to_string(m) + ":" + fmt(est.upper) + (est.upper > bound ? "! " : " ");
  }
  return {bad == 0, detail + "(k=64)"};
}

Outcome optimal_c() {
  const LatticeSet c = gen_optimal_C(Window::classical(3628800));
  const auto est = tail_estimates(prefix_profile(c));
  // Block 14 is the first with s_i = 5.
  const LatticeSet witness = erode_cube(dilate_block(gen_optimal_C_segment(14, 4000), 3), 4);
  return {within(est.lower, {1, 2}, {1, 100}) && witness.empty(),
          "lower " + fmt(est.lower) + ", interior witness count " + std::to_string(witness.cardinality())};
}

Outcome big_pair_mechanism() {
  namespace mp = boost::multiprecision;
  bool identity = true;
  for (std::int64_t base : {3, 4, 10}) {
    for (std::int64_t p = 1; p <= 12; ++p) {
      const mp::cpp_rational r = big_pair_r(base, p);
      const mp::cpp_rational bp = mp::pow(mp::cpp_int(base), static_cast<unsigned>(p));
      identity = identity && (r + (1 - r) / bp == mp::cpp_rational(1, 2));
    }
  }
  bool dense = true;
  std::string detail = identity ? "identity exact" : "identity broken";
  for (std::int64_t base : {3, 4}) {
    std::int64_t n = 1;
    for (int i = 0; i < 10; ++i) n *= base;
    const Rational density(big_pair_D(base, Window::classical(n)).cardinality(), n);
    dense = dense && density >= Rational(1) - Rational(1, base - 1);
    detail += ", D(" + std::to_string(base) + ") " + fmt(density);
  }
  const GrowthMap growth = default_growth(4);
  const SetPair pair = gen_big_pair(4, growth, Window::classical(growth.at(3, 3)));
  const auto est = tail_estimates(prefix_profile(witness_set(sumset(pair.a, pair.b), 1, 16)));
  const bool drop = est.lower < Rational(12, 25);
  detail += ", witness lower " + fmt(est.lower);
  return {identity && dense && drop, detail};
}

Outcome mann_oracle() {
  const OracleCount ex = mann_exhaustive(10);
  const OracleCount rnd = mann_random(1000, 10000, 20260101);
  return {ex.violations == 0 && rnd.violations == 0 && ex.cases > 0 && rnd.cases == 10000,
          std::to_string(ex.violations) + "/" + std::to_string(ex.cases) + " exhaustive, " +
              std::to_string(rnd.violations) + "/" + std::to_string(rnd.cases) + " random"};
}

Outcome covering_oracle() {
  const std::vector<Rational> ts{{1, 4}, {1, 3}, {1, 2}, {2, 3}};
  const CoverOracleCount c = covering_exhaustive(6, 3, ts);
  return {c.violations == 0 && c.hypotheses_ok > 0,
          std::to_string(c.violations) + " violations over " + std::to_string(c.hypotheses_ok) +
              " instances meeting the hypotheses"};
}

Outcome besicovitch_audit() {
  std::mt19937_64 rng(404);
  int bad = 0, total = 0;
  for (int dim = 1; dim <= 3; ++dim) {
    const Window w = Window::centered(dim == 1 ? 40 : dim == 2 ? 10 : 5, dim);
    std::uniform_int_distribution<std::int64_t> coord(w.lower(), w.upper());
    std::uniform_int_distribution<std::int64_t> radius(1, 4);
    std::uniform_real_distribution<double> fill(0.05, 0.5);
    for (int trial = 0; trial < 1000; ++trial, ++total) {
      const LatticeSet ground = random_set(w, rng, fill(rng));
      std::vector<Cube> cubes;
      for (const Point& p : ground.points()) cubes.push_back({p, radius(rng)});
      for (int extra = 0; extra < 50; ++extra) {
        Point c{0, 0, 0};
        for (int a = 0; a < dim; ++a) c[a] = coord(rng);
        cubes.push_back({c, radius(rng)});
      }
      std::shuffle(cubes.begin(), cubes.end(), rng);
      const auto r = besicovitch_select(cubes, ground);
      if (!r.audit_ok()) ++bad;
    }
  }
  return {bad == 0, std::to_string(bad) + "/" + std::to_string(total) + " instances failed the audit"};
}

// Counts violations of duality, opening/closing, block idempotence and the
// quotient/fill equivalence for one set.
int morphology_failures(const LatticeSet& s, std::span<const std::int64_t> ks, std::span<const std::int64_t> ns) {
  const Window& w = s.window();
  int failures = 0;
  for (std::int64_t k : ks) {
    const LatticeSet inner = interior_mask(w, k);
    const LatticeSet eroded = erode_cube(s, k);
    if (eroded != intersect(complement(dilate_cube(complement(s), k)), inner)) ++failures;
    if (!subset_of(dilate_cube(eroded, k), s)) ++failures;
    if (!subset_of(intersect(s, inner), erode_cube(dilate_cube(s, k), k))) ++failures;
  }
  for (std::int64_t n : ns) {
    const LatticeSet fill = block_fill(s, n);
    if (!subset_of(s, fill) || block_fill(fill, n) != fill) ++failures;
    const LatticeSet q = block_quotient(s, n);
    for (std::int64_t x = q.window().lower(); x <= q.window().upper(); ++x) {
      bool inside = true;
      for (std::int64_t c = std::max(n * x, w.lower()); c <= std::min(n * x + n - 1, w.upper()) && inside; ++c) {
        inside = fill.contains(c);
      }
      if (q.contains(x) != inside) ++failures;
    }
  }
  return failures;
}

Outcome morphology_suite() {
  int failures = 0;
  const std::vector<std::int64_t> small_ks{0, 1, 2, 3};
  const std::vector<std::int64_t> small_ns{1, 2, 3, 4, 5};
  const Window w12 = Window::classical(12);
  for (std::uint64_t mask = 0; mask < 4096; ++mask) failures += morphology_failures(from_mask(w12, mask), small_ks, small_ns);

  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> fill(0.02, 0.98);
  const Window big = Window::classical(100000);
  for (int trial = 0; trial < 10000; ++trial) {
    const std::int64_t k = trial % 3 + 1;
    const std::int64_t n = trial % 4 + 2;
    failures += morphology_failures(random_set(big, rng, fill(rng)), std::span(&k, 1), std::span(&n, 1));
  }
  return {failures == 0, std::to_string(failures) + " failures over 4096 exhaustive + 10000 random sets"};
}

Outcome two_scale() {
  const std::int64_t n = 1000000;
  const Window w = Window::centered(n, 1);
  const TwoScaleConfig cfg{n, 1000, 10, {1, 50}};
  BitVector half(static_cast<std::size_t>(w.cell_count()));
  half.set_range(static_cast<std::size_t>(n), static_cast<std::size_t>(2 * n + 1));
  const auto base = two_scale_density_fraction(LatticeSet(w, std::move(half)), cfg);
  const bool base_ok = within(base.fraction, base.smeared_measure, {1, 100}) &&
                       within(base.smeared_measure, {1, 2}, {1, 100});

  std::mt19937_64 rng(61);
  std::uniform_int_distribution<int> pieces(1, 12);
  std::uniform_int_distribution<std::int64_t> start(-n, n);
  std::uniform_int_distribution<std::int64_t> length(20000, 200000);
  Rational worst(0);
  for (int trial = 0; trial < 50; ++trial) {
    BitVector bits(static_cast<std::size_t>(w.cell_count()));
    for (int i = pieces(rng); i > 0; --i) {
      const std::int64_t lo = start(rng);
      const std::int64_t hi = std::min(n, lo + length(rng));
      bits.set_range(static_cast<std::size_t>(lo + n), static_cast<std::size_t>(hi + n + 1));
    }
    const auto r = two_scale_density_fraction(LatticeSet(w, std::move(bits)), cfg);
    const Rational gap = r.fraction > r.smeared_measure ? r.fraction - r.smeared_measure
                                                         : r.smeared_measure - r.fraction;
    worst = std::max(worst, gap);
  }
  return {base_ok && worst <= Rational(1, 20), "[0,N]: fraction " + fmt(base.fraction) + " vs smeared " +
                                                   fmt(base.smeared_measure) + "; worst random gap " + fmt(worst)};
}

Outcome thick_bound() {
  std::mt19937_64 rng(1213);
  std::uniform_real_distribution<double> fill(0.3, 0.99);
  const Window w = Window::classical(3000);
  int failures = 0, values = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const std::int64_t k = trial % 3 + 1;
    BitVector bits = random_set(w, rng, fill(rng)).bits();
    // Punch a hole into every run of length 2k+1 so no k-cube survives.
    for (std::size_t i = 0; i + 2 * k < bits.size(); ++i) {
      if (bits.count_range(i, i + 2 * k + 1) == static_cast<std::size_t>(2 * k + 1)) bits.reset(i + 2 * k);
    }
    const LatticeSet a(w, std::move(bits));
    if (!erode_cube(a, k).empty()) {
      ++failures;
      continue;
    }
    const std::vector<std::int64_t> ns{100 * k, 100 * k + 37, 500, 1000};
    for (const auto& v : banach_profile(a, ns)) {
      ++values;
      if (v.sup_ratio > Rational(2 * k, 2 * k + 1) + Rational(2 * k + 1, v.n)) ++failures;
    }
  }
  return {failures == 0, std::to_string(failures) + " failures over " + std::to_string(values) + " profile values"};
}

Outcome dsl_conformance() {
  int failures = 0;
  const auto corpus = sumlab::test::valid_corpus();
  for (const auto& text : corpus) {
    const sl::SetExpr e = sl::parse(text);
    const std::string printed = sl::print(e);
    if (!(sl::parse(printed) == e) || sl::print(sl::parse(printed)) != printed) ++failures;
  }

  const Window w = Window::classical(1 << 16);
  const SetPair up = gen_upper_pair(w);
  const Window big = Window::classical(1594323);
  const SetPair bp = gen_big_pair(3, default_growth(3), big);
  failures += sl::evaluate("family(upper_pair).A", w) != up.a;
  failures += sl::evaluate("family(upper_pair).B", w) != up.b;
  failures += sl::evaluate("family(epsilon_set)", w) != gen_epsilon_set(w);
  failures += sl::evaluate("family(optimal_C)", w) != gen_optimal_C(w);
  failures += sl::evaluate("family(non_pws, n0=4)", w) != gen_non_pws(4, w);
  failures += sl::evaluate("family(big_pair, base=3).A", big) != bp.a;
  failures += sl::evaluate("family(big_pair, base=3).B", big) != bp.b;

  const auto malformed = sumlab::test::malformed_corpus();
  for (const auto& c : malformed) {
    try {
      sl::parse(c.text);
      ++failures;
    } catch (const sl::SyntaxError& e) {
      if (e.line() != c.line || e.column() != c.column) ++failures;
    }
  }
  return {failures == 0 && corpus.size() == 50,
          std::to_string(failures) + " failures; " + std::to_string(corpus.size()) + " round-trip expressions, " +
              std::to_string(malformed.size()) + " malformed inputs, 7 family references"};
}

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all = {
      {1, "upper pair A densities at 2^20", 5, upper_pair_densities},
      {2, "upper pair A+B witness estimates for m,k <= 8", 60, upper_pair_witnesses},
      {3, "epsilon set witness upper estimates at 2^22", 60, epsilon_gap_bound},
      {4, "optimal C at 10! and its empty witness set", 30, optimal_c},
      {5, "big pair identity, D density and witness drop", 0, big_pair_mechanism},
      {6, "Mann exhaustive and random oracle", 60, mann_oracle},
      {7, "covering bound exhaustive oracle", 30, covering_oracle},
      {8, "Besicovitch selection audit", 30, besicovitch_audit},
      {9, "morphological property suite", 0, morphology_suite},
      {10, "two-scale density-point experiment", 120, two_scale},
      {11, "thick bound on cube-free sets", 0, thick_bound},
      {12, "set language conformance", 0, dsl_conformance},
  };
  return all;
}

bool run_one(const Criterion& c) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = c.run();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool in_budget = c.budget_s <= 0 || secs < c.budget_s;
  const bool pass = o.pass && in_budget;
  char timing[64];
  if (c.budget_s > 0) {
    std::snprintf(timing, sizeof timing, "%.2f s, budget %.0f s", secs, c.budget_s);
  } else {
    std::snprintf(timing, sizeof timing, "%.2f s", secs);
  }
  std::printf("%s criterion %d: %s (%s) [%s]\n", pass ? "PASS" : "FAIL", c.id, c.title, o.detail.c_str(), timing);
  std::fflush(stdout);
  return pass;
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  if (argc == 3 && std::string(argv[1]) == "--criterion") {
    only = std::atoi(argv[2]);
    if (only < 1 || only > static_cast<int>(criteria().size())) {
      std::fprintf(stderr, "criterion must be 1..%zu\n", criteria().size());
      return 2;
    }
  } else if (argc != 1) {
    std::fprintf(stderr, "usage: acceptance [--criterion N]\n");
    return 2;
  }
  bool all_pass = true;
  for (const auto& c : criteria()) {
    if (only == 0 || c.id == only) all_pass = run_one(c) && all_pass;
  }
  return all_pass ? 0 : 1;
}
