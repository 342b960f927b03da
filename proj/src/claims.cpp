#include "sumlab/claims.hpp"

#include <cstdio>
#include <functional>

#include <boost/multiprecision/cpp_int.hpp>

#include "sumlab/density.hpp"
#include "sumlab/errors.hpp"
#include "sumlab/families.hpp"
#include "sumlab/morphology.hpp"
#include "sumlab/verify.hpp"

namespace sumlab {

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.5f", v);
  return buf;
}

bool near(const Rational& v, const Rational& target, const Rational& tol) { return within(v, target, tol); }

std::vector<ClaimResult> upper_42(unsigned threads) {
  std::vector<ClaimResult> out;
  const Window w = Window::classical(std::int64_t{1} << 20);
  const SetPair pair = gen_upper_pair(w);
  const auto a_est = tail_estimates(prefix_profile(pair.a));
  out.push_back({"A lower density near 1/2", near(a_est.lower, {1, 2}, {1, 50}), fmt(to_double(a_est.lower))});
  out.push_back({"A upper density near 2/3", near(a_est.upper, {2, 3}, {1, 50}), fmt(to_double(a_est.upper))});

  const LatticeSet s = sumset(pair.a, pair.b);
  const WitnessTable table = witness_table(s, 8, 8, {}, "upper_pair A+B", threads);
  bool lower_ok = true, upper_ok = true;
  Rational lo_min = table.entries.front().lower, lo_max = lo_min;
  Rational up_min = table.entries.front().upper, up_max = up_min;
  for (const auto& e : table.entries) {
    lower_ok = lower_ok && near(e.lower, {1, 2}, {3, 100});
    upper_ok = upper_ok && near(e.upper, {2, 3}, {3, 100});
    lo_min = std::min(lo_min, e.lower);
    lo_max = std::max(lo_max, e.lower);
    up_min = std::min(up_min, e.upper);
    up_max = std::max(up_max, e.upper);
  }
  out.push_back({"A+B witness lower estimates near 1/2 for m,k <= 8", lower_ok,
                 "range [" + fmt(to_double(lo_min)) + ", " + fmt(to_double(lo_max)) + "]"});
  out.push_back({"A+B witness upper estimates near 2/3 for m,k <= 8", upper_ok,
                 "range [" + fmt(to_double(up_min)) + ", " + fmt(to_double(up_max)) + "]"});

  const auto m = minimal_m_search(s, {2, 3}, 0, 8, EstimateMode::Upper);
  out.push_back({"upper level 2/3 reached with m = 0", m && *m == 0, m ? "m = " + std::to_string(*m) : "absent"});

  bool blocks_ok = true;
  std::string block_detail;
  for (std::int64_t i = 2; i <= 16; ++i) {
    const auto est = tail_estimates(prefix_profile(block_fill(pair.a, i)));
    blocks_ok = blocks_ok && near(est.upper, a_est.upper, {1, 50});
    if (i == 16) block_detail = "i=16 upper " + fmt(to_double(est.upper));
  }
  out.push_back({"block fills keep the upper density for i <= 16", blocks_ok, block_detail});

  const TwoScaleConfig cfg{w.radius(), 256, 1, {1, 50}};
  const auto rows = syndetic_point_fraction(pair.a, pair.b, cfg, 8);
  Rational best = rows.front().fraction;
  for (const auto& r : rows) best = std::max(best, r.fraction);
  out.push_back({"syndetic-point fraction >= 1/2 - 0.03 for some m <= 8", best >= Rational(47, 100),
                 "best " + fmt(to_double(best))});
  return out;
}

std::vector<ClaimResult> epsilon_28(unsigned) {
  std::vector<ClaimResult> out;
  const Window w = Window::classical(std::int64_t{1} << 22);
  const LatticeSet a = gen_epsilon_set(w);
  for (std::int64_t m = 0; m <= 6; ++m) {
    const auto est = tail_estimates(prefix_profile(witness_set(a, m, 64)));
    const Rational bound = Rational(1) - Rational(1, std::int64_t{1} << m) + Rational(1, 50);
    out.push_back({"witness upper estimate at m=" + std::to_string(m) + ", k=64 <= 1 - 2^-m + 0.02",
                   est.upper <= bound, fmt(to_double(est.upper)) + " vs " + fmt(to_double(bound))});
  }

  // Symmetric copy on a centered window for the density-point ladder.
  const std::int64_t n = std::int64_t{1} << 20;
  const Window cw = Window::centered(n, 1);
  const LatticeSet half = gen_epsilon_set(Window::classical(n));
  BitVector bits(static_cast<std::size_t>(cw.cell_count()));
  for (std::int64_t v : half.values()) {
    bits.set(static_cast<std::size_t>(v + n));
    bits.set(static_cast<std::size_t>(-v + n));
  }
  const TwoScaleConfig cfg{n, 1000, 10, {1, 50}};
  const auto r = two_scale_density_fraction(LatticeSet(cw, std::move(bits)), cfg);
  out.push_back({"density-point fraction near 1", r.fraction >= Rational(49, 50), fmt(to_double(r.fraction))});
  return out;
}

std::vector<ClaimResult> optimal_41(unsigned) {
  std::vector<ClaimResult> out;
  const Window w = Window::classical(3628800);
  const LatticeSet c = gen_optimal_C(w);
  const auto est = tail_estimates(prefix_profile(c));
  out.push_back({"C lower density near 1/2 at 10!", near(est.lower, {1, 2}, {1, 100}), fmt(to_double(est.lower))});

  // Block 14 is the first with s_i = 5; its start 14! is divisible by 10.
  const LatticeSet seg = gen_optimal_C_segment(14, 4000);
  const LatticeSet witness = erode_cube(dilate_block(seg, 3), 4);
  out.push_back({"no n with n+[-4,4] inside C+[0,2] on the s_i = 5 block", witness.empty(),
                 "interior count " + std::to_string(witness.cardinality())});
  return out;
}

std::vector<ClaimResult> big_44(unsigned) {
  namespace mp = boost::multiprecision;
  std::vector<ClaimResult> out;
  bool identity = true;
  for (std::int64_t base : {3, 4, 10}) {
    for (std::int64_t p = 1; p <= 12; ++p) {
      const mp::cpp_rational r = big_pair_r(base, p);
      const mp::cpp_rational bp = mp::pow(mp::cpp_int(base), static_cast<unsigned>(p));
      identity = identity && (r + (1 - r) / bp == mp::cpp_rational(1, 2));
    }
  }
  out.push_back({"r_p + (1 - r_p)/b^p = 1/2 for b in {3,4,10}, p <= 12", identity, identity ? "exact" : "mismatch"});

  for (std::int64_t base : {3, 4}) {
    std::int64_t n = 1;
    for (int i = 0; i < 10; ++i) n *= base;
    const LatticeSet d = big_pair_D(base, Window::classical(n));
    const Rational density(d.cardinality(), n);
    const Rational bound = Rational(1) - Rational(1, base - 1);
    out.push_back({"D density >= 1 - 1/(b-1) at b=" + std::to_string(base), density >= bound,
                   fmt(to_double(density)) + " vs " + fmt(to_double(bound))});
  }

  const GrowthMap growth = default_growth(4);
  const Window w = Window::classical(growth.at(3, 3));
  const SetPair pair = gen_big_pair(4, growth, w);
  const auto a_est = tail_estimates(prefix_profile(pair.a));
  out.push_back({"A lower density near 1/2", near(a_est.lower, {1, 2}, {1, 50}), fmt(to_double(a_est.lower))});
  const auto est = tail_estimates(prefix_profile(witness_set(sumset(pair.a, pair.b), 1, 16)));
  out.push_back({"witness lower estimate < 1/2 - 0.02 at m=1, k=16", est.lower < Rational(12, 25),
                 fmt(to_double(est.lower))});
  return out;
}

std::vector<ClaimResult> nonpws_12(unsigned) {
  std::vector<ClaimResult> out;
  const std::int64_t n0 = 5;
  const Window w = Window::centered(1000000, 1);
  const LatticeSet s = gen_non_pws(n0, w);
  Rational bound(1);
  std::int64_t fact = 24;
  for (std::int64_t j = n0;; ++j) {
    fact *= j;
    if (fact - fact / j > w.radius()) break;
    bound -= Rational(1, j);
  }
  const auto est = tail_estimates(prefix_profile(s));
  out.push_back({"lower density >= 1 - sum 1/j", est.lower >= bound,
                 fmt(to_double(est.lower)) + " vs " + fmt(to_double(bound))});

  bool vanish = true;
  std::string detail;
  for (std::int64_t m = 0; m <= 2; ++m) {
    const auto e = tail_estimates(prefix_profile(witness_set(s, m, 60)));
    vanish = vanish && e.upper <= Rational(1, 100);
    detail += "m=" + std::to_string(m) + ":" + fmt(to_double(e.upper)) + " ";
  }
  out.push_back({"witness sets at k = 60 have density near 0 for m <= 2", vanish, detail});

  const LatticeSet blocks = complement(s);
  bool thick = true;
  std::int64_t jf = 1;
  for (std::int64_t j = 1;; ++j) {
    const std::int64_t prev = jf;
    jf *= j;
    if (j < n0) continue;
    if (jf + prev > w.radius()) break;
    thick = thick && !erode_cube(blocks, (prev - 1) / 2).empty();
  }
  out.push_back({"the removed set contains cubes of radius ((j-1)! - 1)/2", thick, thick ? "all blocks" : "missing"});
  return out;
}

}  // namespace

const std::vector<std::string_view>& example_ids() {
  static const std::vector<std::string_view> ids = {"upper-42", "epsilon-28", "optimal-41", "big-44", "nonpws-12"};
  return ids;
}

std::vector<ClaimResult> verify_example(std::string_view id, unsigned threads) {
  if (id == "upper-42") return upper_42(threads);
  if (id == "epsilon-28") return epsilon_28(threads);
  if (id == "optimal-41") return optimal_41(threads);
  if (id == "big-44") return big_44(threads);
  if (id == "nonpws-12") return nonpws_12(threads);
  throw NotFound("unknown example '" + std::string(id) + "'");
}

}  // namespace sumlab
