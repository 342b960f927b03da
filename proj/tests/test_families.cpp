#include <doctest.h>

#include "helpers.hpp"
#include "sumlab/density.hpp"
#include "sumlab/errors.hpp"
#include "sumlab/families.hpp"
#include "sumlab/morphology.hpp"

using namespace sumlab;

namespace {

std::vector<std::int64_t> range(std::int64_t lo, std::int64_t hi) {
  std::vector<std::int64_t> v;
  for (auto x = lo; x <= hi; ++x) v.push_back(x);
  return v;
}

std::int64_t factorial(std::int64_t n) {
  std::int64_t f = 1;
  for (std::int64_t i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

TEST_CASE("upper pair at N = 20") {
  const SetPair p = gen_upper_pair(Window::classical(20));
  std::vector<std::int64_t> a = range(2, 6);
  for (auto x : range(8, 12)) a.push_back(x);
  for (auto x : range(16, 20)) a.push_back(x);
  CHECK(p.a.values() == a);
  CHECK(p.b.values() == std::vector<std::int64_t>{1, 2, 3, 4, 6, 7, 8, 9});
}

TEST_CASE("upper pair densities at 2^20") {
  const SetPair p = gen_upper_pair(Window::classical(1 << 20));
  const auto t = tail_estimates(prefix_profile(p.a));
  CHECK(within(t.lower, {1, 2}, {1, 50}));
  CHECK(within(t.upper, {2, 3}, {1, 50}));
}

TEST_CASE("upper pair block fills keep the upper density") {
  const SetPair p = gen_upper_pair(Window::classical(1 << 16));
  const Rational base = tail_estimates(prefix_profile(p.a)).upper;
  for (std::int64_t i = 1; i <= 16; ++i) {
    CHECK(within(tail_estimates(prefix_profile(block_fill(p.a, i))).upper, base, {1, 50}));
  }
}

TEST_CASE("epsilon set matches the displayed union") {
  const std::int64_t n = 256;
  const LatticeSet e = gen_epsilon_set(Window::classical(n));
  // Doubled coordinates keep the half-integer right end of i = j exact.
  std::vector<std::int64_t> expect;
  for (std::int64_t x = 1; x <= n; ++x) {
    bool in = false;
    for (std::int64_t j = 1; j <= 9 && !in; ++j) {
      for (std::int64_t i = 1; i <= j && !in; ++i) {
        const std::int64_t lo2 = 2 * ((std::int64_t{1} << j) - (std::int64_t{1} << (j - i)));
        const std::int64_t hi2 = (std::int64_t{2} << j) - (std::int64_t{1} << (j - i));
        in = x % i == 0 && 2 * x >= lo2 && 2 * x <= hi2;
      }
    }
    if (in) expect.push_back(x);
  }
  CHECK(e.values() == expect);
  // j = 2: i = 1 gives [2,3], i = 2 gives the even numbers in [3, 3.5].
  CHECK(e.contains(2));
  CHECK(e.contains(3));
}

TEST_CASE("optimal block lengths") {
  const std::vector<std::int64_t> expect{1, 2, 1, 2, 3, 1, 2, 3, 4, 1};
  for (std::size_t i = 0; i < expect.size(); ++i) CHECK(optimal_block_length(static_cast<std::int64_t>(i) + 1) == expect[i]);
  CHECK(optimal_block_length(14) == 5);
  CHECK_THROWS_AS(optimal_block_length(0), InvalidArgument);
}

TEST_CASE("optimal C follows the block rule") {
  const Window w = Window::classical(5040);
  const LatticeSet c = gen_optimal_C(w);
  for (std::int64_t x = 1; x <= 5040; ++x) {
    std::int64_t i = 1;
    while (factorial(i + 1) <= x) ++i;
    const std::int64_t s = optimal_block_length(i);
    CHECK(c.contains(x) == (x % (2 * s) < s));
  }
  // [2!, 3!) with s_2 = 2 keeps 4 and 5.
  CHECK(intersect(c, build_set(w, std::span<const std::int64_t>(range(2, 5)))).values() ==
        std::vector<std::int64_t>{4, 5});
  CHECK_THROWS_AS(gen_optimal_C(Window::classical(factorial(11) + 1)), InvalidArgument);
}

TEST_CASE("optimal C per-block density") {
  const LatticeSet c = gen_optimal_C(Window::classical(factorial(9)));
  for (std::int64_t i = 3; i <= 8; ++i) {
    const std::int64_t lo = factorial(i), hi = factorial(i + 1) - 1;
    std::int64_t count = 0;
    for (auto x = lo; x <= hi; ++x) count += c.contains(x);
    const Rational ratio(count, hi - lo + 1);
    CHECK(ratio >= Rational(1, 2) - Rational(optimal_block_length(i), hi - lo + 1));
    CHECK(ratio <= Rational(1, 2) + Rational(optimal_block_length(i), hi - lo + 1));
  }
}

TEST_CASE("optimal C segments agree with the dense generator") {
  const LatticeSet c = gen_optimal_C(Window::classical(factorial(7)));
  const LatticeSet seg = gen_optimal_C_segment(6, 300);
  for (std::int64_t x = 1; x <= 300; ++x) CHECK(seg.contains(x) == c.contains(factorial(6) + x - 1));
  const LatticeSet far = gen_optimal_C_segment(14, 40);
  // 14! is divisible by 10, so the segment starts a run of 5 members.
  CHECK(far.values() == std::vector<std::int64_t>{1, 2, 3, 4, 5, 11, 12, 13, 14, 15, 21, 22, 23, 24, 25, 31, 32, 33, 34, 35});
}

TEST_CASE("big pair r_p identity") {
  namespace mp = boost::multiprecision;
  for (std::int64_t base : {3, 4, 10}) {
    for (std::int64_t p = 1; p <= 12; ++p) {
      const mp::cpp_rational r = big_pair_r(base, p);
      const mp::cpp_rational bp = mp::pow(mp::cpp_int(base), static_cast<unsigned>(p));
      CHECK(r + (1 - r) / bp == mp::cpp_rational(1, 2));
    }
  }
  CHECK(big_pair_r(10, 1) == boost::multiprecision::cpp_rational(8, 18));
}

TEST_CASE("big pair D matches its definition") {
  const LatticeSet d = big_pair_D(3, Window::classical(729));
  for (std::int64_t x = 1; x <= 729; ++x) {
    bool out = false;
    for (std::int64_t p = 1, bp = 3; bp * bp <= 729 * 9; ++p, bp *= 3) {
      if (x % (bp * bp) >= bp * bp - bp) out = true;
    }
    CHECK(d.contains(x) == !out);
  }
  const std::int64_t n = 59049;
  const LatticeSet d3 = big_pair_D(3, Window::classical(n));
  CHECK(Rational(d3.cardinality(), n) >= Rational(1, 2));
}

TEST_CASE("big pair construction") {
  const GrowthMap g = default_growth(3);
  CHECK(g.at(2, 0) == 81);
  CHECK(g.at(3, 3) == 1594323);
  CHECK(g.last_n() == 3);
  CHECK_THROWS_AS(gen_big_pair(3, g, Window::classical(1000)), GrowthTooLarge);
  CHECK_THROWS_AS(gen_big_pair(2, default_growth(2), Window::classical(1 << 13)), InvalidArgument);

  const Window w = Window::classical(g.at(3, 3));
  const SetPair p = gen_big_pair(3, g, w);
  const SetPair again = gen_big_pair(3, g, w);
  CHECK(p.a == again.a);
  CHECK(p.b == again.b);
  const auto t = tail_estimates(prefix_profile(p.a));
  CHECK(within(t.lower, {1, 2}, {1, 20}));
  // The C' interval of row 2, p = 1 starts at g(2,1).
  CHECK(p.a.contains(g.at(2, 1)));
  CHECK(p.a.contains(g.at(2, 1) + 1));
  // B starts each row at g(n,0) with the D pattern.
  CHECK(p.b.contains(g.at(2, 0) + 1));
}

TEST_CASE("non-piecewise-syndetic set matches its definition") {
  const Window w = Window::centered(800, 1);
  const LatticeSet s = gen_non_pws(3, w);
  for (std::int64_t y = -800; y <= 800; ++y) {
    bool removed = false;
    for (std::int64_t j = 3; j <= 6; ++j) {
      const std::int64_t f = factorial(j), g = factorial(j - 1);
      const std::int64_t x = floor_div(y - 1, f);
      if (x != 0 && y - f * x >= 1 && y - f * x <= g) removed = true;
    }
    CHECK(s.contains(y) == !removed);
  }
  const LatticeSet c = gen_non_pws(3, Window::classical(800));
  for (std::int64_t y = 1; y <= 800; ++y) CHECK(c.contains(y) == s.contains(y));
  CHECK_THROWS_AS(gen_non_pws(2, w), InvalidArgument);
}

TEST_CASE("non-piecewise-syndetic set loses its witnesses") {
  const LatticeSet s = gen_non_pws(4, Window::centered(100000, 1));
  const auto base = tail_estimates(prefix_profile(s));
  CHECK(base.lower >= Rational(1) - Rational(1, 4) - Rational(1, 5) - Rational(1, 6) - Rational(1, 7) - Rational(1, 8));
  const auto gone = tail_estimates(prefix_profile(witness_set(s, 1, 20)));
  CHECK(gone.upper <= Rational(1, 100));
  CHECK_FALSE(erode_cube(complement(s), 2).empty());
}

TEST_CASE("family catalog and dispatch") {
  const Window w = Window::classical(1024);
  CHECK(family_catalog().size() == 5);
  CHECK(generate_family("upper_pair", {}, w).a == gen_upper_pair(w).a);
  CHECK(family_member("upper_pair", {}, "B", w) == gen_upper_pair(w).b);
  CHECK(family_member("epsilon_set", {}, "", w) == gen_epsilon_set(w));
  CHECK(family_member("non_pws", {{"n0", 4}}, "", w) == gen_non_pws(4, w));
  CHECK_THROWS_AS(generate_family("nope", {}, w), NotFound);
  CHECK_THROWS_AS(generate_family("upper_pair", {{"k", 1}}, w), InvalidArgument);
  CHECK_THROWS_AS(family_member("upper_pair", {}, "", w), InvalidArgument);
  CHECK_THROWS_AS(family_member("epsilon_set", {}, "A", w), InvalidArgument);
  CHECK_THROWS_AS(gen_upper_pair(Window::centered(10, 1)), WrongConvention);
}
