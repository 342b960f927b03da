#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "sumlab/errors.hpp"
#include "sumlab/lattice.hpp"
#include "sumlab/serialize.hpp"

using namespace sumlab;
using sumlab::test::random_set;

TEST_CASE("bitvector shifts and runs") {
  BitVector v(130);
  v.set(0);
  v.set(63);
  v.set(64);
  v.set(129);
  CHECK(v.count() == 4);
  CHECK(v.count_range(1, 129) == 2);
  CHECK(v.find_next(1) == 63);
  CHECK(v.find_next_clear(63) == 65);

  const BitVector r = v.shifted(1);
  CHECK(r.test(1));
  CHECK(r.test(64));
  CHECK(r.test(65));
  CHECK(r.count() == 3);
  const BitVector l = v.shifted(-64);
  CHECK(l.test(0));
  CHECK(l.test(65));
  CHECK(l.count() == 2);

  const auto runs = v.runs();
  REQUIRE(runs.size() == 3);
  CHECK(runs[1] == std::pair<std::size_t, std::size_t>{63, 2});

  PrefixCounter pc(v);
  CHECK(pc.prefix(64) == 2);
  CHECK(pc.count(60, 130) == 3);
}

TEST_CASE("window parsing and indexing") {
  const Window c = Window::parse("1d:10");
  CHECK(c.is_classical());
  CHECK(c.cell_count() == 10);
  CHECK(c.spec() == "1d:10");
  const Window w = Window::parse("c3:2");
  CHECK(w.cell_count() == 49);
  CHECK(w.spec() == "c3:2");
  const Point p{-3, 2, 0};
  CHECK(w.point_of(w.index_of(p)) == p);
  CHECK(w.index_of({-3, -3, 0}) == 0);
  CHECK(w.stride(0) == 7);
  CHECK_THROWS_AS(Window::parse("2d:4"), InvalidWindow);
  CHECK_THROWS_AS(Window::parse("c3:4"), InvalidWindow);
  CHECK_THROWS_AS(Window::classical(0), InvalidWindow);
}

TEST_CASE("build_set examples") {
  const LatticeSet a = build_set(Window::classical(10), {2, 4, 6});
  CHECK(a.cardinality() == 3);

  const Window w = Window::centered(1, 2);
  const std::vector<Point> origin{{0, 0, 0}};
  const LatticeSet s = build_set(w, std::span<const Point>(origin));
  CHECK(w.cell_count() == 9);
  CHECK(s.cardinality() == 1);
  CHECK(s.contains(Point{0, 0, 0}));

  CHECK_THROWS_AS(build_set(Window::classical(5), {7}), OutOfWindow);
}

TEST_CASE("boolean_op examples") {
  const Window w = Window::classical(10);
  CHECK(set_union(build_set(w, {1, 2}), build_set(w, {2, 3})).values() == std::vector<std::int64_t>{1, 2, 3});
  CHECK(complement(LatticeSet::full(w)).empty());
  CHECK(difference(build_set(w, {1, 2, 3}), build_set(w, {2})).values() == std::vector<std::int64_t>{1, 3});
  CHECK_THROWS_AS(set_union(build_set(w, {1}), build_set(Window::classical(11), {1})), WindowMismatch);
}

TEST_CASE("translate examples") {
  const Window w = Window::classical(10);
  const LatticeSet moved = translate(build_set(w, {1, 2}), {3, 0, 0});
  CHECK(moved.values() == std::vector<std::int64_t>{4, 5});
  CHECK_FALSE(moved.clipped());

  const LatticeSet gone = translate(build_set(w, {9, 10}), {3, 0, 0});
  CHECK(gone.empty());
  CHECK(gone.clipped());

  const LatticeSet a = build_set(w, {1, 5, 10});
  CHECK(translate(a, {0, 0, 0}) == a);
}

TEST_CASE("De Morgan and recount on random sets") {
  std::mt19937_64 rng(7);
  for (const Window& w : {Window::classical(97), Window::centered(5, 2), Window::centered(3, 3)}) {
    for (int trial = 0; trial < 50; ++trial) {
      const LatticeSet a = random_set(w, rng);
      const LatticeSet b = random_set(w, rng, 0.3);
      CHECK(complement(set_union(a, b)) == intersect(complement(a), complement(b)));
      CHECK(complement(intersect(a, b)) == set_union(complement(a), complement(b)));
      for (const LatticeSet& r : {set_union(a, b), intersect(a, b), difference(a, b), complement(a)}) {
        CHECK(r.cardinality() == r.recount());
      }
    }
  }
}

TEST_CASE("translate inverse on the shrunk window") {
  std::mt19937_64 rng(11);
  const Window w = Window::centered(6, 2);
  for (int trial = 0; trial < 40; ++trial) {
    const LatticeSet a = random_set(w, rng);
    std::uniform_int_distribution<std::int64_t> d(-4, 4);
    const Point v{d(rng), d(rng), 0};
    const Point back{-v[0], -v[1], 0};
    const LatticeSet round = translate(translate(a, v), back);
    const std::int64_t shrink = std::max(std::abs(v[0]), std::abs(v[1]));
    const LatticeSet core = intersect(a, interior_mask(w, shrink));
    CHECK(sumlab::test::subset_of(core, round));
    CHECK(round.cardinality() == round.recount());
  }
}

TEST_CASE("serialization round-trip") {
  std::mt19937_64 rng(3);
  for (const Window& w : {Window::classical(200), Window::centered(4, 3), Window::centered(50, 1)}) {
    for (int trial = 0; trial < 20; ++trial) {
      const LatticeSet a = random_set(w, rng, trial % 2 ? 0.9 : 0.1);
      const std::string text = serialize(a);
      const LatticeSet back = deserialize(text);
      CHECK(back == a);
      CHECK(serialize(back) == text);
    }
  }
  CHECK(serialize(build_set(Window::classical(10), {2, 3, 4, 5})) == "window 1 classical1d 10\nrun 1 4\n");
  CHECK(serialize(LatticeSet(Window::classical(3))) == "window 1 classical1d 3\n");
}

TEST_CASE("serialization rejects non-canonical input") {
  CHECK_THROWS_AS(deserialize("window 1 classical1d 10\nrun 1 2\nrun 3 1\n"), FormatError);
  CHECK_THROWS_AS(deserialize("window 1 classical1d 10\nrun 4 1\nrun 1 1\n"), FormatError);
  CHECK_THROWS_AS(deserialize("window 1 classical1d 10\nrun 9 2\n"), FormatError);
  CHECK_THROWS_AS(deserialize("window 1 classical1d 10\nrun 0 0\n"), FormatError);
  CHECK_THROWS_AS(deserialize("window 2 classical1d 10\n"), FormatError);
  CHECK_THROWS_AS(deserialize("window 1 classical1d 10\nrun 01 2\n"), FormatError);
  CHECK_THROWS_AS(deserialize("window 1 classical1d 10"), FormatError);
}
