#include <doctest.h>

#include "corpus.hpp"
#include "sumlab/errors.hpp"
#include "sumlab/families.hpp"
#include "sumlab/morphology.hpp"
#include "sumlab/setlang.hpp"

using namespace sumlab;
namespace sl = sumlab::setlang;

namespace {

std::vector<std::int64_t> range(std::int64_t lo, std::int64_t hi) {
  std::vector<std::int64_t> v;
  for (auto x = lo; x <= hi; ++x) v.push_back(x);
  return v;
}

}  // namespace

TEST_CASE("parse builds the expected trees") {
  const sl::SetExpr e = sl::parse("interval(2,5)");
  CHECK(e.kind == sl::SetExpr::Kind::Interval);
  REQUIRE(e.ints.size() == 2);
  CHECK(e.ints[0].value == 2);
  CHECK(e.ints[1].value == 5);

  const sl::SetExpr u = sl::parse("union(n=1..3, interval(2^n, 2^n + 2^(n-1)))");
  CHECK(u.kind == sl::SetExpr::Kind::IndexedUnion);
  CHECK(u.name == "n");
  REQUIRE(u.sets.size() == 1);
  CHECK(u.sets[0].kind == sl::SetExpr::Kind::Interval);
  CHECK(u.sets[0].ints[0].kind == sl::IntExpr::Kind::Pow);

  const sl::SetExpr f = sl::parse("family(big_pair, base=3).B");
  CHECK(f.kind == sl::SetExpr::Kind::FamilyRef);
  CHECK(f.member == "B");
  REQUIRE(f.params.size() == 1);
  CHECK(f.params[0].name == "base");

  CHECK(sl::parse_int("2^3^2").kind == sl::IntExpr::Kind::Pow);
  CHECK(sl::print(sl::parse_int("2^3^2")) == "2^3^2");
  CHECK(sl::print(sl::parse_int("(2^3)^2")) == "(2^3)^2");
}

TEST_CASE("interval(2, reports column 11") {
  try {
    sl::parse("interval(2,");
    FAIL("expected a syntax error");
  } catch (const sl::SyntaxError& e) {
    CHECK(e.line() == 1);
    CHECK(e.column() == 11);
    CHECK(e.expected().count("integer") == 1);
  }
}

TEST_CASE("evaluate examples") {
  const Window w10 = Window::classical(10);
  CHECK(sl::evaluate("interval(2,5)", w10).values() == range(2, 5));

  std::vector<std::int64_t> expect = range(2, 6);
  for (auto x : range(8, 12)) expect.push_back(x);
  CHECK(sl::evaluate("union(n=1..3, interval(2^n, 2^n + 2^(n-1)))", Window::classical(20)).values() == expect);

  CHECK(sl::evaluate("erode(dilate(mod(2,{0}),1),1)", Window::classical(100)).values() == range(2, 99));
  CHECK(sl::evaluate("ap(3, 4, 3)", Window::classical(20)).values() == std::vector<std::int64_t>{3, 7, 11});
  CHECK(sl::evaluate("!(interval(1, 8))", w10).values() == std::vector<std::int64_t>{9, 10});
  CHECK(sl::evaluate("interval(-3, 3) & mod(3, {0})", Window::centered(5, 1)).values() ==
        std::vector<std::int64_t>{-3, 0, 3});
  // Coordinates past the window are clamped, not rejected.
  CHECK(sl::evaluate("interval(5, 10^30)", w10).values() == range(5, 10));
}

TEST_CASE("evaluation errors") {
  const Window w = Window::classical(100);
  CHECK_THROWS_AS(sl::evaluate("interval(1, 2^100000)", w), sl::EvalOverflow);
  CHECK_THROWS_AS(sl::evaluate("interval(1, 3000!)", w), sl::EvalOverflow);
  CHECK_THROWS_AS(sl::evaluate("family(nope)", w), sl::UnknownFamily);
  CHECK_THROWS_AS(sl::evaluate("union(n=3..1, interval(n, n))", w), sl::EvalError);
  CHECK_THROWS_AS(sl::evaluate("interval(1, m)", w), sl::EvalError);
  CHECK_THROWS_AS(sl::evaluate("mod(0, {0})", w), sl::EvalError);
  CHECK_THROWS_AS(sl::evaluate("interval(1, 2)", Window::centered(3, 2)), WrongConvention);
}

TEST_CASE("round trip over the corpus") {
  const auto corpus = sumlab::test::valid_corpus();
  CHECK(corpus.size() == 50);
  for (const auto& text : corpus) {
    CAPTURE(text);
    const sl::SetExpr e = sl::parse(text);
    const std::string printed = sl::print(e);
    CHECK(sl::parse(printed) == e);
    CHECK(sl::print(sl::parse(printed)) == printed);
  }
}

TEST_CASE("evaluation is deterministic") {
  const Window w = Window::classical(1 << 14);
  for (const auto& text : sumlab::test::valid_corpus()) {
    if (text.find("big_pair") != std::string::npos) continue;
    CAPTURE(text);
    CHECK(sl::evaluate(text, w) == sl::evaluate(text, w));
  }
}

TEST_CASE("error positions over the malformed corpus") {
  const auto cases = sumlab::test::malformed_corpus();
  CHECK(cases.size() >= 25);
  for (const auto& c : cases) {
    CAPTURE(c.text);
    try {
      sl::parse(c.text);
      FAIL("parsed malformed input");
    } catch (const sl::SyntaxError& e) {
      CHECK(e.line() == c.line);
      CHECK(e.column() == c.column);
    }
  }
}

TEST_CASE("family references are bit-identical to the generators") {
  const Window w = Window::classical(1 << 16);
  CHECK(sl::evaluate("family(upper_pair).A", w) == gen_upper_pair(w).a);
  CHECK(sl::evaluate("family(upper_pair).B", w) == gen_upper_pair(w).b);
  CHECK(sl::evaluate("family(epsilon_set)", w) == gen_epsilon_set(w));
  CHECK(sl::evaluate("family(optimal_C)", w) == gen_optimal_C(w));
  CHECK(sl::evaluate("family(non_pws, n0=4)", w) == gen_non_pws(4, w));
  const Window big = Window::classical(1594323);
  const SetPair p = gen_big_pair(3, default_growth(3), big);
  CHECK(sl::evaluate("family(big_pair, base=3).A", big) == p.a);
  CHECK(sl::evaluate("family(big_pair, base=1 + 2).B", big) == p.b);
  CHECK(sl::evaluate("sum(family(upper_pair).A, family(upper_pair).B)", w) ==
        sumset(gen_upper_pair(w).a, gen_upper_pair(w).b));
}
