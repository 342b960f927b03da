#pragma once

// A small language for one-dimensional integer sets.
//
//   set    := term (('|' | '&' | '\') term)*
//   term   := interval(int, int) | ap(int, int, int) | mod(int, {int, ...})
//           | sum(set, set) | dilate(set, int) | erode(set, int)
//           | union(ident=int..int, set) | family(ident, ident=int, ...)[.A|.B]
//           | !(set) | (set)
//   int    := integer expression with + - * ^ (right-associative), postfix !,
//             unary minus, parentheses and the bound variable.
//
// '#' starts a comment that runs to the end of the line.

#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "sumlab/errors.hpp"
#include "sumlab/lattice.hpp"

namespace sumlab::setlang {

using BigInt = boost::multiprecision::cpp_int;

struct IntExpr {
  enum class Kind { Literal, Var, Neg, Add, Sub, Mul, Pow, Factorial };
  Kind kind = Kind::Literal;
  BigInt value;              // Literal
  std::string name;          // Var
  std::vector<IntExpr> args;

  friend bool operator==(const IntExpr&, const IntExpr&) = default;
};

struct FamilyParam {
  std::string name;
  IntExpr value;

  friend bool operator==(const FamilyParam&, const FamilyParam&) = default;
};

struct SetExpr {
  enum class Kind {
    Interval,     // ints: lo, hi
    ArithProg,    // ints: start, step, count
    ModResidues,  // ints: modulus, residues...
    Union,        // sets: lhs, rhs
    Intersect,
    Difference,
    Complement,   // sets: operand
    Sum,          // sets: lhs, rhs
    Dilate,       // sets: operand; ints: radius
    Erode,
    IndexedUnion, // name: binder; ints: lo, hi; sets: body
    FamilyRef,    // name: family; params; member
  };
  Kind kind = Kind::Interval;
  std::vector<SetExpr> sets;
  std::vector<IntExpr> ints;
  std::string name;
  std::vector<FamilyParam> params;
  std::string member;

  friend bool operator==(const SetExpr&, const SetExpr&) = default;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t line, std::size_t column, std::set<std::string> expected, const std::string& found);
  /// 1-based line.
  [[nodiscard]] std::size_t line() const noexcept { return line_; }
  /// 0-based offset from the start of the line.
  [[nodiscard]] std::size_t column() const noexcept { return column_; }
  [[nodiscard]] const std::set<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::set<std::string> expected_;
};

class EvalError : public Error {
 public:
  using Error::Error;
};

class EvalOverflow : public EvalError {
 public:
  using EvalError::EvalError;
};

class UnknownFamily : public EvalError {
 public:
  using EvalError::EvalError;
};

SetExpr parse(std::string_view text);
IntExpr parse_int(std::string_view text);

/// Canonical text; parse(print(e)) == e.
std::string print(const SetExpr& e);
std::string print(const IntExpr& e);

/// Materializes `e` on a one-dimensional window.
LatticeSet evaluate(const SetExpr& e, const Window& window);

/// Convenience: parse then evaluate.
LatticeSet evaluate(std::string_view text, const Window& window);

}  // namespace sumlab::setlang
