#include "sumlab/setlang.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <utility>

#include "sumlab/families.hpp"
#include "sumlab/morphology.hpp"

namespace sumlab::setlang {

namespace {

std::string join_expected(const std::set<std::string>& expected) {
  std::string out;
  for (const auto& e : expected) {
    if (!out.empty()) out += ", ";
    out += e;
  }
  return out;
}

}  // namespace

SyntaxError::SyntaxError(std::size_t line, std::size_t column, std::set<std::string> expected, const std::string& found)
    : Error("syntax error at line " + std::to_string(line) + ", column " + std::to_string(column) + ": expected " +
            join_expected(expected) + ", found " + found),
      line_(line),
      column_(column),
      expected_(std::move(expected)) {}

// ---------------------------------------------------------------------------
// Lexer

namespace {

struct Token {
  enum class Kind { Ident, Integer, Punct, End };
  Kind kind = Kind::End;
  std::string text;
  std::size_t line = 1;
  std::size_t column = 0;
};

std::string describe(const Token& t) {
  switch (t.kind) {
    case Token::Kind::End: return "end of input";
    case Token::Kind::Integer: return "integer '" + t.text + "'";
    case Token::Kind::Ident: return "identifier '" + t.text + "'";
    case Token::Kind::Punct: return "'" + t.text + "'";
  }
  return "?";
}

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  std::size_t line = 1, line_start = 0, i = 0;
  while (true) {
    while (i < src.size()) {
      const char c = src[i];
      if (c == '\n') {
        ++line;
        line_start = ++i;
      } else if (c == '#') {
        while (i < src.size() && src[i] != '\n') ++i;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++i;
      } else {
        break;
      }
    }
    Token t;
    t.line = line;
    t.column = i - line_start;
    if (i >= src.size()) {
      out.push_back(t);
      return out;
    }
    const char c = src[i];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t b = i;
      while (i < src.size() && (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_')) ++i;
      t.kind = Token::Kind::Ident;
      t.text = std::string(src.substr(b, i - b));
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t b = i;
      while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) ++i;
      t.kind = Token::Kind::Integer;
      t.text = std::string(src.substr(b, i - b));
    } else if (c == '.' && i + 1 < src.size() && src[i + 1] == '.') {
      t.kind = Token::Kind::Punct;
      t.text = "..";
      i += 2;
    } else if (std::string_view("(),{}=.|&\\!+-*^").find(c) != std::string_view::npos) {
      t.kind = Token::Kind::Punct;
      t.text = std::string(1, c);
      ++i;
    } else {
      throw SyntaxError(t.line, t.column, {"a token"}, "character '" + std::string(1, c) + "'");
    }
    out.push_back(std::move(t));
  }
}

// ---------------------------------------------------------------------------
// Parser

const std::set<std::string> kTermStart = {"interval", "ap", "mod", "sum", "dilate", "erode",
                                          "union", "family", "!", "("};
const std::set<std::string> kIntStart = {"integer", "identifier", "(", "-"};
const std::set<std::string> kSetOps = {"|", "&", "\\"};
const std::set<std::string> kIntOps = {"+", "-", "*", "^", "!"};

class Parser {
 public:
  explicit Parser(std::string_view src) : toks_(tokenize(src)) {}

  SetExpr parse_top_set() {
    SetExpr e = parse_set();
    expect_end(kSetOps);
    return e;
  }

  IntExpr parse_top_int() {
    IntExpr e = parse_int();
    expect_end(kIntOps);
    return e;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  bool is_punct(std::string_view p) const { return peek().kind == Token::Kind::Punct && peek().text == p; }

  [[noreturn]] void fail(std::set<std::string> expected) const {
    throw SyntaxError(peek().line, peek().column, std::move(expected), describe(peek()));
  }

  void expect_end(const std::set<std::string>& continuation) {
    if (peek().kind == Token::Kind::End) return;
    auto expected = continuation;
    expected.insert("end of input");
    fail(expected);
  }

  // Consumes punctuation `p`; `also` lists tokens that could have continued
  // the preceding construct.
  void expect(std::string_view p, const std::set<std::string>& also = {}) {
    if (is_punct(p)) {
      ++pos_;
      return;
    }
    auto expected = also;
    expected.insert(std::string(p));
    fail(expected);
  }

  std::string expect_ident() {
    if (peek().kind != Token::Kind::Ident) fail({"identifier"});
    return toks_[pos_++].text;
  }

  SetExpr parse_set() {
    SetExpr lhs = parse_term();
    while (true) {
      SetExpr::Kind kind;
      if (is_punct("|")) kind = SetExpr::Kind::Union;
      else if (is_punct("&")) kind = SetExpr::Kind::Intersect;
      else if (is_punct("\\")) kind = SetExpr::Kind::Difference;
      else return lhs;
      ++pos_;
      SetExpr node;
      node.kind = kind;
      node.sets.push_back(std::move(lhs));
      node.sets.push_back(parse_term());
      lhs = std::move(node);
    }
  }

  SetExpr parse_term() {
    const Token& t = peek();
    if (t.kind == Token::Kind::Punct && t.text == "!") {
      ++pos_;
      expect("(");
      SetExpr node;
      node.kind = SetExpr::Kind::Complement;
      node.sets.push_back(parse_set());
      expect(")", kSetOps);
      return node;
    }
    if (t.kind == Token::Kind::Punct && t.text == "(") {
      ++pos_;
      SetExpr inner = parse_set();
      expect(")", kSetOps);
      return inner;
    }
    if (t.kind != Token::Kind::Ident || !kTermStart.count(t.text)) fail(kTermStart);
    const std::string word = t.text;
    ++pos_;
    expect("(");
    SetExpr node;
    if (word == "interval") {
      node.kind = SetExpr::Kind::Interval;
      node.ints.push_back(parse_int());
      expect(",", kIntOps);
      node.ints.push_back(parse_int());
      expect(")", kIntOps);
    } else if (word == "ap") {
      node.kind = SetExpr::Kind::ArithProg;
      node.ints.push_back(parse_int());
      expect(",", kIntOps);
      node.ints.push_back(parse_int());
      expect(",", kIntOps);
      node.ints.push_back(parse_int());
      expect(")", kIntOps);
    } else if (word == "mod") {
      node.kind = SetExpr::Kind::ModResidues;
      node.ints.push_back(parse_int());
      expect(",", kIntOps);
      expect("{");
      node.ints.push_back(parse_int());
      while (is_punct(",")) {
        ++pos_;
        node.ints.push_back(parse_int());
      }
      expect("}", [] {
        auto s = kIntOps;
        s.insert(",");
        return s;
      }());
      expect(")");
    } else if (word == "sum") {
      node.kind = SetExpr::Kind::Sum;
      node.sets.push_back(parse_set());
      expect(",", kSetOps);
      node.sets.push_back(parse_set());
      expect(")", kSetOps);
    } else if (word == "dilate" || word == "erode") {
      node.kind = word == "dilate" ? SetExpr::Kind::Dilate : SetExpr::Kind::Erode;
      node.sets.push_back(parse_set());
      expect(",", kSetOps);
      node.ints.push_back(parse_int());
      expect(")", kIntOps);
    } else if (word == "union") {
      node.kind = SetExpr::Kind::IndexedUnion;
      node.name = expect_ident();
      expect("=");
      node.ints.push_back(parse_int());
      expect("..", kIntOps);
      node.ints.push_back(parse_int());
      expect(",", kIntOps);
      node.sets.push_back(parse_set());
      expect(")", kSetOps);
    } else {
      node.kind = SetExpr::Kind::FamilyRef;
      node.name = expect_ident();
      while (is_punct(",")) {
        ++pos_;
        FamilyParam p;
        p.name = expect_ident();
        expect("=");
        p.value = parse_int();
        node.params.push_back(std::move(p));
      }
      expect(")", node.params.empty() ? std::set<std::string>{","} : [] {
        auto s = kIntOps;
        s.insert(",");
        return s;
      }());
      if (is_punct(".")) {
        ++pos_;
        const Token& m = peek();
        if (m.kind != Token::Kind::Ident || (m.text != "A" && m.text != "B")) fail({"A", "B"});
        node.member = m.text;
        ++pos_;
      }
    }
    return node;
  }

  // add := mul (('+' | '-') mul)*
  IntExpr parse_int() {
    IntExpr lhs = parse_mul();
    while (is_punct("+") || is_punct("-")) {
      IntExpr node;
      node.kind = is_punct("+") ? IntExpr::Kind::Add : IntExpr::Kind::Sub;
      ++pos_;
      node.args.push_back(std::move(lhs));
      node.args.push_back(parse_mul());
      lhs = std::move(node);
    }
    return lhs;
  }

  IntExpr parse_mul() {
    IntExpr lhs = parse_unary();
    while (is_punct("*")) {
      ++pos_;
      IntExpr node;
      node.kind = IntExpr::Kind::Mul;
      node.args.push_back(std::move(lhs));
      node.args.push_back(parse_unary());
      lhs = std::move(node);
    }
    return lhs;
  }

  IntExpr parse_unary() {
    if (is_punct("-")) {
      ++pos_;
      IntExpr node;
      node.kind = IntExpr::Kind::Neg;
      node.args.push_back(parse_unary());
      return node;
    }
    return parse_power();
  }

  IntExpr parse_power() {
    IntExpr base = parse_postfix();
    if (!is_punct("^")) return base;
    ++pos_;
    IntExpr node;
    node.kind = IntExpr::Kind::Pow;
    node.args.push_back(std::move(base));
    node.args.push_back(parse_unary());
    return node;
  }

  IntExpr parse_postfix() {
    IntExpr e = parse_primary();
    while (is_punct("!")) {
      ++pos_;
      IntExpr node;
      node.kind = IntExpr::Kind::Factorial;
      node.args.push_back(std::move(e));
      e = std::move(node);
    }
    return e;
  }

  IntExpr parse_primary() {
    const Token& t = peek();
    IntExpr e;
    if (t.kind == Token::Kind::Integer) {
      e.kind = IntExpr::Kind::Literal;
      e.value = BigInt(t.text);
      ++pos_;
      return e;
    }
    if (t.kind == Token::Kind::Ident) {
      e.kind = IntExpr::Kind::Var;
      e.name = t.text;
      ++pos_;
      return e;
    }
    if (t.kind == Token::Kind::Punct && t.text == "(") {
      ++pos_;
      e = parse_int();
      expect(")", kIntOps);
      return e;
    }
    fail(kIntStart);
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

// ---------------------------------------------------------------------------
// Printer

int precedence(const IntExpr& e) {
  switch (e.kind) {
    case IntExpr::Kind::Add:
    case IntExpr::Kind::Sub: return 1;
    case IntExpr::Kind::Mul: return 2;
    case IntExpr::Kind::Neg: return 3;
    case IntExpr::Kind::Pow: return 4;
    case IntExpr::Kind::Factorial: return 5;
    default: return 6;
  }
}

void print_int(const IntExpr& e, std::string& out);

void print_wrapped(const IntExpr& e, bool wrap, std::string& out) {
  if (wrap) out += '(';
  print_int(e, out);
  if (wrap) out += ')';
}

void print_int(const IntExpr& e, std::string& out) {
  const int p = precedence(e);
  switch (e.kind) {
    case IntExpr::Kind::Literal: out += e.value.str(); return;
    case IntExpr::Kind::Var: out += e.name; return;
    case IntExpr::Kind::Neg:
      out += '-';
      print_wrapped(e.args[0], precedence(e.args[0]) < 3, out);
      return;
    case IntExpr::Kind::Add:
    case IntExpr::Kind::Sub:
    case IntExpr::Kind::Mul: {
      const char* op = e.kind == IntExpr::Kind::Add ? " + " : e.kind == IntExpr::Kind::Sub ? " - " : "*";
      print_wrapped(e.args[0], precedence(e.args[0]) < p, out);
      out += op;
      print_wrapped(e.args[1], precedence(e.args[1]) <= p, out);
      return;
    }
    case IntExpr::Kind::Pow:
      print_wrapped(e.args[0], precedence(e.args[0]) < 5, out);
      out += '^';
      print_wrapped(e.args[1], precedence(e.args[1]) < 3, out);
      return;
    case IntExpr::Kind::Factorial:
      print_wrapped(e.args[0], precedence(e.args[0]) < 5, out);
      out += '!';
      return;
  }
}

bool is_set_binary(const SetExpr& e) {
  return e.kind == SetExpr::Kind::Union || e.kind == SetExpr::Kind::Intersect || e.kind == SetExpr::Kind::Difference;
}

void print_set(const SetExpr& e, std::string& out) {
  auto ints = [&](std::size_t from, std::size_t to) {
    for (std::size_t i = from; i < to; ++i) {
      if (i > from) out += ", ";
      print_int(e.ints[i], out);
    }
  };
  switch (e.kind) {
    case SetExpr::Kind::Interval:
      out += "interval(";
      ints(0, 2);
      out += ')';
      return;
    case SetExpr::Kind::ArithProg:
      out += "ap(";
      ints(0, 3);
      out += ')';
      return;
    case SetExpr::Kind::ModResidues:
      out += "mod(";
      ints(0, 1);
      out += ", {";
      ints(1, e.ints.size());
      out += "})";
      return;
    case SetExpr::Kind::Union:
    case SetExpr::Kind::Intersect:
    case SetExpr::Kind::Difference: {
      const char* op = e.kind == SetExpr::Kind::Union ? " | " : e.kind == SetExpr::Kind::Intersect ? " & " : " \\ ";
      print_set(e.sets[0], out);
      out += op;
      const bool wrap = is_set_binary(e.sets[1]);
      if (wrap) out += '(';
      print_set(e.sets[1], out);
      if (wrap) out += ')';
      return;
    }
    case SetExpr::Kind::Complement:
      out += "!(";
      print_set(e.sets[0], out);
      out += ')';
      return;
    case SetExpr::Kind::Sum:
      out += "sum(";
      print_set(e.sets[0], out);
      out += ", ";
      print_set(e.sets[1], out);
      out += ')';
      return;
    case SetExpr::Kind::Dilate:
    case SetExpr::Kind::Erode:
      out += e.kind == SetExpr::Kind::Dilate ? "dilate(" : "erode(";
      print_set(e.sets[0], out);
      out += ", ";
      print_int(e.ints[0], out);
      out += ')';
      return;
    case SetExpr::Kind::IndexedUnion:
      out += "union(" + e.name + "=";
      print_int(e.ints[0], out);
      out += "..";
      print_int(e.ints[1], out);
      out += ", ";
      print_set(e.sets[0], out);
      out += ')';
      return;
    case SetExpr::Kind::FamilyRef:
      out += "family(" + e.name;
      for (const auto& p : e.params) {
        out += ", " + p.name + "=";
        print_int(p.value, out);
      }
      out += ')';
      if (!e.member.empty()) out += "." + e.member;
      return;
  }
}

// ---------------------------------------------------------------------------
// Evaluator

constexpr unsigned kMaxBits = 1U << 16;
constexpr std::int64_t kMaxFactorial = 2000;
constexpr std::int64_t kMaxUnionTerms = 1000000;

using Env = std::vector<std::pair<std::string, BigInt>>;

unsigned bit_length(const BigInt& v) { return v == 0 ? 0U : static_cast<unsigned>(boost::multiprecision::msb(abs(v))) + 1; }

BigInt check_size(BigInt v, const IntExpr& e) {
  if (bit_length(v) > kMaxBits) throw EvalOverflow("integer expression '" + print(e) + "' exceeds 65536 bits");
  return v;
}

BigInt eval_int(const IntExpr& e, const Env& env) {
  switch (e.kind) {
    case IntExpr::Kind::Literal: return e.value;
    case IntExpr::Kind::Var: {
      for (auto it = env.rbegin(); it != env.rend(); ++it) {
        if (it->first == e.name) return it->second;
      }
      throw EvalError("unbound variable '" + e.name + "'");
    }
    case IntExpr::Kind::Neg: return -eval_int(e.args[0], env);
    case IntExpr::Kind::Add: return check_size(eval_int(e.args[0], env) + eval_int(e.args[1], env), e);
    case IntExpr::Kind::Sub: return check_size(eval_int(e.args[0], env) - eval_int(e.args[1], env), e);
    case IntExpr::Kind::Mul: {
      const BigInt a = eval_int(e.args[0], env);
      const BigInt b = eval_int(e.args[1], env);
      if (bit_length(a) + bit_length(b) > kMaxBits + 1) throw EvalOverflow("product '" + print(e) + "' is too large");
      return a * b;
    }
    case IntExpr::Kind::Pow: {
      const BigInt base = eval_int(e.args[0], env);
      const BigInt exp = eval_int(e.args[1], env);
      if (exp < 0) throw EvalError("negative exponent in '" + print(e) + "'");
      if (abs(base) <= 1) {
        if (base == 0) return exp == 0 ? BigInt(1) : BigInt(0);
        if (base == 1) return 1;
        return (exp % 2 == 0) ? BigInt(1) : BigInt(-1);
      }
      if (exp > kMaxBits || bit_length(base) * exp.convert_to<std::uint64_t>() > kMaxBits + 64) {
        throw EvalOverflow("power '" + print(e) + "' is too large");
      }
      return check_size(boost::multiprecision::pow(base, exp.convert_to<unsigned>()), e);
    }
    case IntExpr::Kind::Factorial: {
      const BigInt n = eval_int(e.args[0], env);
      if (n < 0) throw EvalError("factorial of a negative number in '" + print(e) + "'");
      if (n > kMaxFactorial) throw EvalOverflow("factorial '" + print(e) + "' is too large");
      BigInt r = 1;
      for (std::int64_t i = 2; i <= n.convert_to<std::int64_t>(); ++i) r *= i;
      return r;
    }
  }
  throw EvalError("malformed integer expression");
}

std::int64_t to_int64(const BigInt& v, const IntExpr& e) {
  if (bit_length(v) > 62) throw EvalOverflow("value of '" + print(e) + "' does not fit 62 bits");
  return v.convert_to<std::int64_t>();
}

// Coordinates far outside the window collapse to one cell past its edge.
std::int64_t clamp_coord(const BigInt& v, const Window& w) {
  if (v < w.lower() - 1) return w.lower() - 1;
  if (v > w.upper() + 1) return w.upper() + 1;
  return v.convert_to<std::int64_t>();
}

BigInt floor_div_big(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

BigInt ceil_div_big(const BigInt& a, const BigInt& b) { return -floor_div_big(-a, b); }

LatticeSet eval_set(const SetExpr& e, const Window& w, Env& env) {
  BitVector bits(static_cast<std::size_t>(w.cell_count()));
  auto set_value = [&](std::int64_t v) { bits.set(static_cast<std::size_t>(v - w.lower())); };
  switch (e.kind) {
    case SetExpr::Kind::Interval: {
      const std::int64_t lo = std::max(clamp_coord(eval_int(e.ints[0], env), w), w.lower());
      const std::int64_t hi = std::min(clamp_coord(eval_int(e.ints[1], env), w), w.upper());
      if (lo <= hi) bits.set_range(static_cast<std::size_t>(lo - w.lower()), static_cast<std::size_t>(hi - w.lower() + 1));
      return LatticeSet(w, std::move(bits));
    }
    case SetExpr::Kind::ArithProg: {
      const BigInt start = eval_int(e.ints[0], env);
      const BigInt step = eval_int(e.ints[1], env);
      const BigInt count = eval_int(e.ints[2], env);
      if (count < 0) throw EvalError("negative term count in '" + print(e) + "'");
      if (count == 0) return LatticeSet(w, std::move(bits));
      if (step == 0) {
        if (start >= w.lower() && start <= w.upper()) set_value(start.convert_to<std::int64_t>());
        return LatticeSet(w, std::move(bits));
      }
      // Indices i in [0, count) with start + i*step inside the window.
      BigInt i_lo, i_hi;
      if (step > 0) {
        i_lo = ceil_div_big(BigInt(w.lower()) - start, step);
        i_hi = floor_div_big(BigInt(w.upper()) - start, step);
      } else {
        i_lo = ceil_div_big(BigInt(w.upper()) - start, step);
        i_hi = floor_div_big(BigInt(w.lower()) - start, step);
      }
      i_lo = std::max(i_lo, BigInt(0));
      i_hi = std::min(i_hi, BigInt(count - 1));
      for (BigInt i = i_lo; i <= i_hi; ++i) set_value((start + i * step).convert_to<std::int64_t>());
      return LatticeSet(w, std::move(bits));
    }
    case SetExpr::Kind::ModResidues: {
      const BigInt m = eval_int(e.ints[0], env);
      if (m < 1) throw EvalError("modulus must be positive in '" + print(e) + "'");
      if (m > w.extent()) {
        for (std::size_t i = 1; i < e.ints.size(); ++i) {
          const BigInt r = eval_int(e.ints[i], env);
          // At most one representative of each class can land in the window.
          const BigInt first = w.lower() + ((r - w.lower()) % m + m) % m;
          if (first <= w.upper()) set_value(first.convert_to<std::int64_t>());
        }
        return LatticeSet(w, std::move(bits));
      }
      const std::int64_t mod = m.convert_to<std::int64_t>();
      for (std::size_t i = 1; i < e.ints.size(); ++i) {
        const std::int64_t r = ((eval_int(e.ints[i], env) % m + m) % m).convert_to<std::int64_t>();
        const std::int64_t first = w.lower() + floor_mod(r - w.lower(), mod);
        for (std::int64_t v = first; v <= w.upper(); v += mod) set_value(v);
      }
      return LatticeSet(w, std::move(bits));
    }
    case SetExpr::Kind::Union: return set_union(eval_set(e.sets[0], w, env), eval_set(e.sets[1], w, env));
    case SetExpr::Kind::Intersect: return intersect(eval_set(e.sets[0], w, env), eval_set(e.sets[1], w, env));
    case SetExpr::Kind::Difference: return difference(eval_set(e.sets[0], w, env), eval_set(e.sets[1], w, env));
    case SetExpr::Kind::Complement: return complement(eval_set(e.sets[0], w, env));
    case SetExpr::Kind::Sum: return sumset(eval_set(e.sets[0], w, env), eval_set(e.sets[1], w, env));
    case SetExpr::Kind::Dilate:
    case SetExpr::Kind::Erode: {
      const LatticeSet inner = eval_set(e.sets[0], w, env);
      const std::int64_t r = to_int64(eval_int(e.ints[0], env), e.ints[0]);
      return e.kind == SetExpr::Kind::Dilate ? dilate_cube(inner, r) : erode_cube(inner, r);
    }
    case SetExpr::Kind::IndexedUnion: {
      const BigInt lo = eval_int(e.ints[0], env);
      const BigInt hi = eval_int(e.ints[1], env);
      if (lo > hi) throw EvalError("empty index range in '" + print(e) + "'");
      if (hi - lo + 1 > kMaxUnionTerms) throw EvalOverflow("index range of '" + print(e) + "' exceeds 10^6 terms");
      for (BigInt i = lo; i <= hi; ++i) {
        env.emplace_back(e.name, i);
        bits |= eval_set(e.sets[0], w, env).bits();
        env.pop_back();
      }
      return LatticeSet(w, std::move(bits));
    }
    case SetExpr::Kind::FamilyRef: {
      FamilyParams params;
      for (const auto& p : e.params) params[p.name] = to_int64(eval_int(p.value, env), p.value);
      try {
        return family_member(e.name, params, e.member, w);
      } catch (const NotFound& err) {
        throw UnknownFamily(err.what());
      }
    }
  }
  throw EvalError("malformed set expression");
}

}  // namespace

SetExpr parse(std::string_view text) { return Parser(text).parse_top_set(); }
IntExpr parse_int(std::string_view text) { return Parser(text).parse_top_int(); }

std::string print(const SetExpr& e) {
  std::string out;
  print_set(e, out);
  return out;
}

std::string print(const IntExpr& e) {
  std::string out;
  print_int(e, out);
  return out;
}

LatticeSet evaluate(const SetExpr& e, const Window& window) {
  if (window.dim() != 1) throw WrongConvention("set expressions describe one-dimensional sets");
  Env env;
  return eval_set(e, window, env);
}

LatticeSet evaluate(std::string_view text, const Window& window) { return evaluate(parse(text), window); }

}  // namespace sumlab::setlang
