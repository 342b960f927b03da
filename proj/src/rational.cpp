#include "sumlab/rational.hpp"

#include <charconv>

#include "sumlab/errors.hpp"

namespace sumlab {

std::string to_string(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

namespace {

std::int64_t parse_int(std::string_view s, std::string_view whole) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
    throw FormatError("not a rational: '" + std::string(whole) + "'");
  }
  return v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    const auto den = parse_int(text.substr(slash + 1), text);
    if (den == 0) throw FormatError("zero denominator in '" + std::string(text) + "'");
    return {parse_int(text.substr(0, slash), text), den};
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    if (frac.size() > 15) throw FormatError("too many decimals in '" + std::string(text) + "'");
    const bool negative = !whole.empty() && whole.front() == '-';
    if (negative) whole.remove_prefix(1);
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    const std::int64_t ip = whole.empty() ? 0 : parse_int(whole, text);
    const std::int64_t fp = frac.empty() ? 0 : parse_int(frac, text);
    Rational r(ip * scale + fp, scale);
    return negative ? -r : r;
  }
  return {parse_int(text, text), 1};
}

bool within(const Rational& a, const Rational& b, const Rational& tol) {
  const Rational diff = a > b ? a - b : b - a;
  return diff <= tol;
}

}  // namespace sumlab
