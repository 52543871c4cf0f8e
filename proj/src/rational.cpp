#include "wallkit/rational.hpp"

#include <charconv>

#include "wallkit/errors.hpp"

namespace wallkit {

namespace {

std::int64_t parse_int(std::string_view s, std::string_view whole) {
  std::int64_t v = 0;
  auto first = s.data();
  auto last = s.data() + s.size();
  if (!s.empty() && s.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || first == last) {
    throw ParseError("bad rational '" + std::string(whole) + "'");
  }
  return v;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto t = trim(text);
  auto slash = t.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(t, text));
  auto num = parse_int(trim(t.substr(0, slash)), text);
  auto den = parse_int(trim(t.substr(slash + 1)), text);
  if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string to_string(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

Rational local_density_bound(const Rational& lambda) {
  return (Rational(1) - 6 * lambda + 4 * lambda * lambda) / (Rational(1) - 2 * lambda);
}

Rational separation_constant(const Rational& lambda) {
  return (Rational(1) - 6 * lambda + 4 * lambda * lambda) / (Rational(2) - 4 * lambda);
}

}  // namespace wallkit
