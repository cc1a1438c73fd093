#include "cen/rational.hpp"

#include <cstdlib>
#include <stdexcept>

namespace cen {

std::string to_string(const Rational& r) {
  return std::to_string(r.numerator()) + '/' + std::to_string(r.denominator());
}

std::string format_fraction(const Rational& r) {
  if (r.denominator() == 1)
    return std::to_string(r.numerator());
  return to_string(r);
}

std::string format_decimal(const Rational& r, int places) {
  std::int64_t scale = 1;
  for (int i = 0; i < places; ++i)
    scale *= 10;
  const std::int64_t num = r.numerator();
  const std::int64_t den = r.denominator();
  const bool negative = num < 0;
  const std::int64_t mag = negative ? -num : num;
  // round(mag * scale / den), half away from zero
  const std::int64_t scaled = (2 * mag * scale + den) / (2 * den);
  std::string whole = std::to_string(scaled / scale);
  std::string frac;
  if (places > 0) {
    frac = std::to_string(scaled % scale);
    frac.insert(0, static_cast<std::size_t>(places) - frac.size(), '0');
  }
  while (!frac.empty() && frac.back() == '0')
    frac.pop_back();
  std::string out = (negative && scaled != 0) ? "-" : "";
  out += whole;
  if (!frac.empty())
    out += '.' + frac;
  return out;
}

std::string format_probability(const Rational& r) {
  return r.denominator() <= 99 ? format_fraction(r) : format_decimal(r, 3);
}

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  try {
    std::size_t used = 0;
    const std::int64_t num = std::stoll(text.substr(0, slash), &used);
    if (used != (slash == std::string::npos ? text.size() : slash))
      throw std::invalid_argument("trailing characters");
    if (slash == std::string::npos)
      return Rational(num);
    const std::string rest = text.substr(slash + 1);
    const std::int64_t den = std::stoll(rest, &used);
    if (used != rest.size() || den == 0)
      throw std::invalid_argument("bad denominator");
    return Rational(num, den);
  } catch (const std::exception&) {
    throw std::invalid_argument("not a rational number: '" + text + "'");
  }
}

} // namespace cen
