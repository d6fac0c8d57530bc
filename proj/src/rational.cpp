#include "bellgram/rational.hpp"

#include <stdexcept>
#include <utility>

namespace bellgram {

Rational make_rational(BigInt numerator, BigInt denominator) {
  if (denominator == 0) throw std::invalid_argument("rational with zero denominator");
  return Rational(std::move(numerator), std::move(denominator));
}

std::string decimal_string(const Rational& value, int places) {
  BigInt scale = 1;
  for (int i = 0; i < places; ++i) scale *= 10;

  const bool negative = value < 0;
  const BigInt n = negative ? BigInt(-numerator(value)) : numerator(value);
  const BigInt d = denominator(value);

  // floor((n*scale)/d + 1/2) on non-negative operands.
  BigInt scaled = (2 * n * scale + d) / (2 * d);

  BigInt whole = scaled / scale;
  BigInt frac = scaled % scale;
  std::string digits = frac.str();
  std::string out = negative && scaled != 0 ? "-" : "";
  out += whole.str();
  if (places > 0) {
    out += '.';
    out += std::string(static_cast<std::size_t>(places) - digits.size(), '0');
    out += digits;
  }
  return out;
}

std::string fraction_string(const Rational& value) {
  if (denominator(value) == 1) return numerator(value).str();
  return numerator(value).str() + "/" + denominator(value).str();
}

}  // namespace bellgram
