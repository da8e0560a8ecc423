#include "circramsey/rational.hpp"

#include "circramsey/error.hpp"

#include <cctype>

namespace circramsey {

BigInt floor(const Rational& q) {
  const BigInt num = boost::multiprecision::numerator(q);
  const BigInt den = boost::multiprecision::denominator(q);  // always positive
  BigInt quot = num / den;                                    // truncates toward zero
  if (num < 0 && quot * den != num) {
    --quot;
  }
  return quot;
}

Rational frac(const Rational& q) { return q - Rational(floor(q)); }

Rational mod(const Rational& q, const Rational& period) {
  return q - Rational(floor(q / period)) * period;
}

namespace {

BigInt parse_integer(std::string_view text, std::string_view whole) {
  if (text.empty()) {
    throw InvalidArgument("malformed rational '" + std::string(whole) + "'");
  }
  std::size_t i = 0;
  bool negative = false;
  if (text[0] == '-' || text[0] == '+') {
    negative = text[0] == '-';
    i = 1;
  }
  if (i == text.size()) {
    throw InvalidArgument("malformed rational '" + std::string(whole) + "'");
  }
  BigInt value = 0;
  for (; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw InvalidArgument("malformed rational '" + std::string(whole) + "'");
    }
    value = value * 10 + (text[i] - '0');
  }
  return negative ? BigInt(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_integer(text, text));
  }
  const BigInt num = parse_integer(text.substr(0, slash), text);
  const BigInt den = parse_integer(text.substr(slash + 1), text);
  if (den == 0) {
    throw InvalidArgument("zero denominator in '" + std::string(text) + "'");
  }
  return Rational(num, den);
}

std::string to_string(const Rational& q) {
  const BigInt den = boost::multiprecision::denominator(q);
  if (den == 1) {
    return boost::multiprecision::numerator(q).str();
  }
  return boost::multiprecision::numerator(q).str() + "/" + den.str();
}

}  // namespace circramsey
