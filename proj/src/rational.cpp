#include "localflow/rational.hpp"

#include <charconv>
#include <cstdlib>

#include "localflow/errors.hpp"

namespace localflow {
namespace {

std::int64_t parse_int(std::string_view text, std::string_view whole) {
  std::int64_t value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && text.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || first == last) {
    throw InputError("malformed rational '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text, text));
  const std::int64_t num = parse_int(text.substr(0, slash), text);
  const std::int64_t den = parse_int(text.substr(slash + 1), text);
  if (den == 0) {
    throw InputError("zero denominator in rational '" + std::string(text) + "'");
  }
  return Rational(num, den);
}

std::string to_string(const Rational& value) {
  if (value.denominator() == 1) return std::to_string(value.numerator());
  return std::to_string(value.numerator()) + "/" +
         std::to_string(value.denominator());
}

std::string to_decimal(const Rational& value, int digits) {
  const bool negative = value.numerator() < 0;
  // |num| / den with 128-bit headroom for the 10^digits scaling.
  const __int128 num = negative ? -static_cast<__int128>(value.numerator())
                                : static_cast<__int128>(value.numerator());
  const __int128 den = value.denominator();
  __int128 scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  __int128 scaled = (num * scale * 2 + den) / (den * 2);
  const __int128 int_part = scaled / scale;
  __int128 frac_part = scaled % scale;

  auto to_str = [](__int128 v) {
    if (v == 0) return std::string("0");
    std::string out;
    while (v > 0) {
      out.insert(out.begin(), static_cast<char>('0' + static_cast<int>(v % 10)));
      v /= 10;
    }
    return out;
  };

  std::string out = (negative && scaled != 0) ? "-" : "";
  out += to_str(int_part);
  if (digits > 0) {
    std::string frac = to_str(frac_part);
    out += '.';
    out += std::string(static_cast<std::size_t>(digits) - frac.size(), '0');
    out += frac;
  }
  return out;
}

std::int64_t ceil(const Rational& value) {
  const std::int64_t num = value.numerator();
  const std::int64_t den = value.denominator();  // always positive
  std::int64_t q = num / den;
  if (num % den != 0 && num > 0) ++q;
  return q;
}

}  // namespace localflow
