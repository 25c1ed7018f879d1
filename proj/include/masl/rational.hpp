#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace masl {

/// Exact utility value. Integers are the common case.
using Rational = boost::rational<std::int64_t>;

/// Parses "p", "-p" or "p/q".
inline Rational parse_rational(std::string_view text) {
  auto to_int = [&](std::string_view s) -> std::int64_t {
    if (s.empty()) throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    std::size_t pos = 0;
    bool neg = false;
    if (s[0] == '-' || s[0] == '+') {
      neg = s[0] == '-';
      pos = 1;
    }
    if (pos == s.size()) throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    std::int64_t v = 0;
    for (; pos < s.size(); ++pos) {
      if (s[pos] < '0' || s[pos] > '9')
        throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
      v = v * 10 + (s[pos] - '0');
    }
    return neg ? -v : v;
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(to_int(text));
  auto den = to_int(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  return Rational(to_int(text.substr(0, slash)), den);
}

inline std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace masl
