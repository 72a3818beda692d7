#include "resist/rational.hpp"

#include <cctype>
#include <ostream>

namespace resist {

std::string Rational::str() const {
  std::string s = num_.str();
  if (den_ != 1) {
    s += '/';
    s += den_.str();
  }
  return s;
}

double Rational::to_double() const {
  // Shift both parts down so the quotient stays finite even when the exact
  // operands overflow double range.
  Integer n = num_, d = den_;
  auto bits = [](const Integer& v) {
    return v.is_zero() ? std::size_t{0} : boost::multiprecision::msb(boost::multiprecision::abs(v)) + 1;
  };
  std::size_t top = std::max(bits(n), bits(d));
  if (top > 512) {
    unsigned shift = static_cast<unsigned>(top - 512);
    n >>= shift;
    d >>= shift;
    if (d.is_zero()) d = 1;
  }
  return n.convert_to<double>() / d.convert_to<double>();
}

Rational rational_pow2(long long k) {
  Integer p = Integer(1) << static_cast<unsigned>(k < 0 ? -k : k);
  return k >= 0 ? Rational(p) : Rational(Integer(1), p);
}

Rational parse_rational(std::string_view text) {
  std::size_t pos = 0;
  auto digits = [&](std::string_view what) {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw ParseError("expected " + std::string(what) + " in rational \"" + std::string(text) + "\"");
    return std::string(text.substr(start, pos - start));
  };

  bool negative = false;
  if (pos < text.size() && text[pos] == '-') {
    negative = true;
    ++pos;
  }
  Integer num(digits("numerator digits"));
  Integer den(1);
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    den = Integer(digits("denominator digits"));
    if (den.is_zero()) throw ParseError("zero denominator in rational \"" + std::string(text) + "\"");
  }
  if (pos != text.size()) throw ParseError("trailing characters in rational \"" + std::string(text) + "\"");
  if (negative) num = -num;
  return Rational(std::move(num), std::move(den));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace resist
