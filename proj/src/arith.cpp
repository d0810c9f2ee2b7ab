#include "k3lat/arith.hpp"

#include "k3lat/errors.hpp"

#include <boost/multiprecision/integer.hpp>

#include <stdexcept>

namespace k3lat {

Integer gcd(const Integer& a, const Integer& b) {
  return boost::multiprecision::gcd(abs(a), abs(b));
}

Integer gcd(const IntVec& v) {
  Integer g = 0;
  for (const auto& x : v) g = gcd(g, x);
  return g;
}

Integer floor(const Rational& q) {
  Integer n = numerator(q);
  Integer d = denominator(q);  // always positive
  Integer f = n / d;
  if (n < 0 && f * d != n) f -= 1;
  return f;
}

Integer ceil(const Rational& q) { return -floor(-q); }

bool perfect_square(const Integer& n, Integer& root) {
  if (n < 0) return false;
  Integer r = boost::multiprecision::sqrt(n);
  if (r * r != n) return false;
  root = r;
  return true;
}

Rational mod_positive(const Rational& q, const Rational& m) {
  Rational k = Rational(floor(q / m));
  return q - k * m;
}

std::string to_string(const Integer& v) { return v.str(); }

std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

Rational parse_rational(const std::string& text) {
  try {
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(Integer(text));
    Integer num(text.substr(0, slash));
    Integer den(text.substr(slash + 1));
    if (den == 0) throw ValidationError("zero denominator in '" + text + "'");
    return ratio(num, den);
  } catch (const std::runtime_error&) {
    throw ValidationError("not a rational number: '" + text + "'");
  }
}

namespace {
int sgn(const Integer& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }
}  // namespace

int Surd::sign() const {
  int sa = sgn(a);
  int sb = sgn(b);
  if (sb == 0 || radicand == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: compare a^2 with b^2 D.
  int c = sgn(a * a - b * b * radicand);
  return sa > 0 ? c : -c;
}

Surd Surd::operator+(const Surd& o) const { return Surd(a + o.a, b + o.b, radicand); }
Surd Surd::operator-(const Surd& o) const { return Surd(a - o.a, b - o.b, radicand); }
Surd Surd::operator*(const Surd& o) const {
  return Surd(a * o.a + b * o.b * radicand, a * o.b + b * o.a, radicand);
}
Surd Surd::operator*(const Integer& k) const { return Surd(a * k, b * k, radicand); }

std::string Surd::str() const {
  if (b == 0) return a.str();
  std::string root = "sqrt(" + radicand.str() + ")";
  std::string tail;
  Integer mag = abs(b);
  tail = (mag == 1 ? root : mag.str() + "*" + root);
  if (a == 0) return (b < 0 ? "-" : "") + tail;
  return a.str() + (b < 0 ? "-" : "+") + tail;
}

Rational ratio(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("zero denominator");
  return den < 0 ? Rational(Integer(-num), Integer(-den)) : Rational(num, den);
}

}  // namespace k3lat
