#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/rational_adaptor.hpp>

#include <string>
#include <vector>

namespace k3lat {

using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
                                               boost::multiprecision::et_off>;

using IntVec = std::vector<Integer>;
using IntMat = std::vector<IntVec>;

Integer gcd(const Integer& a, const Integer& b);
Integer gcd(const IntVec& v);

// num/den with the sign moved to the numerator; den must be nonzero.
Rational ratio(const Integer& num, const Integer& den);

// Floor and ceiling of a rational.
Integer floor(const Rational& q);
Integer ceil(const Rational& q);

// Exact integer square root; returns true and sets root when n is a perfect square.
bool perfect_square(const Integer& n, Integer& root);

// Reduces q to the canonical representative in [0, m).
Rational mod_positive(const Rational& q, const Rational& m);

std::string to_string(const Integer& v);
std::string to_string(const Rational& q);

// Parses "p" or "p/q".
Rational parse_rational(const std::string& text);

// Element a + b*sqrt(D) of Z[sqrt(D)] for a fixed positive radicand D.
//
// When D is a perfect square the surd collapses to an ordinary integer, but the
// arithmetic below stays valid; sign() is exact in every case.
struct Surd {
  Integer a;
  Integer b;
  Integer radicand;

  Surd() = default;
  Surd(Integer a_, Integer b_, Integer d_) : a(std::move(a_)), b(std::move(b_)), radicand(std::move(d_)) {}
  static Surd integer(const Integer& a, const Integer& d) { return Surd(a, 0, d); }

  int sign() const;
  bool is_rational() const { return b == 0; }

  Surd operator+(const Surd& o) const;
  Surd operator-(const Surd& o) const;
  Surd operator*(const Surd& o) const;
  Surd operator*(const Integer& k) const;
  Surd operator-() const { return Surd(-a, -b, radicand); }

  std::string str() const;
};

}  // namespace k3lat
