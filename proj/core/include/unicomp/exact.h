#ifndef UNICOMP_EXACT_H_
#define UNICOMP_EXACT_H_

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace unicomp {

using Rational = boost::multiprecision::cpp_rational;

// Correctly rounded conversion (via a 50-digit intermediate).
double to_double(const Rational& q);
// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);

// coefficient * pi^pi_power.
struct PiMultiple {
  Rational coefficient;
  int pi_power = 0;

  double value() const;
  // e.g. "4/3*pi^10", "1/2*pi", "1/2".
  std::string to_string() const;

  friend bool operator==(const PiMultiple&, const PiMultiple&) = default;
};

// Exact integral of sin^a(x) cos^b(x) over [0, pi/2]. The result is
// rational unless both exponents are even, in which case it is a rational
// multiple of pi.
PiMultiple trig_monomial(int a, int b);

}  // namespace unicomp

#endif  // UNICOMP_EXACT_H_
