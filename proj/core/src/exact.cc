#include "unicomp/exact.h"

#include <cmath>
#include <numbers>
#include <sstream>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include "unicomp/error.h"

namespace unicomp {

double to_double(const Rational& q) {
  using boost::multiprecision::cpp_bin_float_50;
  const cpp_bin_float_50 num(boost::multiprecision::numerator(q));
  const cpp_bin_float_50 den(boost::multiprecision::denominator(q));
  return static_cast<double>(num / den);
}

std::string to_string(const Rational& q) {
  std::ostringstream out;
  out << boost::multiprecision::numerator(q);
  if (boost::multiprecision::denominator(q) != 1) {
    out << '/' << boost::multiprecision::denominator(q);
  }
  return out.str();
}

double PiMultiple::value() const {
  using boost::multiprecision::cpp_bin_float_50;
  const cpp_bin_float_50 pi = boost::math::constants::pi<cpp_bin_float_50>();
  cpp_bin_float_50 v = cpp_bin_float_50(boost::multiprecision::numerator(coefficient)) /
                       cpp_bin_float_50(boost::multiprecision::denominator(coefficient));
  v *= boost::multiprecision::pow(pi, pi_power);
  return static_cast<double>(v);
}

std::string PiMultiple::to_string() const {
  std::string out = unicomp::to_string(coefficient);
  if (pi_power == 0) return out;
  out += "*pi";
  if (pi_power != 1) out += "^" + std::to_string(pi_power);
  return out;
}

PiMultiple trig_monomial(int a, int b) {
  if (a < 0 || b < 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "trig_monomial exponents must be non-negative");
  }
  // I(a, b) = (a-1)/(a+b) I(a-2, b) = (b-1)/(a+b) I(a, b-2), with
  // I(0,0) = pi/2, I(1,0) = I(0,1) = 1, I(1,1) = 1/2.
  Rational coeff = 1;
  int x = a;
  int y = b;
  while (x >= 2) {
    coeff *= Rational(x - 1, x + y);
    x -= 2;
  }
  while (y >= 2) {
    coeff *= Rational(y - 1, x + y);
    y -= 2;
  }
  if (x == 0 && y == 0) return {coeff / 2, 1};
  if (x == 1 && y == 1) return {coeff / 2, 0};
  return {coeff, 0};
}

}  // namespace unicomp
