#pragma once

// Exact integer and rational arithmetic used throughout the library.

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace symspec {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on the arguments was violated.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// An exact computation produced a value that contradicts a mathematical
/// invariant (for example a non-integral eigenvalue).
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

/// A size cap (enumeration, matrix, search) was exceeded.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

inline Integer factorial(int n) {
  if (n < 0) throw InvalidArgument("factorial of negative number");
  Integer r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

inline Integer binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

inline Integer sign_power(int e) { return (e % 2 == 0) ? Integer(1) : Integer(-1); }

inline std::string to_string(const Integer& v) { return v.str(); }

/// Rationals serialize as "p/q" with q >= 1, even when q == 1.
inline std::string to_string(const Rational& v) {
  return boost::multiprecision::numerator(v).str() + "/" +
         boost::multiprecision::denominator(v).str();
}

inline bool is_integral(const Rational& v) {
  return boost::multiprecision::denominator(v) == 1;
}

inline Integer to_integer(const Rational& v) {
  if (!is_integral(v)) throw InvariantViolation("rational " + to_string(v) + " is not an integer");
  return boost::multiprecision::numerator(v);
}

inline double to_double(const Rational& v) { return v.convert_to<double>(); }
inline double to_double(const Integer& v) { return v.convert_to<double>(); }

inline Rational abs(const Rational& v) { return v < 0 ? Rational(-v) : v; }
inline Integer abs(const Integer& v) { return v < 0 ? Integer(-v) : v; }

}  // namespace symspec
