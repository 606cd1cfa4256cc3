// Exact scalar types shared by every module that does exact arithmetic.
//
// Integer is an arbitrary-precision integer, Rational an arbitrary-precision
// rational kept in lowest terms with positive denominator (the backing type
// canonicalizes on every operation, so the invariant cannot be broken from
// outside).
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <Eigen/Core>

#include <stdexcept>
#include <string>

namespace latpack {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

}  // namespace latpack

// Just enough NumTraits for dense Eigen containers of exact scalars. The
// boost-shipped Eigen adapter is not used: it injects templated operators
// into namespace Eigen whose constraints are not SFINAE-safe for matrix
// expressions of other scalar types.
namespace Eigen {

template <>
struct NumTraits<latpack::Rational> : GenericNumTraits<latpack::Rational> {
  using Real = latpack::Rational;
  using NonInteger = latpack::Rational;
  using Nested = latpack::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 60,
    MulCost = 60,
  };
  static Real epsilon() { return Real(0); }
  static Real dummy_precision() { return Real(0); }
  static int digits10() { return 0; }
};

template <>
struct NumTraits<latpack::Integer> : GenericNumTraits<latpack::Integer> {
  using Real = latpack::Integer;
  using NonInteger = latpack::Integer;
  using Nested = latpack::Integer;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 60,
    MulCost = 60,
  };
  static Real epsilon() { return Real(0); }
  static Real dummy_precision() { return Real(0); }
  static int digits10() { return 0; }
};

}  // namespace Eigen

namespace latpack {

inline Integer rat_num(const Rational& x) { return numerator(x); }
inline Integer rat_den(const Rational& x) { return denominator(x); }

// Serialized form is always "num/den", never a decimal.
inline std::string rational_to_string(const Rational& x) {
  return rat_num(x).str() + "/" + rat_den(x).str();
}

inline Rational rational_from_string(const std::string& s) {
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      return Rational(Integer(s));
    }
    Integer num(s.substr(0, slash));
    Integer den(s.substr(slash + 1));
    if (den <= 0) throw std::invalid_argument("rational: denominator must be positive: " + s);
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("rational: cannot parse '" + s + "'");
  }
}

inline Integer int_pow(Integer base, unsigned exp) {
  Integer r = 1;
  while (exp) {
    if (exp & 1u) r *= base;
    base *= base;
    exp >>= 1u;
  }
  return r;
}

// C(n, k) over the integers, exact.
inline Integer binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  Integer r = 1;
  for (unsigned i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

}  // namespace latpack
