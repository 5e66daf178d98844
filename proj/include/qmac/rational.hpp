#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <Eigen/Core>
#include <boost/rational.hpp>

namespace qmac {

/// Exact rational with normalized sign and reduced terms.
/// Compare against Rational(n), never a bare integer: boost 1.74's mixed
/// operator== recurses forever under C++20 rewritten comparisons.
using Rational = boost::rational<std::int64_t>;

/// "a/b", or "a" when the denominator is 1.
std::string to_string(const Rational& r);

/// Parses "a", "-a", "a/b". Throws ValidationError on malformed input.
Rational parse_rational(std::string_view text);

std::int64_t floor(const Rational& r);

inline bool is_integer(const Rational& r) { return r.denominator() == 1; }

}  // namespace qmac

namespace Eigen {

template <>
struct NumTraits<qmac::Rational> : GenericNumTraits<qmac::Rational> {
  using Real = qmac::Rational;
  using NonInteger = qmac::Rational;
  using Literal = qmac::Rational;
  using Nested = qmac::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 4,
    MulCost = 4
  };
  static Real epsilon() { return Real(0); }
  static Real dummy_precision() { return Real(0); }
  static int digits10() { return 0; }
};

}  // namespace Eigen
