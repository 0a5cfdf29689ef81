#pragma once

#include "oracles.hpp"
#include "tower/dyadic.hpp"
#include "tower/real.hpp"

namespace oracle {

inline Rational to_rational(const tower::Dyadic& d) {
  Rational den = Rational(boost::multiprecision::cpp_int(1) << static_cast<unsigned>(d.exponent()));
  return Rational(d.numerator()) / den;
}

/// Random dyadic with |numerator| < 2^bits and exponent <= max_exp.
inline tower::Dyadic random_dyadic(unsigned bits = 20, unsigned max_exp = 20, bool allow_negative = true) {
  const auto lim = static_cast<std::int64_t>((std::int64_t{1} << bits) - 1);
  std::int64_t m = uniform_signed(allow_negative ? -lim : 0, lim);
  return tower::Dyadic::from_parts(tower::Dyadic::Int(m), uniform(0, max_exp));
}

inline tower::Dyadic random_nonnegative(unsigned bits = 20, unsigned max_exp = 20) {
  return random_dyadic(bits, max_exp, false);
}

inline bool width_at_most(const tower::Interval& iv, unsigned k) {
  return iv.width() <= tower::scale_down(tower::Dyadic(1), k);
}

}  // namespace oracle
