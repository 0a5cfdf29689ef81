#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "tower/nat.hpp"

namespace tower {

enum class Sign { Negative = -1, Zero = 0, Positive = 1 };

/// Exact signed dyadic rational +-m * 2^-u.
///
/// Canonical form: u = 0 or m odd (the exponent is as small as possible);
/// zero is the single value m = 0, u = 0. Equal values therefore have equal
/// representations and comparison of representations is structural.
class Dyadic {
 public:
  using Int = boost::multiprecision::cpp_int;

  Dyadic() = default;
  Dyadic(std::int64_t v) : num_(v) {}  // NOLINT(google-explicit-constructor)

  /// Canonical representative of the class of (m, u) with the given sign.
  /// The sign is ignored when m = 0.
  static Dyadic make(const Nat& m, const Nat& u, Sign sign = Sign::Positive);
  /// value = num * 2^-exp, canonicalized.
  static Dyadic from_parts(Int num, std::uint64_t exp);
  /// Exact value of a finite binary float. Throws ParseError for NaN/inf.
  static Dyadic from_double(double v);

  /// Accepts `m/2^u`, integers, and exact binary-fraction decimals such as
  /// `3.25` or `-0.125`, each with an optional leading minus sign.
  static Dyadic parse(std::string_view text);

  Sign sign() const noexcept;
  /// |value| = mantissa * 2^-exponent.
  Nat mantissa() const { return Nat::from_int(abs(num_)); }
  std::uint64_t exponent() const noexcept { return exp_; }
  /// Signed numerator of the canonical representation.
  const Int& numerator() const noexcept { return num_; }

  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_integer() const noexcept { return exp_ == 0; }
  /// True for +-2^k, k any integer.
  bool is_power_of_two() const;

  /// `m/2^u`, or plain `m` when u = 0, with a leading `-` for negatives.
  std::string to_string() const;
  /// Exact decimal expansion (dyadic fractions terminate).
  std::string to_decimal() const;
  double to_double() const;

  friend bool operator==(const Dyadic&, const Dyadic&) = default;
  friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b);

 private:
  Dyadic(Int num, std::uint64_t exp, int /*canonical*/) : num_(std::move(num)), exp_(exp) {}
  Int num_ = 0;
  std::uint64_t exp_ = 0;
};

/// Three-way comparison through cross multiplication m 2^v vs n 2^u.
std::strong_ordering compare(const Dyadic& d, const Dyadic& e);

Dyadic add(const Dyadic& d, const Dyadic& e);
Dyadic sub(const Dyadic& d, const Dyadic& e);
Dyadic mul(const Dyadic& d, const Dyadic& e);
Dyadic neg(const Dyadic& d);
Dyadic abs(const Dyadic& d);
/// d^k for a natural exponent k.
Dyadic pow(const Dyadic& d, std::uint64_t k);
/// d * 2^-k.
Dyadic scale_down(const Dyadic& d, std::uint64_t k);
Dyadic min(const Dyadic& d, const Dyadic& e);
Dyadic max(const Dyadic& d, const Dyadic& e);

/// Density witness for d < e: writes both at the common exponent u + v + 1,
/// where their numerators are even, and returns the smallest numerator
/// strictly above d's. Throws BadOrder when d >= e.
Dyadic between(const Dyadic& d, const Dyadic& e);

/// Largest multiple of 2^-bits that is <= d.
Dyadic floor_to(const Dyadic& d, std::uint64_t bits);
/// Smallest multiple of 2^-bits that is >= d.
Dyadic ceil_to(const Dyadic& d, std::uint64_t bits);
/// floor(2^bits / d) / 2^bits and its ceiling counterpart, for d > 0.
Dyadic reciprocal_down(const Dyadic& d, std::uint64_t bits);
Dyadic reciprocal_up(const Dyadic& d, std::uint64_t bits);

/// 1/d when d = +-2^k (the only dyadics with dyadic reciprocals).
std::optional<Dyadic> exact_reciprocal(const Dyadic& d);

/// Smallest b >= 0 with d <= 2^b.
std::uint64_t bit_bound(const Dyadic& d);

inline Dyadic operator+(const Dyadic& a, const Dyadic& b) { return add(a, b); }
inline Dyadic operator-(const Dyadic& a, const Dyadic& b) { return sub(a, b); }
inline Dyadic operator*(const Dyadic& a, const Dyadic& b) { return mul(a, b); }
inline Dyadic operator-(const Dyadic& a) { return neg(a); }

}  // namespace tower
