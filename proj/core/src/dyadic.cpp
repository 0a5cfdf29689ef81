#include "tower/dyadic.hpp"

#include <cmath>
#include <limits>

namespace tower {

namespace {

using Int = Dyadic::Int;

Int pow2(std::uint64_t k) {
  Int r = 0;
  bit_set(r, static_cast<unsigned>(k));
  return r;
}

/// Floor division by 2^k that also handles negative numerators.
Int floor_shift(const Int& num, std::uint64_t k) {
  if (k == 0) return num;
  Int q;
  Int r;
  divide_qr(num, pow2(k), q, r);
  if (num.sign() < 0 && !r.is_zero()) q -= 1;
  return q;
}

Int ceil_shift(const Int& num, std::uint64_t k) { return -floor_shift(-num, k); }

std::uint64_t parse_u64(std::string_view digits, std::string_view whole) {
  if (digits.empty()) throw Error(Errc::ParseError, "malformed dyadic literal '" + std::string(whole) + "'");
  std::uint64_t v = 0;
  for (char c : digits) {
    if (c < '0' || c > '9') throw Error(Errc::ParseError, "malformed dyadic literal '" + std::string(whole) + "'");
    if (v > (std::numeric_limits<std::uint64_t>::max() - 9) / 10) throw Error(Errc::SizeLimit, "exponent too large");
    v = v * 10 + static_cast<std::uint64_t>(c - '0');
  }
  return v;
}

}  // namespace

Dyadic Dyadic::from_parts(Int num, std::uint64_t exp) {
  if (num.is_zero()) return Dyadic();
  if (exp > 0) {
    std::uint64_t tz = lsb(num < 0 ? Int(-num) : num);
    std::uint64_t shift = std::min(tz, exp);
    if (shift > 0) {
      num >>= static_cast<unsigned>(shift);
      exp -= shift;
    }
  }
  return Dyadic(std::move(num), exp, 0);
}

Dyadic Dyadic::make(const Nat& m, const Nat& u, Sign sign) {
  Int num = m.value();
  if (sign == Sign::Negative) num = -num;
  return from_parts(std::move(num), u.to_u64());
}

Dyadic Dyadic::from_double(double v) {
  if (!std::isfinite(v)) throw Error(Errc::ParseError, "non-finite float");
  if (v == 0.0) return Dyadic();
  int e = 0;
  double m = std::frexp(v, &e);  // v = m * 2^e, 0.5 <= |m| < 1
  auto mant = static_cast<std::int64_t>(std::ldexp(m, 53));
  std::int64_t shift = static_cast<std::int64_t>(e) - 53;
  Int num = mant;
  if (shift >= 0) return from_parts(num << static_cast<unsigned>(shift), 0);
  return from_parts(std::move(num), static_cast<std::uint64_t>(-shift));
}

Dyadic Dyadic::parse(std::string_view text) {
  std::string_view whole = text;
  bool negative = false;
  if (!text.empty() && text.front() == '-') {
    negative = true;
    text.remove_prefix(1);
  }
  Dyadic result;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    std::string_view den = text.substr(slash + 1);
    if (den.substr(0, 2) != "2^") throw Error(Errc::ParseError, "expected m/2^u in '" + std::string(whole) + "'");
    Nat m = Nat::parse(text.substr(0, slash));
    result = from_parts(m.value(), parse_u64(den.substr(2), whole));
  } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view ip = text.substr(0, dot);
    std::string_view fp = text.substr(dot + 1);
    if (ip.empty() || fp.empty()) throw Error(Errc::ParseError, "malformed decimal '" + std::string(whole) + "'");
    Nat digits = Nat::parse(std::string(ip) + std::string(fp));
    Int five = boost::multiprecision::pow(Int(5), static_cast<unsigned>(fp.size()));
    Int q;
    Int r;
    divide_qr(digits.value(), five, q, r);
    if (!r.is_zero()) throw Error(Errc::ParseError, "'" + std::string(whole) + "' is not a dyadic rational");
    result = from_parts(std::move(q), fp.size());
  } else {
    result = from_parts(Nat::parse(text).value(), 0);
  }
  return negative ? neg(result) : result;
}

Sign Dyadic::sign() const noexcept {
  int s = num_.sign();
  return s < 0 ? Sign::Negative : (s > 0 ? Sign::Positive : Sign::Zero);
}

bool Dyadic::is_power_of_two() const {
  if (num_.is_zero()) return false;
  Int a = num_ < 0 ? Int(-num_) : num_;
  return a == 1 || (exp_ == 0 && (a & (a - 1)) == 0);
}

std::string Dyadic::to_string() const {
  if (exp_ == 0) return num_.str();
  return num_.str() + "/2^" + std::to_string(exp_);
}

std::string Dyadic::to_decimal() const {
  Int a = num_ < 0 ? Int(-num_) : num_;
  std::string digits = Int(a * boost::multiprecision::pow(Int(5), static_cast<unsigned>(exp_))).str();
  std::string out;
  if (exp_ == 0) {
    out = digits;
  } else {
    if (digits.size() <= exp_) digits.insert(0, exp_ - digits.size() + 1, '0');
    out = digits.substr(0, digits.size() - exp_) + "." + digits.substr(digits.size() - exp_);
  }
  return num_ < 0 ? "-" + out : out;
}

double Dyadic::to_double() const {
  return std::ldexp(num_.convert_to<double>(), -static_cast<int>(std::min<std::uint64_t>(exp_, 1 << 20)));
}

std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) { return compare(a, b); }

std::strong_ordering compare(const Dyadic& d, const Dyadic& e) {
  int c = 0;
  if (d.exponent() >= e.exponent()) {
    c = d.numerator().compare(Int(e.numerator() << static_cast<unsigned>(d.exponent() - e.exponent())));
  } else {
    c = Int(d.numerator() << static_cast<unsigned>(e.exponent() - d.exponent())).compare(e.numerator());
  }
  return c < 0 ? std::strong_ordering::less : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

Dyadic add(const Dyadic& d, const Dyadic& e) {
  std::uint64_t x = std::max(d.exponent(), e.exponent());
  Int a = d.numerator() << static_cast<unsigned>(x - d.exponent());
  Int b = e.numerator() << static_cast<unsigned>(x - e.exponent());
  return Dyadic::from_parts(a + b, x);
}

Dyadic sub(const Dyadic& d, const Dyadic& e) { return add(d, neg(e)); }

Dyadic mul(const Dyadic& d, const Dyadic& e) {
  return Dyadic::from_parts(d.numerator() * e.numerator(), d.exponent() + e.exponent());
}

Dyadic neg(const Dyadic& d) { return Dyadic::from_parts(-d.numerator(), d.exponent()); }

Dyadic abs(const Dyadic& d) { return d.sign() == Sign::Negative ? neg(d) : d; }

Dyadic pow(const Dyadic& d, std::uint64_t k) {
  if (k > std::numeric_limits<unsigned>::max()) throw Error(Errc::SizeLimit, "exponent too large");
  return Dyadic::from_parts(boost::multiprecision::pow(d.numerator(), static_cast<unsigned>(k)), d.exponent() * k);
}

Dyadic scale_down(const Dyadic& d, std::uint64_t k) { return Dyadic::from_parts(d.numerator(), d.exponent() + k); }

Dyadic min(const Dyadic& d, const Dyadic& e) { return e < d ? e : d; }
Dyadic max(const Dyadic& d, const Dyadic& e) { return d < e ? e : d; }

Dyadic between(const Dyadic& d, const Dyadic& e) {
  if (!(d < e)) throw Error(Errc::BadOrder, d.to_string() + " is not below " + e.to_string());
  const std::uint64_t u = d.exponent();
  const std::uint64_t v = e.exponent();
  // d = <m0, u+v+1> with m0 = m 2^(v+1); e likewise; both numerators even,
  // so m0 + 1 lies strictly between them.
  Int m0 = d.numerator() << static_cast<unsigned>(v + 1);
  return Dyadic::from_parts(m0 + 1, u + v + 1);
}

Dyadic floor_to(const Dyadic& d, std::uint64_t bits) {
  if (d.exponent() <= bits) return d;
  return Dyadic::from_parts(floor_shift(d.numerator(), d.exponent() - bits), bits);
}

Dyadic ceil_to(const Dyadic& d, std::uint64_t bits) {
  if (d.exponent() <= bits) return d;
  return Dyadic::from_parts(ceil_shift(d.numerator(), d.exponent() - bits), bits);
}

Dyadic reciprocal_down(const Dyadic& d, std::uint64_t bits) {
  if (d.sign() != Sign::Positive) throw Error(Errc::NotBoundedAwayFromZero, "reciprocal of " + d.to_string());
  return Dyadic::from_parts(Int(pow2(d.exponent() + bits) / d.numerator()), bits);
}

Dyadic reciprocal_up(const Dyadic& d, std::uint64_t bits) {
  if (d.sign() != Sign::Positive) throw Error(Errc::NotBoundedAwayFromZero, "reciprocal of " + d.to_string());
  Int q;
  Int r;
  divide_qr(pow2(d.exponent() + bits), d.numerator(), q, r);
  if (!r.is_zero()) q += 1;
  return Dyadic::from_parts(std::move(q), bits);
}

std::optional<Dyadic> exact_reciprocal(const Dyadic& d) {
  if (!d.is_power_of_two()) return std::nullopt;
  const bool negative = d.sign() == Sign::Negative;
  Int a = negative ? Int(-d.numerator()) : d.numerator();
  Dyadic r = a == 1 ? Dyadic::from_parts(pow2(d.exponent()), 0) : Dyadic::from_parts(Int(1), msb(a));
  return negative ? neg(r) : r;
}

std::uint64_t bit_bound(const Dyadic& d) {
  Dyadic c = ceil_to(d, 0);
  if (c.numerator() <= 1) return 0;
  return msb(Int(c.numerator() - 1)) + 1;
}

}  // namespace tower
