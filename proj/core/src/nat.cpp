#include "tower/nat.hpp"

#include <limits>

namespace tower {

Nat Nat::from_int(Int v) {
  if (v.sign() < 0) throw Error(Errc::Underflow, "negative value " + v.str());
  return Nat(std::move(v), 0);
}

Nat Nat::parse(std::string_view text) {
  if (text.empty()) throw Error(Errc::ParseError, "empty natural number literal");
  for (char c : text) {
    if (c < '0' || c > '9') throw Error(Errc::ParseError, "not a natural number: '" + std::string(text) + "'");
  }
  // boost reads a leading 0 as an octal prefix
  const auto first = text.find_first_not_of('0');
  if (first == std::string_view::npos) return Nat(0);
  return Nat(Int(std::string(text.substr(first))), 0);
}

std::uint64_t Nat::to_u64() const {
  if (v_ > std::numeric_limits<std::uint64_t>::max()) throw Error(Errc::SizeLimit, v_.str() + " exceeds 64 bits");
  return v_.convert_to<std::uint64_t>();
}

Nat add(const Nat& m, const Nat& n) { return m + n; }

Nat mul(const Nat& m, const Nat& n) { return m * n; }

Nat pow(const Nat& m, const Nat& n) {
  if (n > Nat(std::numeric_limits<std::uint32_t>::max())) throw Error(Errc::SizeLimit, "exponent " + n.to_string());
  return Nat::from_int(boost::multiprecision::pow(m.value(), static_cast<unsigned>(n.to_u64())));
}

Nat sub_partial(const Nat& m, const Nat& n) {
  if (m > n) throw Error(Errc::Underflow, m.to_string() + " > " + n.to_string());
  return Nat::from_int(n.value() - m.value());
}

Nat triangular(const Nat& m) { return Nat::from_int(m.value() * (m.value() + 1) / 2); }

Nat pair(const Nat& p, const Nat& q) { return triangular(p + q) + q; }

std::pair<Nat, Nat> unpair(const Nat& r) {
  using Int = Nat::Int;
  // Estimate m from 8r + 1 = (2m + 1)^2, then correct into s(m) <= r < s(m + 1).
  Int m = (boost::multiprecision::sqrt(Int(8 * r.value() + 1)) - 1) / 2;
  auto s = [](const Int& k) { return Int(k * (k + 1) / 2); };
  while (s(m) > r.value()) --m;
  while (s(m + 1) <= r.value()) ++m;
  Int q = r.value() - s(m);
  return {Nat::from_int(m - q), Nat::from_int(q)};
}

}  // namespace tower
