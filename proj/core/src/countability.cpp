#include "tower/countability.hpp"

#include <stdexcept>

namespace tower {

Enumeration<Nat> enum_naturals() {
  return {[](const Nat& n) { return n; }, [](const Nat& n) -> std::optional<Nat> { return n; }};
}

Enumeration<Dyadic> enum_dyadics() {
  return {
      [](const Nat& n) {
        auto [a, u] = unpair(n);
        if (u.is_zero()) return Dyadic::make(a, 0);
        return Dyadic::make(a + a + 1, u);
      },
      [](const Dyadic& d) -> std::optional<Nat> {
        if (d.sign() == Sign::Negative) return std::nullopt;
        const Nat m = d.mantissa();
        if (d.exponent() == 0) return pair(m, 0);
        // canonical and u > 0, so m is odd
        return pair(Nat::from_int(Nat::Int(m.value() >> 1)), Nat(d.exponent()));
      }};
}

Choice first_element_choice() {
  return [](const AtomSet& block) -> std::size_t {
    for (std::size_t i = 0; i < block.carrier().size(); ++i) {
      if (block.contains(i)) return i;
    }
    throw Error(Errc::EmptyBlock, "cannot choose from an empty block");
  };
}

std::vector<std::size_t> choice_function(std::span<const AtomSet> blocks, const Choice& choice) {
  std::vector<std::size_t> out;
  out.reserve(blocks.size());
  for (const auto& b : blocks) {
    if (b.empty()) throw Error(Errc::EmptyBlock, "cannot choose from an empty block");
    const std::size_t x = choice(b);
    if (x >= b.carrier().size() || !b.contains(x)) throw std::logic_error("choice left its block");
    out.push_back(x);
  }
  return out;
}

Relation well_order_finite(const Carrier& carrier, const Choice& choice) {
  Relation r(carrier);
  AtomSet remaining = AtomSet::all(carrier);
  std::vector<std::size_t> placed;
  while (!remaining.empty()) {
    const std::size_t x = choice_function(std::span<const AtomSet>(&remaining, 1), choice).front();
    for (std::size_t p : placed) r.set(p, x);
    placed.push_back(x);
    remaining.erase(x);
  }
  return r;
}

std::size_t zorn_max_finite(const Relation& r) {
  if (!r.is_square()) throw Error(Errc::CarrierMismatch, "zorn_max_finite needs a relation on a single carrier");
  const std::size_t n = r.source().size();
  if (n == 0) throw Error(Errc::EmptyCarrier, "no weak maximum in an empty carrier");
  if (!classify(r).ordering) throw Error(Errc::NotOrdering, "zorn_max_finite needs an ordering");
  auto comparable = [&](std::size_t x, std::size_t y) { return x == y || r.has(x, y) || r.has(y, x); };
  std::vector<std::size_t> chain{0};
  for (std::size_t z = 1; z < n; ++z) {
    bool ok = true;
    for (std::size_t b : chain) ok = ok && comparable(b, z);
    if (ok) chain.push_back(z);
  }
  for (std::size_t m : chain) {
    bool top = true;
    for (std::size_t b : chain) top = top && (b == m || r.has(b, m));
    if (top) return m;
  }
  throw std::logic_error("finite chain without a maximum");
}

}  // namespace tower
