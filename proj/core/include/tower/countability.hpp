#pragma once

#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "tower/dyadic.hpp"
#include "tower/nat.hpp"
#include "tower/relation.hpp"

namespace tower {

/// An injection N -> T with a partial inverse.
///
/// forward must be injective and back(forward(n)) = n; back returns nothing
/// for items outside the range. Both functions are pure.
template <class T>
struct Enumeration {
  std::function<T(const Nat&)> forward;
  std::function<std::optional<Nat>(const T&)> back;
};

Enumeration<Nat> enum_naturals();

/// Nonnegative dyadics. forward(n) with (a, u) = unpair(n) gives a for u = 0
/// and (2a + 1) 2^-u for u > 0, which hits each canonical form exactly once.
Enumeration<Dyadic> enum_dyadics();

/// Pairs through the pairing bijection: forward(pair(p, q)) = (a(p), b(q)).
template <class A, class B>
Enumeration<std::pair<A, B>> enum_product(Enumeration<A> a, Enumeration<B> b) {
  return {
      [a, b](const Nat& n) {
        auto [p, q] = unpair(n);
        return std::pair<A, B>{a.forward(p), b.forward(q)};
      },
      [a, b](const std::pair<A, B>& item) -> std::optional<Nat> {
        auto p = a.back(item.first);
        auto q = b.back(item.second);
        if (!p || !q) return std::nullopt;
        return pair(*p, *q);
      }};
}

/// Finite sets of base items, as vectors in increasing base index.
/// Index n enumerates the items at the set bits of n; forward(0) is empty.
template <class T>
Enumeration<std::vector<T>> enum_finite_subsets(Enumeration<T> base) {
  return {
      [base](const Nat& n) {
        std::vector<T> out;
        for (std::size_t i = 0; i < n.bit_length(); ++i) {
          if (n.bit(i)) out.push_back(base.forward(Nat(static_cast<std::uint64_t>(i))));
        }
        return out;
      },
      [base](const std::vector<T>& items) -> std::optional<Nat> {
        Nat::Int code = 0;
        for (const auto& x : items) {
          auto i = base.back(x);
          if (!i) return std::nullopt;
          bit_set(code, static_cast<unsigned>(i->to_u64()));
        }
        return Nat::from_int(code);
      }};
}

/// Union of finitely many enumerated sets, possibly overlapping.
///
/// G(pair(i, j)) = g_i(j) covers the union; H(x) = min_i pair(i, back_i(x))
/// picks the first hit, so G restricted to ran H is a bijection onto the
/// union. forward(k) is the k-th element of ran H in increasing order and
/// costs a scan of the first H-values; back(x) counts ran H below H(x).
template <class T>
Enumeration<T> enum_union(std::vector<Enumeration<T>> family) {
  auto fam = std::make_shared<const std::vector<Enumeration<T>>>(std::move(family));
  auto first_hit = [fam](const T& x) -> std::optional<Nat> {
    std::optional<Nat> best;
    for (std::size_t i = 0; i < fam->size(); ++i) {
      if (auto j = (*fam)[i].back(x)) {
        Nat h = pair(Nat(static_cast<std::uint64_t>(i)), *j);
        if (!best || h < *best) best = h;
      }
    }
    return best;
  };
  // n is in ran H iff its own item hits first at n.
  auto in_range = [fam, first_hit](const Nat& n) -> std::optional<T> {
    auto [i, j] = unpair(n);
    if (i >= Nat(static_cast<std::uint64_t>(fam->size()))) return std::nullopt;
    T item = (*fam)[static_cast<std::size_t>(i.to_u64())].forward(j);
    if (first_hit(item) == n) return item;
    return std::nullopt;
  };
  return {
      [in_range](const Nat& k) {
        Nat seen = 0;
        for (Nat n = 0;; n = n.succ()) {
          if (auto item = in_range(n)) {
            if (seen == k) return *item;
            seen = seen.succ();
          }
        }
      },
      [first_hit, in_range](const T& x) -> std::optional<Nat> {
        auto h = first_hit(x);
        if (!h) return std::nullopt;
        Nat rank = 0;
        for (Nat n = 0; n < *h; n = n.succ()) {
          if (in_range(n)) rank = rank.succ();
        }
        return rank;
      }};
}

/// Picks one atom of a nonempty block.
using Choice = std::function<std::size_t(const AtomSet&)>;

/// The first member in carrier order. Throws EmptyBlock.
Choice first_element_choice();

/// choice(B) for each block; throws EmptyBlock for an empty block and
/// std::logic_error if the choice leaves its block.
std::vector<std::size_t> choice_function(std::span<const AtomSet> blocks, const Choice& choice = first_element_choice());

/// Strict well-ordering built by repeatedly choosing from the atoms not yet
/// placed: each choice is above everything chosen before it.
Relation well_order_finite(const Carrier& carrier, const Choice& choice = first_element_choice());

/// A weak maximum of an ordering: grows a chain from the first atom by
/// adding, in carrier order, every atom comparable with the whole chain,
/// and returns the chain's maximum. Throws EmptyCarrier, NotOrdering.
std::size_t zorn_max_finite(const Relation& r);

}  // namespace tower
