#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tower/nat.hpp"

namespace tower {

/// Bounds that keep hereditarily finite constructions tractable.
struct HFLimits {
  unsigned max_depth = 12;            ///< nesting depth (rank) of any produced set
  std::size_t max_power_base = 10;    ///< largest |S| accepted by power_set
  std::size_t max_product = 4096;     ///< largest |X|*|Y| accepted by cartesian_product
  std::size_t max_code_bits = 1u << 20;  ///< largest bit length materialized by ackermann_code
};

/// A hereditarily finite set in canonical form.
///
/// Elements are deduplicated and kept strictly increasing in Ackermann-code
/// order, N(X) = sum over x in X of 2^N(x). The order is decided structurally
/// (a larger top element means a larger code), so codes never have to be
/// materialized. Values are immutable and cheap to copy.
class HFSet {
 public:
  /// The empty set.
  HFSet();

  /// Canonicalizes an arbitrary list of elements (duplicates allowed).
  static HFSet of(std::vector<HFSet> elements);

  /// Parses `{}` / `{a,b,...}` with elements in any order. Throws SyntaxError.
  static HFSet parse(std::string_view text, const HFLimits& limits = {});

  std::span<const HFSet> elements() const noexcept;
  std::size_t size() const noexcept { return elements().size(); }
  bool empty() const noexcept { return size() == 0; }
  /// Nesting depth: 0 for the empty set, 1 + max rank of elements otherwise.
  unsigned rank() const noexcept;
  std::size_t hash() const noexcept;

  bool contains(const HFSet& x) const;

  std::string to_string() const;

  friend bool operator==(const HFSet& a, const HFSet& b) noexcept;
  /// Ackermann-code order.
  friend std::strong_ordering operator<=>(const HFSet& a, const HFSet& b) noexcept;

 private:
  struct Node;
  explicit HFSet(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static HFSet from_sorted(std::vector<HFSet> elements);
  std::shared_ptr<const Node> node_;

  friend HFSet set_union(const HFSet&, const HFSet&);
  friend HFSet set_intersection(const HFSet&, const HFSet&);
  friend HFSet set_difference(const HFSet&, const HFSet&);
  friend HFSet from_ackermann_code(const Nat&);
};

HFSet singleton(const HFSet& x);
HFSet unordered_pair(const HFSet& x, const HFSet& y);

HFSet set_union(const HFSet& a, const HFSet& b);
HFSet set_intersection(const HFSet& a, const HFSet& b);
HFSet set_difference(const HFSet& a, const HFSet& b);
bool is_subset(const HFSet& a, const HFSet& b);

/// Union of the members of a nonempty family. Throws EmptyFamily for A = {}.
HFSet big_union(const HFSet& family);
/// Intersection of the members of a nonempty family. Throws EmptyFamily for A = {}.
HFSet big_intersection(const HFSet& family);

/// All subsets of S. Throws SizeLimit when |S| exceeds limits.max_power_base.
HFSet power_set(const HFSet& s, const HFLimits& limits = {});

/// (x, y) = {{x, y}, {x}}.
HFSet kuratowski_pair(const HFSet& x, const HFSet& y);
/// Left and right coordinates of a Kuratowski pair. Throws NotAPair.
std::pair<HFSet, HFSet> unpair(const HFSet& p);

/// X x Y as a set of Kuratowski pairs. Throws SizeLimit.
HFSet cartesian_product(const HFSet& x, const HFSet& y, const HFLimits& limits = {});

/// sigma(x) = x u {x}.
HFSet successor(const HFSet& x);

/// Von Neumann encoding n = {0, ..., n-1}. Throws SizeLimit when n > limits.max_depth.
HFSet nat_to_hf(const Nat& n, const HFLimits& limits = {});
/// Inverse of nat_to_hf. Throws NotANatural when x is not a von Neumann natural.
Nat hf_to_nat(const HFSet& x);

/// N(X) = sum 2^N(x). Throws SizeLimit when the code would exceed limits.max_code_bits bits.
Nat ackermann_code(const HFSet& x, const HFLimits& limits = {});
/// The set whose Ackermann code is `code` (members = positions of set bits).
HFSet from_ackermann_code(const Nat& code);

/// Every element is a subset (a transitive set).
bool is_full(const HFSet& x);
/// x = {} or x is full and the element relation on x has the minimum property.
bool is_ordinal(const HFSet& x);

/// All sets reachable through membership from x (x itself excluded).
std::vector<HFSet> transitive_closure(const HFSet& x);
/// True when x occurs in its own transitive closure; never the case for
/// values of this type.
bool occurs_in_itself(const HFSet& x);

}  // namespace tower

template <>
struct std::hash<tower::HFSet> {
  std::size_t operator()(const tower::HFSet& s) const noexcept { return s.hash(); }
};
