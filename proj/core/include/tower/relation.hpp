#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tower/error.hpp"
#include "tower/nat.hpp"

namespace tower {

/// Ordered finite list of distinct atom names. Cheap to copy.
class Carrier {
 public:
  Carrier();
  /// Throws ParseError on duplicate names.
  explicit Carrier(std::vector<std::string> atoms);
  /// Atoms named by `prefix` followed by 0..n-1.
  static Carrier numbered(std::size_t n, std::string_view prefix = "x");

  std::size_t size() const noexcept { return atoms_->size(); }
  bool empty() const noexcept { return atoms_->empty(); }
  const std::vector<std::string>& atoms() const noexcept { return *atoms_; }
  const std::string& atom(std::size_t i) const { return (*atoms_)[i]; }
  std::optional<std::size_t> find(std::string_view name) const;
  /// Throws UnknownAtom.
  std::size_t index_of(std::string_view name) const;

  friend bool operator==(const Carrier& a, const Carrier& b) {
    return a.atoms_ == b.atoms_ || *a.atoms_ == *b.atoms_;
  }

 private:
  std::shared_ptr<const std::vector<std::string>> atoms_;
  std::shared_ptr<const std::map<std::string, std::size_t, std::less<>>> index_;
};

/// A subset of a carrier.
class AtomSet {
 public:
  AtomSet() = default;
  explicit AtomSet(Carrier carrier) : carrier_(std::move(carrier)), bits_(carrier_.size(), false) {}
  static AtomSet all(const Carrier& carrier);
  /// Throws UnknownAtom.
  static AtomSet of(const Carrier& carrier, const std::vector<std::string>& names);
  /// Members are the set bits of `mask` (carriers of at most 64 atoms).
  static AtomSet from_mask(const Carrier& carrier, std::uint64_t mask);

  const Carrier& carrier() const noexcept { return carrier_; }
  bool contains(std::size_t i) const { return bits_[i]; }
  void insert(std::size_t i) { bits_[i] = true; }
  void erase(std::size_t i) { bits_[i] = false; }
  std::size_t size() const;
  bool empty() const { return size() == 0; }
  /// Member indices in carrier order.
  std::vector<std::size_t> indices() const;
  std::vector<std::string> names() const;
  std::string to_string() const;

  friend bool operator==(const AtomSet&, const AtomSet&) = default;

 private:
  Carrier carrier_;
  std::vector<bool> bits_;
};

/// A relation between two finite carriers stored as a dense boolean matrix.
class Relation {
 public:
  Relation() = default;
  Relation(Carrier source, Carrier target);
  /// Empty relation on X.
  explicit Relation(Carrier carrier) : Relation(carrier, carrier) {}

  /// Throws UnknownAtom for names outside the carriers.
  static Relation from_pairs(const Carrier& source, const Carrier& target,
                             const std::vector<std::pair<std::string, std::string>>& pairs);
  static Relation from_pairs(const Carrier& carrier, const std::vector<std::pair<std::string, std::string>>& pairs) {
    return from_pairs(carrier, carrier, pairs);
  }
  static Relation diagonal(const Carrier& carrier);
  static Relation full(const Carrier& source, const Carrier& target);
  static Relation full(const Carrier& carrier) { return full(carrier, carrier); }

  const Carrier& source() const noexcept { return source_; }
  const Carrier& target() const noexcept { return target_; }
  bool is_square() const { return source_ == target_; }

  bool has(std::size_t x, std::size_t y) const { return bits_[x * target_.size() + y]; }
  bool has(std::string_view x, std::string_view y) const { return has(source_.index_of(x), target_.index_of(y)); }
  void set(std::size_t x, std::size_t y, bool value = true) { bits_[x * target_.size() + y] = value; }
  void insert(std::string_view x, std::string_view y) { set(source_.index_of(x), target_.index_of(y)); }

  std::size_t count() const;
  std::vector<std::pair<std::size_t, std::size_t>> pairs() const;
  /// `{(a, b), (b, c)}` in carrier order.
  std::string to_string() const;

  friend bool operator==(const Relation&, const Relation&) = default;

 private:
  Carrier source_;
  Carrier target_;
  std::vector<bool> bits_;
};

bool is_subset(const Relation& a, const Relation& b);
Relation set_union(const Relation& a, const Relation& b);
Relation set_intersection(const Relation& a, const Relation& b);
Relation set_difference(const Relation& a, const Relation& b);

/// VU = {(x, z) : (x, y) in U, (y, z) in V for some y}. Requires U.target = V.source.
Relation compose(const Relation& v, const Relation& u);
Relation inverse(const Relation& r);
/// R | A, a relation on the sub-carrier of A's atoms (in carrier order).
Relation restrict(const Relation& r, const AtomSet& a);
/// R^1 = R, R^(m+1) = R^m R. Throws BadExponent for m = 0.
Relation power(const Relation& r, const Nat& m);

/// R[A].
AtomSet image(const Relation& r, const AtomSet& a);
/// R{x}.
AtomSet point_image(const Relation& r, std::size_t x);
/// R<A> = {y : (x, y) in R for all x in A}.
AtomSet co_image(const Relation& r, const AtomSet& a);

struct PropertyReport {
  bool reflexive = false;
  bool antireflexive = false;
  bool symmetric = false;
  bool antisymmetric = false;
  bool transitive = false;
  bool connective = false;
  bool directive = false;
  bool minimum_property = false;
  /// False when minimum_property was estimated by sampling.
  bool minimum_property_exact = true;

  bool pre_ordering = false;
  bool ordering = false;
  bool ordering_lt = false;
  bool ordering_le = false;
  bool direction = false;
  bool equivalence = false;
  bool total_ordering = false;
  bool well_ordering = false;
};

/// Carriers up to this size get an exhaustive minimum-property check.
inline constexpr std::size_t kExhaustiveMinimumAtoms = 12;
/// Subsets drawn per check on larger carriers, where no exact shortcut applies.
inline constexpr std::size_t kMinimumSamples = 4096;

/// Whether every nonempty subset has a minimum. Exact up to 12 atoms and
/// whenever the relation is connective and transitive, or not connective.
/// Otherwise seeded random subsets are tested, and `exact` is set to false.
bool has_minimum_property(const Relation& r, bool* exact = nullptr, std::uint64_t seed = 0x5eed);

/// Requires a square relation (CarrierMismatch).
PropertyReport classify(const Relation& r);

/// Equivalence classes in order of first member. Throws NotEquivalence.
std::vector<AtomSet> equivalence_partition(const Relation& r);

/// Smallest transitive relation containing R, the union of R^n for n >= 1.
Relation preorder_closure(const Relation& r);

struct Quotient {
  /// Classes of Q, where x Q y iff x = y or both (x, y), (y, x) are in R.
  std::vector<AtomSet> classes;
  /// S on the class carrier: ([x], [y]) in S iff (x, y) in R.
  Relation order;
};

/// Throws NotPreordering.
Quotient antisymmetrize(const Relation& r);

struct Extremal {
  AtomSet minima;
  AtomSet maxima;
  AtomSet weak_minima;
  AtomSet weak_maxima;
  AtomSet upper_bounds;
  AtomSet lower_bounds;
  AtomSet suprema;
  AtomSet infima;
};

/// Every field computed from its definition; bounds exclude the candidate
/// itself from the quantified set.
Extremal extremal(const Relation& r, const AtomSet& a);

struct LubCheck {
  /// Every nonempty subset with an upper bound has a supremum.
  bool lub = false;
  /// Every nonempty subset with a lower bound has an infimum.
  bool glb = false;
};

/// Both directions by subset enumeration (SizeLimit above 20 atoms);
/// they agree for every pre-ordering. Throws NotPreordering.
LubCheck lub_property_check(const Relation& r);

struct OrderVariants {
  Relation lt;
  Relation le;
};

/// lt = R \ Delta, le = R u Delta. Throws NotOrdering.
OrderVariants order_variants(const Relation& r);

/// A total function between carriers given as a table.
class FiniteMap {
 public:
  FiniteMap() = default;
  /// Throws NonTotalMap if some domain atom is missing or maps outside the codomain.
  FiniteMap(Carrier domain, Carrier codomain, const std::map<std::string, std::string>& table);
  FiniteMap(Carrier domain, Carrier codomain, std::vector<std::size_t> images);
  static FiniteMap identity(const Carrier& carrier);

  const Carrier& domain() const noexcept { return domain_; }
  const Carrier& codomain() const noexcept { return codomain_; }
  std::size_t operator()(std::size_t x) const { return images_[x]; }
  bool injective() const;

 private:
  Carrier domain_;
  Carrier codomain_;
  std::vector<std::size_t> images_;
};

/// R_f = {(x, z) : (f(x), f(z)) in R}. Requires R on f's codomain.
Relation pullback(const Relation& r, const FiniteMap& f);

struct Independence {
  bool upwards = false;
  bool downwards = false;
  bool independent() const { return upwards && downwards; }
};

/// Independence of a nonempty system of pre-orderings on one carrier.
/// Throws NotPreordering, CarrierMismatch, EmptyList.
Independence check_independence(std::span<const Relation> system);

struct OrderType {
  Nat n;
  /// rank[x] = position of atom x in the well-ordering.
  std::vector<std::size_t> rank;
};

/// Throws NotWellOrdering.
OrderType order_type_finite(const Relation& r);

/// First content line `carrier: a b c`, then one `x y` pair per line.
/// `#` starts a comment; blank lines are skipped. ParseError carries the
/// line number; UnknownAtom names the offending atom.
Relation parse_relation(std::string_view text);

}  // namespace tower
