#include "tower/relation.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <sstream>
#include <stdexcept>

namespace tower {

namespace {

void require_square(const Relation& r, const char* op) {
  if (!r.is_square()) throw Error(Errc::CarrierMismatch, std::string(op) + " needs a relation on a single carrier");
}

void require_same(const Relation& a, const Relation& b, const char* op) {
  if (!(a.source() == b.source()) || !(a.target() == b.target())) {
    throw Error(Errc::CarrierMismatch, std::string(op) + " of relations on different carriers");
  }
}

void require_on(const AtomSet& a, const Carrier& c, const char* op) {
  if (!(a.carrier() == c)) throw Error(Errc::CarrierMismatch, std::string(op) + ": subset of another carrier");
}

using Mask = std::uint64_t;

// out[x] = {y : (x, y) in R}, in[x] = {y : (y, x) in R}; carriers of at most 64 atoms.
struct Masks {
  std::vector<Mask> out;
  std::vector<Mask> in;
};

Masks masks_of(const Relation& r) {
  const std::size_t n = r.source().size();
  Masks m{std::vector<Mask>(n, 0), std::vector<Mask>(n, 0)};
  for (auto [x, y] : r.pairs()) {
    m.out[x] |= Mask{1} << y;
    m.in[y] |= Mask{1} << x;
  }
  return m;
}

bool subset_has_minimum(const Masks& m, Mask a) {
  for (Mask rest = a; rest != 0; rest &= rest - 1) {
    const auto x = static_cast<std::size_t>(std::countr_zero(rest));
    const Mask others = a & ~(Mask{1} << x);
    if ((others & ~m.out[x]) == 0) return true;
  }
  return false;
}

}  // namespace

// ---- Carrier --------------------------------------------------------------

Carrier::Carrier() : Carrier(std::vector<std::string>{}) {}

Carrier::Carrier(std::vector<std::string> atoms) {
  auto index = std::make_shared<std::map<std::string, std::size_t, std::less<>>>();
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (!index->emplace(atoms[i], i).second) throw Error(Errc::ParseError, "duplicate atom '" + atoms[i] + "'");
  }
  atoms_ = std::make_shared<const std::vector<std::string>>(std::move(atoms));
  index_ = std::move(index);
}

Carrier Carrier::numbered(std::size_t n, std::string_view prefix) {
  std::vector<std::string> atoms;
  atoms.reserve(n);
  for (std::size_t i = 0; i < n; ++i) atoms.push_back(std::string(prefix) + std::to_string(i));
  return Carrier(std::move(atoms));
}

std::optional<std::size_t> Carrier::find(std::string_view name) const {
  auto it = index_->find(name);
  if (it == index_->end()) return std::nullopt;
  return it->second;
}

std::size_t Carrier::index_of(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw Error(Errc::UnknownAtom, "'" + std::string(name) + "' is not in the carrier");
}

// ---- AtomSet --------------------------------------------------------------

AtomSet AtomSet::all(const Carrier& carrier) {
  AtomSet s(carrier);
  std::fill(s.bits_.begin(), s.bits_.end(), true);
  return s;
}

AtomSet AtomSet::of(const Carrier& carrier, const std::vector<std::string>& names) {
  AtomSet s(carrier);
  for (const auto& n : names) s.insert(carrier.index_of(n));
  return s;
}

AtomSet AtomSet::from_mask(const Carrier& carrier, std::uint64_t mask) {
  AtomSet s(carrier);
  for (std::size_t i = 0; i < carrier.size() && i < 64; ++i) {
    if ((mask >> i) & 1U) s.insert(i);
  }
  return s;
}

std::size_t AtomSet::size() const { return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), true)); }

std::vector<std::size_t> AtomSet::indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i]) out.push_back(i);
  }
  return out;
}

std::vector<std::string> AtomSet::names() const {
  std::vector<std::string> out;
  for (std::size_t i : indices()) out.push_back(carrier_.atom(i));
  return out;
}

std::string AtomSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (const auto& n : names()) {
    if (!first) out += ", ";
    out += n;
    first = false;
  }
  return out + "}";
}

// ---- Relation -------------------------------------------------------------

Relation::Relation(Carrier source, Carrier target)
    : source_(std::move(source)), target_(std::move(target)), bits_(source_.size() * target_.size(), false) {}

Relation Relation::from_pairs(const Carrier& source, const Carrier& target,
                              const std::vector<std::pair<std::string, std::string>>& pairs) {
  Relation r(source, target);
  for (const auto& [x, y] : pairs) r.insert(x, y);
  return r;
}

Relation Relation::diagonal(const Carrier& carrier) {
  Relation r(carrier);
  for (std::size_t i = 0; i < carrier.size(); ++i) r.set(i, i);
  return r;
}

Relation Relation::full(const Carrier& source, const Carrier& target) {
  Relation r(source, target);
  std::fill(r.bits_.begin(), r.bits_.end(), true);
  return r;
}

std::size_t Relation::count() const { return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), true)); }

std::vector<std::pair<std::size_t, std::size_t>> Relation::pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t x = 0; x < source_.size(); ++x) {
    for (std::size_t y = 0; y < target_.size(); ++y) {
      if (has(x, y)) out.emplace_back(x, y);
    }
  }
  return out;
}

std::string Relation::to_string() const {
  std::string out = "{";
  bool first = true;
  for (auto [x, y] : pairs()) {
    if (!first) out += ", ";
    out += "(" + source_.atom(x) + ", " + target_.atom(y) + ")";
    first = false;
  }
  return out + "}";
}

bool is_subset(const Relation& a, const Relation& b) {
  require_same(a, b, "inclusion");
  for (auto [x, y] : a.pairs()) {
    if (!b.has(x, y)) return false;
  }
  return true;
}

Relation set_union(const Relation& a, const Relation& b) {
  require_same(a, b, "union");
  Relation r = a;
  for (auto [x, y] : b.pairs()) r.set(x, y);
  return r;
}

Relation set_intersection(const Relation& a, const Relation& b) {
  require_same(a, b, "intersection");
  Relation r(a.source(), a.target());
  for (auto [x, y] : a.pairs()) r.set(x, y, b.has(x, y));
  return r;
}

Relation set_difference(const Relation& a, const Relation& b) {
  require_same(a, b, "difference");
  Relation r(a.source(), a.target());
  for (auto [x, y] : a.pairs()) r.set(x, y, !b.has(x, y));
  return r;
}

Relation compose(const Relation& v, const Relation& u) {
  if (!(u.target() == v.source())) throw Error(Errc::CarrierMismatch, "compose: target of U differs from source of V");
  Relation r(u.source(), v.target());
  const std::size_t mid = u.target().size();
  for (std::size_t x = 0; x < u.source().size(); ++x) {
    for (std::size_t y = 0; y < mid; ++y) {
      if (!u.has(x, y)) continue;
      for (std::size_t z = 0; z < v.target().size(); ++z) {
        if (v.has(y, z)) r.set(x, z);
      }
    }
  }
  return r;
}

Relation inverse(const Relation& r) {
  Relation out(r.target(), r.source());
  for (auto [x, y] : r.pairs()) out.set(y, x);
  return out;
}

Relation restrict(const Relation& r, const AtomSet& a) {
  require_square(r, "restrict");
  require_on(a, r.source(), "restrict");
  const auto idx = a.indices();
  Carrier sub(a.names());
  Relation out(sub);
  for (std::size_t i = 0; i < idx.size(); ++i) {
    for (std::size_t j = 0; j < idx.size(); ++j) out.set(i, j, r.has(idx[i], idx[j]));
  }
  return out;
}

Relation power(const Relation& r, const Nat& m) {
  require_square(r, "power");
  if (m.is_zero()) throw Error(Errc::BadExponent, "power needs m >= 1");
  // Powers of a finite relation are eventually periodic; stop once a power repeats.
  std::vector<Relation> seen{r};
  const std::uint64_t target = m > Nat(std::uint64_t{1} << 62) ? 0 : m.to_u64();
  while (true) {
    if (target != 0 && seen.size() == target) return seen.back();
    Relation next = compose(seen.back(), r);
    auto it = std::find(seen.begin(), seen.end(), next);
    if (it != seen.end()) {
      // seen[k] = R^(k+1); the cycle runs from position `start` with length `len`.
      const auto start = static_cast<std::size_t>(it - seen.begin());
      const std::size_t len = seen.size() - start;
      Nat::Int pos = m.value() - 1 - start;
      return seen[start + static_cast<std::size_t>(pos % len)];
    }
    seen.push_back(std::move(next));
  }
}

AtomSet image(const Relation& r, const AtomSet& a) {
  require_on(a, r.source(), "image");
  AtomSet out(r.target());
  for (auto [x, y] : r.pairs()) {
    if (a.contains(x)) out.insert(y);
  }
  return out;
}

AtomSet point_image(const Relation& r, std::size_t x) {
  AtomSet out(r.target());
  for (std::size_t y = 0; y < r.target().size(); ++y) {
    if (r.has(x, y)) out.insert(y);
  }
  return out;
}

AtomSet co_image(const Relation& r, const AtomSet& a) {
  require_on(a, r.source(), "co_image");
  AtomSet out = AtomSet::all(r.target());
  for (std::size_t x : a.indices()) {
    for (std::size_t y = 0; y < r.target().size(); ++y) {
      if (!r.has(x, y)) out.erase(y);
    }
  }
  return out;
}

bool has_minimum_property(const Relation& r, bool* exact, std::uint64_t seed) {
  require_square(r, "minimum property");
  const std::size_t n = r.source().size();
  if (exact) *exact = true;
  if (n == 0) return true;
  if (n <= kExhaustiveMinimumAtoms) {
    const Masks m = masks_of(r);
    for (Mask a = 1; a < (Mask{1} << n); ++a) {
      if (!subset_has_minimum(m, a)) return false;
    }
    return true;
  }
  bool connective = true;
  bool transitive = true;
  for (std::size_t x = 0; x < n && connective; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (x != y && !r.has(x, y) && !r.has(y, x)) {
        connective = false;
        break;
      }
    }
  }
  if (!connective) return false;  // a two-element subset without a minimum
  for (std::size_t x = 0; x < n && transitive; ++x) {
    for (std::size_t y = 0; y < n && transitive; ++y) {
      if (!r.has(x, y)) continue;
      for (std::size_t z = 0; z < n; ++z) {
        if (r.has(y, z) && !r.has(x, z)) {
          transitive = false;
          break;
        }
      }
    }
  }
  if (transitive) return true;  // finite subsets of a connective pre-ordering have minima
  // A connective, non-transitive relation that is antisymmetric always fails
  // on the three atoms witnessing non-transitivity.
  bool antisymmetric = true;
  for (std::size_t x = 0; x < n && antisymmetric; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (x != y && r.has(x, y) && r.has(y, x)) {
        antisymmetric = false;
        break;
      }
    }
  }
  if (antisymmetric) return false;
  if (exact) *exact = false;
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(0.5);
  for (std::size_t s = 0; s < kMinimumSamples; ++s) {
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < n; ++i) {
      if (coin(rng)) members.push_back(i);
    }
    if (members.empty()) continue;
    bool found = false;
    for (std::size_t x : members) {
      found = std::all_of(members.begin(), members.end(), [&](std::size_t y) { return y == x || r.has(x, y); });
      if (found) break;
    }
    if (!found) return false;
  }
  return true;
}

PropertyReport classify(const Relation& r) {
  require_square(r, "classify");
  const std::size_t n = r.source().size();
  PropertyReport p;
  p.reflexive = true;
  p.antireflexive = true;
  p.symmetric = true;
  p.antisymmetric = true;
  p.transitive = true;
  p.connective = true;
  p.directive = true;
  for (std::size_t x = 0; x < n; ++x) {
    if (r.has(x, x)) {
      p.antireflexive = false;
    } else {
      p.reflexive = false;
    }
    for (std::size_t y = 0; y < n; ++y) {
      const bool xy = r.has(x, y);
      const bool yx = r.has(y, x);
      if (xy && !yx) p.symmetric = false;
      if (x != y && xy && yx) p.antisymmetric = false;
      if (x != y && !xy && !yx) p.connective = false;
      bool common = false;
      for (std::size_t z = 0; z < n && !common; ++z) common = r.has(x, z) && r.has(y, z);
      if (!common) p.directive = false;
      if (xy) {
        for (std::size_t z = 0; z < n; ++z) {
          if (r.has(y, z) && !r.has(x, z)) p.transitive = false;
        }
      }
    }
  }
  p.minimum_property = has_minimum_property(r, &p.minimum_property_exact);

  p.pre_ordering = p.transitive;
  p.ordering = p.transitive && p.antisymmetric;
  p.ordering_lt = p.antireflexive && p.transitive;
  p.ordering_le = p.reflexive && p.antisymmetric && p.transitive;
  p.direction = p.transitive && p.reflexive && p.directive;
  p.equivalence = p.reflexive && p.symmetric && p.transitive;
  p.total_ordering = p.ordering && p.connective;
  p.well_ordering = p.ordering && p.minimum_property;
  return p;
}

std::vector<AtomSet> equivalence_partition(const Relation& r) {
  if (!classify(r).equivalence) throw Error(Errc::NotEquivalence, "relation is not an equivalence");
  std::vector<AtomSet> blocks;
  AtomSet covered(r.source());
  for (std::size_t x = 0; x < r.source().size(); ++x) {
    if (covered.contains(x)) continue;
    AtomSet block = point_image(r, x);
    for (std::size_t y : block.indices()) covered.insert(y);
    blocks.push_back(std::move(block));
  }
  return blocks;
}

Relation preorder_closure(const Relation& r) {
  require_square(r, "preorder_closure");
  Relation s = r;
  const std::size_t n = r.source().size();
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!s.has(i, k)) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (s.has(k, j)) s.set(i, j);
      }
    }
  }
  return s;
}

Quotient antisymmetrize(const Relation& r) {
  require_square(r, "antisymmetrize");
  if (!classify(r).pre_ordering) throw Error(Errc::NotPreordering, "antisymmetrize needs a transitive relation");
  const std::size_t n = r.source().size();
  Relation q = Relation::diagonal(r.source());
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (r.has(x, y) && r.has(y, x)) q.set(x, y);
    }
  }
  Quotient out;
  out.classes = equivalence_partition(q);
  std::vector<std::string> names;
  std::vector<std::size_t> class_of(n, 0);
  for (std::size_t c = 0; c < out.classes.size(); ++c) {
    names.push_back(out.classes[c].to_string());
    for (std::size_t x : out.classes[c].indices()) class_of[x] = c;
  }
  out.order = Relation(Carrier(std::move(names)));
  for (auto [x, y] : r.pairs()) out.order.set(class_of[x], class_of[y]);
  return out;
}

Extremal extremal(const Relation& r, const AtomSet& a) {
  require_square(r, "extremal");
  require_on(a, r.source(), "extremal");
  const Carrier& c = r.source();
  const auto members = a.indices();
  auto is_min = [&](std::size_t x, const std::vector<std::size_t>& set) {
    return std::all_of(set.begin(), set.end(), [&](std::size_t y) { return y == x || r.has(x, y); });
  };
  auto is_max = [&](std::size_t x, const std::vector<std::size_t>& set) {
    return std::all_of(set.begin(), set.end(), [&](std::size_t y) { return y == x || r.has(y, x); });
  };
  Extremal e{AtomSet(c), AtomSet(c), AtomSet(c), AtomSet(c), AtomSet(c), AtomSet(c), AtomSet(c), AtomSet(c)};
  for (std::size_t x : members) {
    if (is_min(x, members)) e.minima.insert(x);
    if (is_max(x, members)) e.maxima.insert(x);
    if (std::all_of(members.begin(), members.end(), [&](std::size_t y) { return !r.has(y, x) || r.has(x, y); })) {
      e.weak_minima.insert(x);
    }
    if (std::all_of(members.begin(), members.end(), [&](std::size_t y) { return !r.has(x, y) || r.has(y, x); })) {
      e.weak_maxima.insert(x);
    }
  }
  for (std::size_t x = 0; x < c.size(); ++x) {
    if (is_max(x, members)) e.upper_bounds.insert(x);
    if (is_min(x, members)) e.lower_bounds.insert(x);
  }
  const auto ub = e.upper_bounds.indices();
  const auto lb = e.lower_bounds.indices();
  for (std::size_t x : ub) {
    if (is_min(x, ub)) e.suprema.insert(x);
  }
  for (std::size_t x : lb) {
    if (is_max(x, lb)) e.infima.insert(x);
  }
  return e;
}

LubCheck lub_property_check(const Relation& r) {
  require_square(r, "lub_property_check");
  if (!classify(r).pre_ordering) throw Error(Errc::NotPreordering, "lub_property_check needs a transitive relation");
  const std::size_t n = r.source().size();
  if (n > 20) throw Error(Errc::SizeLimit, "lub_property_check enumerates subsets of at most 20 atoms");
  const Masks m = masks_of(r);
  const Mask all = n == 0 ? 0 : (Mask{1} << n) - 1;
  LubCheck out{true, true};
  for (Mask a = 1; a <= all && (out.lub || out.glb); ++a) {
    Mask ub = 0;
    Mask lb = 0;
    for (std::size_t x = 0; x < n; ++x) {
      const Mask others = a & ~(Mask{1} << x);
      if ((others & ~m.in[x]) == 0) ub |= Mask{1} << x;
      if ((others & ~m.out[x]) == 0) lb |= Mask{1} << x;
    }
    if (ub != 0 && out.lub) {
      bool sup = false;
      for (Mask rest = ub; rest != 0 && !sup; rest &= rest - 1) {
        const auto x = static_cast<std::size_t>(std::countr_zero(rest));
        sup = ((ub & ~(Mask{1} << x)) & ~m.out[x]) == 0;
      }
      out.lub = sup;
    }
    if (lb != 0 && out.glb) {
      bool inf = false;
      for (Mask rest = lb; rest != 0 && !inf; rest &= rest - 1) {
        const auto x = static_cast<std::size_t>(std::countr_zero(rest));
        inf = ((lb & ~(Mask{1} << x)) & ~m.in[x]) == 0;
      }
      out.glb = inf;
    }
  }
  if (out.lub != out.glb) throw std::logic_error("least upper bound and greatest lower bound properties disagree");
  return out;
}

OrderVariants order_variants(const Relation& r) {
  require_square(r, "order_variants");
  if (!classify(r).ordering) throw Error(Errc::NotOrdering, "order_variants needs an ordering");
  const Relation d = Relation::diagonal(r.source());
  return {set_difference(r, d), set_union(r, d)};
}

FiniteMap::FiniteMap(Carrier domain, Carrier codomain, const std::map<std::string, std::string>& table)
    : domain_(std::move(domain)), codomain_(std::move(codomain)) {
  images_.reserve(domain_.size());
  for (const auto& x : domain_.atoms()) {
    auto it = table.find(x);
    if (it == table.end()) throw Error(Errc::NonTotalMap, "no image for '" + x + "'");
    auto y = codomain_.find(it->second);
    if (!y) throw Error(Errc::NonTotalMap, "image '" + it->second + "' of '" + x + "' is outside the codomain");
    images_.push_back(*y);
  }
}

FiniteMap::FiniteMap(Carrier domain, Carrier codomain, std::vector<std::size_t> images)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), images_(std::move(images)) {
  if (images_.size() != domain_.size()) throw Error(Errc::NonTotalMap, "image table size differs from the domain");
  for (std::size_t y : images_) {
    if (y >= codomain_.size()) throw Error(Errc::NonTotalMap, "image index outside the codomain");
  }
}

FiniteMap FiniteMap::identity(const Carrier& carrier) {
  std::vector<std::size_t> images(carrier.size());
  for (std::size_t i = 0; i < images.size(); ++i) images[i] = i;
  return FiniteMap(carrier, carrier, std::move(images));
}

bool FiniteMap::injective() const {
  std::vector<bool> hit(codomain_.size(), false);
  for (std::size_t y : images_) {
    if (hit[y]) return false;
    hit[y] = true;
  }
  return true;
}

Relation pullback(const Relation& r, const FiniteMap& f) {
  require_square(r, "pullback");
  if (!(r.source() == f.codomain())) throw Error(Errc::CarrierMismatch, "pullback: map codomain differs from the carrier");
  Relation out(f.domain());
  for (std::size_t x = 0; x < f.domain().size(); ++x) {
    for (std::size_t z = 0; z < f.domain().size(); ++z) out.set(x, z, r.has(f(x), f(z)));
  }
  return out;
}

Independence check_independence(std::span<const Relation> system) {
  if (system.empty()) throw Error(Errc::EmptyList, "empty system of pre-orderings");
  for (const auto& r : system) {
    require_square(r, "check_independence");
    if (!(r.source() == system.front().source())) throw Error(Errc::CarrierMismatch, "system on different carriers");
    if (!classify(r).pre_ordering) throw Error(Errc::NotPreordering, "system member is not transitive");
  }
  const std::size_t n = system.front().source().size();
  Relation s = system.front();
  for (const auto& r : system.subspan(1)) s = set_intersection(s, r);

  Independence out{true, true};
  for (const auto& ri : system) {
    for (std::size_t t = 0; t < n; ++t) {
      for (std::size_t x = 0; x < n; ++x) {
        if (ri.has(x, t)) {
          bool found = false;
          for (std::size_t y = 0; y < n && !found; ++y) found = s.has(x, y) && ri.has(y, t);
          if (!found) out.upwards = false;
        }
        if (ri.has(t, x)) {
          bool found = false;
          for (std::size_t y = 0; y < n && !found; ++y) found = s.has(y, x) && ri.has(t, y);
          if (!found) out.downwards = false;
        }
      }
    }
  }

  // Segment identities: ]-inf, t[_i = U{]-inf, x[ : x <_i t}, and dually.
  for (const auto& ri : system) {
    for (std::size_t t = 0; t < n; ++t) {
      for (std::size_t z = 0; z < n; ++z) {
        bool below = false;
        bool above = false;
        for (std::size_t x = 0; x < n; ++x) {
          below = below || (ri.has(x, t) && s.has(z, x));
          above = above || (ri.has(t, x) && s.has(x, z));
        }
        if (out.upwards && below != ri.has(z, t)) throw std::logic_error("upward segment identity fails");
        if (out.downwards && above != ri.has(t, z)) throw std::logic_error("downward segment identity fails");
      }
    }
  }
  return out;
}

OrderType order_type_finite(const Relation& r) {
  require_square(r, "order_type_finite");
  if (!classify(r).well_ordering) throw Error(Errc::NotWellOrdering, "order_type_finite needs a well-ordering");
  const std::size_t n = r.source().size();
  OrderType out{Nat(static_cast<std::uint64_t>(n)), std::vector<std::size_t>(n, 0)};
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (y != x && r.has(y, x)) ++out.rank[x];
    }
  }
  return out;
}

Relation parse_relation(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  std::optional<Relation> rel;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream tokens(line);
    std::vector<std::string> words;
    for (std::string w; tokens >> w;) words.push_back(w);
    if (words.empty()) continue;
    const std::string where = "line " + std::to_string(line_no) + ": ";
    if (!rel) {
      std::string head = words.front();
      std::vector<std::string> atoms(words.begin() + 1, words.end());
      if (head.rfind("carrier:", 0) == 0 && head.size() > 8) {
        atoms.insert(atoms.begin(), head.substr(8));
        head = "carrier:";
      }
      if (head != "carrier:") throw Error(Errc::ParseError, where + "expected 'carrier: <atoms>'");
      try {
        rel = Relation(Carrier(std::move(atoms)));
      } catch (const Error& e) {
        throw Error(Errc::ParseError, where + e.what());
      }
      continue;
    }
    if (words.size() != 2) throw Error(Errc::ParseError, where + "expected a pair 'x y'");
    for (const auto& w : words) {
      if (!rel->source().find(w)) throw Error(Errc::UnknownAtom, where + "'" + w + "' is not in the carrier");
    }
    rel->insert(words[0], words[1]);
  }
  if (!rel) throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": missing 'carrier:' line");
  return *rel;
}

}  // namespace tower
