#include "tower/hfset.hpp"

#include <algorithm>
#include <unordered_set>

namespace tower {

struct HFSet::Node {
  std::vector<HFSet> elements;
  std::size_t hash = 0x9e3779b97f4a7c15ULL;
  unsigned rank = 0;
};

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

HFSet::HFSet() {
  static const std::shared_ptr<const Node> empty = std::make_shared<const Node>();
  node_ = empty;
}

HFSet HFSet::from_sorted(std::vector<HFSet> elements) {
  if (elements.empty()) return HFSet();
  auto node = std::make_shared<Node>();
  std::size_t h = elements.size();
  unsigned r = 0;
  for (const auto& e : elements) {
    h = mix(h, e.hash());
    r = std::max(r, e.rank() + 1);
  }
  node->elements = std::move(elements);
  node->hash = h;
  node->rank = r;
  return HFSet(std::shared_ptr<const Node>(std::move(node)));
}

HFSet HFSet::of(std::vector<HFSet> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  return from_sorted(std::move(elements));
}

std::span<const HFSet> HFSet::elements() const noexcept { return node_->elements; }
unsigned HFSet::rank() const noexcept { return node_->rank; }
std::size_t HFSet::hash() const noexcept { return node_->hash; }

bool HFSet::contains(const HFSet& x) const {
  auto els = elements();
  return std::binary_search(els.begin(), els.end(), x);
}

bool operator==(const HFSet& a, const HFSet& b) noexcept {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash() || a.size() != b.size()) return false;
  auto ea = a.elements();
  auto eb = b.elements();
  return std::equal(ea.begin(), ea.end(), eb.begin());
}

std::strong_ordering operator<=>(const HFSet& a, const HFSet& b) noexcept {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  // Codes are sums of distinct powers of two: the highest differing
  // exponent decides, so scan both element lists from the top.
  auto ea = a.elements();
  auto eb = b.elements();
  std::size_t i = ea.size();
  std::size_t j = eb.size();
  while (i > 0 && j > 0) {
    auto c = ea[i - 1] <=> eb[j - 1];
    if (c != 0) return c;
    --i;
    --j;
  }
  if (i > 0) return std::strong_ordering::greater;
  if (j > 0) return std::strong_ordering::less;
  return std::strong_ordering::equal;
}

std::string HFSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (const auto& e : elements()) {
    if (!first) out += ',';
    first = false;
    out += e.to_string();
  }
  out += '}';
  return out;
}

namespace {

class HFParser {
 public:
  HFParser(std::string_view text, const HFLimits& limits) : text_(text), limits_(limits) {}

  HFSet parse() {
    HFSet s = parse_set(0);
    skip_ws();
    if (pos_ != text_.size()) fail("trailing input");
    return s;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' || text_[pos_] == '\r')) ++pos_;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(Errc::SyntaxError, msg + " at position " + std::to_string(pos_));
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  HFSet parse_set(unsigned depth) {
    if (depth >= limits_.max_depth + 1) throw Error(Errc::SizeLimit, "nesting deeper than " + std::to_string(limits_.max_depth));
    expect('{');
    std::vector<HFSet> elems;
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '}') {
      ++pos_;
      return HFSet();
    }
    for (;;) {
      elems.push_back(parse_set(depth + 1));
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == ',') {
        ++pos_;
        continue;
      }
      expect('}');
      break;
    }
    return HFSet::of(std::move(elems));
  }

  std::string_view text_;
  const HFLimits& limits_;
  std::size_t pos_ = 0;
};

}  // namespace

HFSet HFSet::parse(std::string_view text, const HFLimits& limits) { return HFParser(text, limits).parse(); }

HFSet singleton(const HFSet& x) { return HFSet::of({x}); }

HFSet unordered_pair(const HFSet& x, const HFSet& y) { return HFSet::of({x, y}); }

HFSet set_union(const HFSet& a, const HFSet& b) {
  std::vector<HFSet> out;
  auto ea = a.elements();
  auto eb = b.elements();
  std::set_union(ea.begin(), ea.end(), eb.begin(), eb.end(), std::back_inserter(out));
  return HFSet::from_sorted(std::move(out));
}

HFSet set_intersection(const HFSet& a, const HFSet& b) {
  std::vector<HFSet> out;
  auto ea = a.elements();
  auto eb = b.elements();
  std::set_intersection(ea.begin(), ea.end(), eb.begin(), eb.end(), std::back_inserter(out));
  return HFSet::from_sorted(std::move(out));
}

HFSet set_difference(const HFSet& a, const HFSet& b) {
  std::vector<HFSet> out;
  auto ea = a.elements();
  auto eb = b.elements();
  std::set_difference(ea.begin(), ea.end(), eb.begin(), eb.end(), std::back_inserter(out));
  return HFSet::from_sorted(std::move(out));
}

bool is_subset(const HFSet& a, const HFSet& b) {
  auto ea = a.elements();
  auto eb = b.elements();
  return std::includes(eb.begin(), eb.end(), ea.begin(), ea.end());
}

HFSet big_union(const HFSet& family) {
  if (family.empty()) throw Error(Errc::EmptyFamily, "union of the empty family");
  HFSet acc;
  for (const auto& x : family.elements()) acc = set_union(acc, x);
  return acc;
}

HFSet big_intersection(const HFSet& family) {
  if (family.empty()) throw Error(Errc::EmptyFamily, "intersection of the empty family");
  auto els = family.elements();
  HFSet acc = els.front();
  for (std::size_t i = 1; i < els.size(); ++i) acc = set_intersection(acc, els[i]);
  return acc;
}

HFSet power_set(const HFSet& s, const HFLimits& limits) {
  if (s.size() > limits.max_power_base) {
    throw Error(Errc::SizeLimit, "power set of a " + std::to_string(s.size()) + "-element set");
  }
  if (s.rank() + 1 > limits.max_depth) throw Error(Errc::SizeLimit, "power set exceeds depth bound");
  auto els = s.elements();
  const std::size_t n = els.size();
  std::vector<HFSet> subsets;
  subsets.reserve(std::size_t{1} << n);
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<HFSet> sub;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (std::size_t{1} << i)) sub.push_back(els[i]);
    }
    subsets.push_back(HFSet::of(std::move(sub)));
  }
  return HFSet::of(std::move(subsets));
}

HFSet kuratowski_pair(const HFSet& x, const HFSet& y) { return HFSet::of({unordered_pair(x, y), singleton(x)}); }

std::pair<HFSet, HFSet> unpair(const HFSet& p) {
  // Shape check first: {{x,y},{x}} has one or two members, one of them a
  // singleton contained in the other.
  auto els = p.elements();
  bool shaped = false;
  if (els.size() == 1) {
    shaped = els[0].size() == 1;
  } else if (els.size() == 2) {
    const HFSet& a = els[0];
    const HFSet& b = els[1];
    shaped = (a.size() == 1 && b.size() == 2 && is_subset(a, b)) || (b.size() == 1 && a.size() == 2 && is_subset(b, a));
  }
  if (!shaped) throw Error(Errc::NotAPair, p.to_string());

  HFSet left = big_union(big_intersection(p));
  HFSet rest = set_difference(big_union(p), singleton(left));
  HFSet right = rest.empty() ? left : big_union(rest);
  return {left, right};
}

HFSet cartesian_product(const HFSet& x, const HFSet& y, const HFLimits& limits) {
  if (x.size() * y.size() > limits.max_product) {
    throw Error(Errc::SizeLimit, "product of sizes " + std::to_string(x.size()) + " and " + std::to_string(y.size()));
  }
  if (!x.empty() && !y.empty() && std::max(x.rank(), y.rank()) + 2 > limits.max_depth) {
    throw Error(Errc::SizeLimit, "product exceeds depth bound");
  }
  std::vector<HFSet> pairs;
  pairs.reserve(x.size() * y.size());
  for (const auto& a : x.elements()) {
    for (const auto& b : y.elements()) pairs.push_back(kuratowski_pair(a, b));
  }
  return HFSet::of(std::move(pairs));
}

HFSet successor(const HFSet& x) { return set_union(x, singleton(x)); }

HFSet nat_to_hf(const Nat& n, const HFLimits& limits) {
  if (n > Nat(limits.max_depth)) {
    throw Error(Errc::SizeLimit, "natural " + n.to_string() + " exceeds depth bound " + std::to_string(limits.max_depth));
  }
  HFSet cur;
  for (std::uint64_t i = 0, k = n.to_u64(); i < k; ++i) cur = successor(cur);
  return cur;
}

Nat hf_to_nat(const HFSet& x) {
  // In code order the members of a von Neumann natural are exactly 0, 1, ..., n-1.
  HFSet expected;
  for (const auto& e : x.elements()) {
    if (e != expected) throw Error(Errc::NotANatural, x.to_string());
    expected = successor(expected);
  }
  return Nat(x.size());
}

Nat ackermann_code(const HFSet& x, const HFLimits& limits) {
  Nat::Int code = 0;
  for (const auto& e : x.elements()) {
    Nat c = ackermann_code(e, limits);
    if (c >= Nat(limits.max_code_bits)) throw Error(Errc::SizeLimit, "Ackermann code wider than " + std::to_string(limits.max_code_bits) + " bits");
    bit_set(code, static_cast<unsigned>(c.to_u64()));
  }
  return Nat::from_int(std::move(code));
}

HFSet from_ackermann_code(const Nat& code) {
  std::vector<HFSet> elems;
  const std::size_t bits = code.bit_length();
  for (std::size_t i = 0; i < bits; ++i) {
    if (code.bit(i)) elems.push_back(from_ackermann_code(Nat(i)));
  }
  // Bit positions ascend, and so do their codes.
  return HFSet::from_sorted(std::move(elems));
}

bool is_full(const HFSet& x) {
  for (const auto& e : x.elements()) {
    if (!is_subset(e, x)) return false;
  }
  return true;
}

bool is_ordinal(const HFSet& x) {
  if (x.empty()) return true;
  if (!is_full(x)) return false;
  // Membership is irreflexive and antisymmetric on HF sets, so the minimum
  // property on a finite carrier reduces to its 2- and 3-element subsets
  // (connectivity plus the triangle that forces transitivity).
  auto els = x.elements();
  const std::size_t n = els.size();
  auto in = [&](std::size_t i, std::size_t j) { return els[j].contains(els[i]); };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!in(i, j) && !in(j, i)) return false;
      for (std::size_t k = j + 1; k < n; ++k) {
        bool has_min = (in(i, j) && in(i, k)) || (in(j, i) && in(j, k)) || (in(k, i) && in(k, j));
        if (!has_min) return false;
      }
    }
  }
  return true;
}

std::vector<HFSet> transitive_closure(const HFSet& x) {
  std::unordered_set<HFSet> seen;
  std::vector<HFSet> order;
  std::vector<HFSet> stack(x.elements().begin(), x.elements().end());
  while (!stack.empty()) {
    HFSet cur = stack.back();
    stack.pop_back();
    if (!seen.insert(cur).second) continue;
    order.push_back(cur);
    for (const auto& e : cur.elements()) stack.push_back(e);
  }
  std::sort(order.begin(), order.end());
  return order;
}

bool occurs_in_itself(const HFSet& x) {
  for (const auto& y : transitive_closure(x)) {
    if (y == x) return true;
  }
  return false;
}

}  // namespace tower
