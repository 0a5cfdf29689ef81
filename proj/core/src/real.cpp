#include "tower/real.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace tower {

std::string Interval::to_string(unsigned precision) const {
  return "[" + lo.to_string() + ", " + hi.to_string() + "]@" + std::to_string(precision);
}

std::string Interval::to_approx_string(unsigned precision) const {
  Dyadic mid = scale_down(lo + hi, 1);
  return "≈ " + mid.to_string() + " ± 2^-" + std::to_string(precision);
}

std::string_view approx_name(Approx a) noexcept {
  switch (a) {
    case Approx::Less: return "less";
    case Approx::Greater: return "greater";
    case Approx::Indistinguishable: return "indistinguishable";
  }
  return "indistinguishable";
}

struct CutReal::Node {
  Oracle oracle;
  std::optional<Dyadic> tag;
  mutable std::mutex mutex;
  mutable std::map<unsigned, Interval> cache;
};

CutReal::CutReal() : CutReal(from_dyadic(Dyadic())) {}

CutReal CutReal::from_oracle(Oracle oracle, std::optional<Dyadic> tag) {
  auto node = std::make_shared<Node>();
  node->oracle = std::move(oracle);
  node->tag = std::move(tag);
  return CutReal(std::shared_ptr<const Node>(std::move(node)));
}

Interval CutReal::approx(unsigned n) const {
  std::lock_guard lock(node_->mutex);
  auto it = node_->cache.find(n);
  if (it != node_->cache.end()) return it->second;
  Interval iv = node_->oracle(n);
  node_->cache.emplace(n, iv);
  return iv;
}

const std::optional<Dyadic>& CutReal::tag() const noexcept { return node_->tag; }

namespace {

std::optional<Dyadic> both_tags(const CutReal& x, const CutReal& y, Dyadic (*op)(const Dyadic&, const Dyadic&)) {
  if (x.tag() && y.tag()) return op(*x.tag(), *y.tag());
  return std::nullopt;
}

}  // namespace

CutReal from_dyadic(const Dyadic& d) {
  if (d.sign() == Sign::Negative) throw Error(Errc::NegativeInput, "from_dyadic(" + d.to_string() + ")");
  return CutReal::from_oracle(
      [d](unsigned n) {
        Dyadic lo = max(d - scale_down(Dyadic(1), std::uint64_t{n} + 1), Dyadic());
        return Interval{lo, d};
      },
      d);
}

CutReal add(const CutReal& x, const CutReal& y) {
  return CutReal::from_oracle(
      [x, y](unsigned n) {
        Interval a = x.approx(n + 1);
        Interval b = y.approx(n + 1);
        return Interval{a.lo + b.lo, a.hi + b.hi};
      },
      both_tags(x, y, [](const Dyadic& a, const Dyadic& b) { return a + b; }));
}

CutReal mul(const CutReal& x, const CutReal& y) {
  return CutReal::from_oracle(
      [x, y](unsigned n) {
        // hi x - lo x <= 2^-p and likewise for y give a product width of
        // at most (hi_x(0) + hi_y(0)) 2^-p.
        const auto guard = static_cast<unsigned>(bit_bound(x.approx(0).hi + y.approx(0).hi));
        Interval a = x.approx(n + guard);
        Interval b = y.approx(n + guard);
        return Interval{a.lo * b.lo, a.hi * b.hi};
      },
      both_tags(x, y, [](const Dyadic& a, const Dyadic& b) { return a * b; }));
}

CutReal pow(const CutReal& x, std::uint64_t m) {
  if (m == 0) return from_dyadic(Dyadic(1));
  if (m == 1) return x;
  std::optional<Dyadic> tag;
  if (x.tag()) tag = pow(*x.tag(), m);
  return CutReal::from_oracle(
      [x, m](unsigned n) {
        // hi^m - lo^m <= m H^(m-1) (hi - lo) with H = max(1, hi(0)).
        Dyadic h = max(x.approx(0).hi, Dyadic(1));
        const auto guard = static_cast<unsigned>(bit_bound(Dyadic(static_cast<std::int64_t>(std::min<std::uint64_t>(m, INT64_MAX))) * pow(h, m - 1)));
        Interval a = x.approx(n + guard);
        return Interval{pow(a.lo, m), pow(a.hi, m)};
      },
      tag);
}

CutReal sup_finite(std::span<const CutReal> xs) {
  if (xs.empty()) throw Error(Errc::EmptyList, "sup of an empty list");
  std::vector<CutReal> items(xs.begin(), xs.end());
  std::optional<Dyadic> tag = items.front().tag();
  for (const auto& x : items) {
    if (!x.tag() || !tag) {
      tag.reset();
      break;
    }
    tag = max(*tag, *x.tag());
  }
  return CutReal::from_oracle(
      [items = std::move(items)](unsigned n) {
        Interval r = items.front().approx(n);
        for (std::size_t i = 1; i < items.size(); ++i) {
          Interval a = items[i].approx(n);
          r.lo = max(r.lo, a.lo);
          r.hi = max(r.hi, a.hi);
        }
        return r;
      },
      tag);
}

CutReal inverse(const CutReal& x, unsigned n0) {
  const Dyadic witness = x.approx(n0).lo;
  if (witness.sign() != Sign::Positive) {
    throw Error(Errc::NotBoundedAwayFromZero, "lo(" + std::to_string(n0) + ") = " + witness.to_string());
  }
  if (x.tag()) {
    if (auto r = exact_reciprocal(*x.tag())) return from_dyadic(*r);
  }
  // 2^-c <= witness, so every later lower endpoint is at least 2^-c too.
  const auto c = static_cast<unsigned>(bit_bound(reciprocal_up(witness, 0)));
  return CutReal::from_oracle([x, n0, c](unsigned n) {
    const unsigned p = std::max(n0, n + 1 + 2 * c);
    Interval a = x.approx(p);
    return Interval{reciprocal_down(a.hi, std::uint64_t{n} + 2), reciprocal_up(a.lo, std::uint64_t{n} + 2)};
  });
}

CutReal positive_part(const CutReal& x, const CutReal& y) {
  std::optional<Dyadic> tag;
  if (x.tag() && y.tag()) tag = max(*x.tag() - *y.tag(), Dyadic());
  return CutReal::from_oracle(
      [x, y](unsigned n) {
        Interval a = x.approx(n + 1);
        Interval b = y.approx(n + 1);
        return Interval{max(a.lo - b.hi, Dyadic()), max(a.hi - b.lo, Dyadic())};
      },
      tag);
}

Approx compare_eps(const CutReal& x, const CutReal& y, unsigned n) {
  Interval a = x.approx(n);
  Interval b = y.approx(n);
  if (a.hi < b.lo) return Approx::Less;
  if (b.hi < a.lo) return Approx::Greater;
  return Approx::Indistinguishable;
}

Real Real::from_dyadic(const Dyadic& d) {
  if (d.sign() == Sign::Negative) return Real(CutReal(), tower::from_dyadic(tower::neg(d)));
  return Real(tower::from_dyadic(d));
}

Interval Real::approx(unsigned n) const {
  Interval p = pos_.approx(n + 1);
  Interval q = neg_.approx(n + 1);
  return Interval{p.lo - q.hi, p.hi - q.lo};
}

std::optional<Dyadic> Real::tag() const {
  if (pos_.tag() && neg_.tag()) return *pos_.tag() - *neg_.tag();
  return std::nullopt;
}

Real add(const Real& x, const Real& y) { return Real(x.pos() + y.pos(), x.neg() + y.neg()); }

Real mul(const Real& x, const Real& y) {
  return Real(x.pos() * y.pos() + x.neg() * y.neg(), x.pos() * y.neg() + x.neg() * y.pos());
}

Real neg(const Real& x) { return Real(x.neg(), x.pos()); }

Real sub(const Real& x, const Real& y) { return add(x, neg(y)); }

CutReal abs(const Real& x) { return positive_part(x.pos(), x.neg()) + positive_part(x.neg(), x.pos()); }

Approx compare_eps(const Real& x, const Real& y, unsigned n) {
  return compare_eps(x.pos() + y.neg(), y.pos() + x.neg(), n);
}

Real canonicalize(const Real& x) {
  return Real(positive_part(x.pos(), x.neg()), positive_part(x.neg(), x.pos()));
}

Real pow(const Real& x, std::uint64_t m) {
  Real result = Real::from_dyadic(Dyadic(1));
  Real base = x;
  while (m > 0) {
    if (m & 1) result = result * base;
    m >>= 1;
    if (m > 0) base = base * base;
  }
  return result;
}

Real sup_finite(std::span<const Real> xs) {
  if (xs.empty()) throw Error(Errc::EmptyList, "sup of an empty list");
  CutReal total_neg = xs.front().neg();
  for (std::size_t i = 1; i < xs.size(); ++i) total_neg = total_neg + xs[i].neg();
  std::vector<CutReal> terms;
  terms.reserve(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    CutReal t = xs[i].pos();
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (j != i) t = t + xs[j].neg();
    }
    terms.push_back(std::move(t));
  }
  return Real(sup_finite(terms), total_neg);
}

Real inf_finite(std::span<const Real> xs) {
  std::vector<Real> negated;
  negated.reserve(xs.size());
  for (const auto& x : xs) negated.push_back(neg(x));
  return neg(sup_finite(negated));
}

Real inverse(const Real& x, unsigned probe) {
  if (auto t = x.tag()) {
    if (auto r = exact_reciprocal(*t)) return Real::from_dyadic(*r);
  }
  Real c = canonicalize(x);
  for (unsigned n0 = 0; n0 <= probe; ++n0) {
    if (c.pos().approx(n0).lo.sign() == Sign::Positive) return Real(inverse(c.pos(), n0));
    if (c.neg().approx(n0).lo.sign() == Sign::Positive) return Real(CutReal(), inverse(c.neg(), n0));
  }
  throw Error(Errc::NotBoundedAwayFromZero, "no sign witness up to precision " + std::to_string(probe));
}

std::optional<Dyadic> dyadic_between(const Real& x, const Real& y, unsigned max_prec) {
  for (unsigned n = 0; n <= max_prec; ++n) {
    Interval a = x.approx(n);
    Interval b = y.approx(n);
    if (a.hi < b.lo) return between(a.hi, b.lo);
  }
  return std::nullopt;
}

}  // namespace tower
