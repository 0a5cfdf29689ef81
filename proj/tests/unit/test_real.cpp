#include <doctest.h>

#include <atomic>
#include <thread>

#include "helpers.hpp"
#include "tower/real.hpp"

using oracle::Rational;
using oracle::to_rational;
using tower::Approx;
using tower::CutReal;
using tower::Dyadic;
using tower::Errc;
using tower::Interval;
using tower::Real;

namespace {

Dyadic q(std::int64_t m, std::uint64_t u) { return Dyadic::from_parts(Dyadic::Int(m), u); }

CutReal cut(const Dyadic& d) { return tower::from_dyadic(d); }

bool contains(const Interval& iv, const Rational& r) { return to_rational(iv.lo) <= r && r <= to_rational(iv.hi); }

bool nested_and_narrow(const CutReal& x, unsigned max_n) {
  Interval prev = x.approx(0);
  if (!(Dyadic(0) <= prev.lo && prev.lo <= prev.hi) || !oracle::width_at_most(prev, 0)) return false;
  for (unsigned n = 1; n <= max_n; ++n) {
    const Interval cur = x.approx(n);
    if (!(Dyadic(0) <= cur.lo && cur.lo <= cur.hi)) return false;
    if (!oracle::width_at_most(cur, n)) return false;
    if (cur.lo < prev.lo || prev.hi < cur.hi) return false;
    prev = cur;
  }
  return true;
}

bool signed_narrow(const Real& x, unsigned max_n) {
  for (unsigned n = 0; n <= max_n; ++n) {
    const Interval cur = x.approx(n);
    if (!(cur.lo <= cur.hi) || !oracle::width_at_most(cur, n)) return false;
  }
  return true;
}

/// Intervals of the two values at n overlap, and their hull is narrow.
bool close(const Interval& a, const Interval& b, unsigned k) {
  const Dyadic lo = tower::min(a.lo, b.lo);
  const Dyadic hi = tower::max(a.hi, b.hi);
  return !(a.hi < b.lo) && !(b.hi < a.lo) && hi - lo <= tower::scale_down(Dyadic(1), k);
}

CutReal random_cut() {
  // one third of the values untagged
  const Dyadic d = oracle::random_nonnegative(16, 10);
  if (oracle::uniform(0, 2) == 0) {
    const Dyadic p = oracle::random_nonnegative(8, 2) + Dyadic(1);
    return tower::mul(cut(d), tower::inverse(cut(p), 0));
  }
  return cut(d);
}

Real random_real() {
  const Dyadic d = oracle::random_dyadic(16, 10);
  Real r = Real::from_dyadic(d);
  if (oracle::uniform(0, 2) == 0) r = tower::mul(r, tower::inverse(Real::from_dyadic(Dyadic(3)), 8));
  return r;
}

}  // namespace

TEST_CASE("dyadic embedding") {
  const CutReal zero = cut(Dyadic(0));
  for (unsigned n = 0; n < 20; ++n) {
    CHECK(zero.approx(n).lo == Dyadic(0));
    CHECK(zero.approx(n).hi == Dyadic(0));
  }
  const CutReal half = cut(q(1, 1));
  CHECK(half.approx(3).lo == q(7, 4));
  CHECK(half.approx(3).hi == q(1, 1));
  CHECK(half.tag() == q(1, 1));
  CHECK_THROWS_AS(cut(Dyadic(-1)), tower::Error);

  for (int i = 0; i < 2000; ++i) {
    const Dyadic d = oracle::random_nonnegative(24, 20);
    const Dyadic e = oracle::random_nonnegative(24, 20);
    // g(d + e) ~ g(d) + g(e)
    CHECK(tower::compare_eps(cut(d + e), cut(d) + cut(e), 30) == Approx::Indistinguishable);
    CHECK(tower::compare_eps(cut(d * e), cut(d) * cut(e), 30) == Approx::Indistinguishable);
    const Approx a = tower::compare_eps(cut(d), cut(e), 40);
    if (a == Approx::Less) CHECK(d < e);
    if (a == Approx::Greater) CHECK(e < d);
    if (tower::scale_down(Dyadic(1), 39) < tower::abs(d - e)) CHECK(a != Approx::Indistinguishable);
  }
}

TEST_CASE("comparison at finite precision") {
  const CutReal x = tower::inverse(cut(Dyadic(3)), 0);
  CHECK(tower::compare_eps(x, x, 30) == Approx::Indistinguishable);
  CHECK(tower::compare_eps(cut(q(1, 1)), cut(Dyadic(1)), 4) == Approx::Less);
  CHECK(tower::compare_eps(cut(Dyadic(1)), cut(q(1, 1)), 4) == Approx::Greater);
  CHECK(tower::approx_name(Approx::Indistinguishable) == "indistinguishable");
  for (int i = 0; i < 10000; ++i) {
    const Dyadic d = oracle::random_nonnegative(20, 16);
    const Dyadic e = oracle::random_nonnegative(20, 16);
    const Approx a = tower::compare_eps(cut(d), cut(e), 20);
    if (a == Approx::Less) CHECK(d < e);
    if (a == Approx::Greater) CHECK(e < d);
    if (a == Approx::Indistinguishable) CHECK(tower::abs(d - e) <= tower::scale_down(Dyadic(1), 19));
  }
}

TEST_CASE("addition and multiplication") {
  const CutReal prod = cut(q(1, 1)) * cut(q(1, 1));
  CHECK(prod.approx(30).contains(q(1, 2)));
  CHECK(oracle::width_at_most(prod.approx(30), 30));

  for (int i = 0; i < 300; ++i) {
    const CutReal a = random_cut();
    const CutReal b = random_cut();
    const CutReal c = random_cut();
    CHECK(close((a + cut(Dyadic(0))).approx(30), a.approx(30), 29));
    for (unsigned n : {10U, 20U, 30U}) {
      CHECK(close(((a + b) * c).approx(n), (a * c + b * c).approx(n), n - 2));
      CHECK(close((a + b).approx(n), (b + a).approx(n), n - 1));
      CHECK(close((a * b).approx(n), (b * a).approx(n), n - 1));
      CHECK(close(((a + b) + c).approx(n), (a + (b + c)).approx(n), n - 1));
      CHECK(close(((a * b) * c).approx(n), (a * (b * c)).approx(n), n - 1));
    }
    CHECK(nested_and_narrow(a + b, 40));
    CHECK(nested_and_narrow(a * b * c, 40));
  }

  // the exact value lies in every interval
  for (int i = 0; i < 300; ++i) {
    const Dyadic d = oracle::random_nonnegative(20, 10);
    const Dyadic e = oracle::random_nonnegative(20, 10);
    const CutReal s = cut(d) + cut(e);
    const CutReal p = cut(d) * cut(e);
    for (unsigned n = 0; n <= 40; n += 5) {
      CHECK(s.approx(n).contains(d + e));
      CHECK(p.approx(n).contains(d * e));
    }
  }
}

TEST_CASE("ordering laws") {
  for (int i = 0; i < 500; ++i) {
    Dyadic a = oracle::random_nonnegative(16, 8);
    Dyadic b = oracle::random_nonnegative(16, 8);
    if (a == b) continue;
    if (b < a) std::swap(a, b);
    const CutReal g = random_cut();
    // strict gaps are at least 2^-8, so precision 24 separates them
    CHECK(tower::compare_eps(cut(a) + g, cut(b) + g, 24) == Approx::Less);
    const CutReal pos_g = g + cut(Dyadic(1));
    CHECK(tower::compare_eps(cut(a) * pos_g, cut(b) * pos_g, 24) == Approx::Less);
  }
}

TEST_CASE("suprema of finite lists") {
  const CutReal x = tower::inverse(cut(Dyadic(3)), 0);
  const std::vector<CutReal> one{x};
  CHECK(tower::sup_finite(one).approx(25) == x.approx(25));
  const std::vector<CutReal> two{cut(q(1, 2)), cut(q(3, 2))};
  const Interval s = tower::sup_finite(two).approx(30);
  CHECK(s.contains(q(3, 2)));
  CHECK(oracle::width_at_most(s, 30));
  CHECK_THROWS_AS(tower::sup_finite(std::span<const CutReal>{}), tower::Error);

  for (int i = 0; i < 200; ++i) {
    std::vector<CutReal> xs;
    Dyadic top = Dyadic(0);
    for (std::uint64_t k = oracle::uniform(1, 6); k > 0; --k) {
      const Dyadic d = oracle::random_nonnegative(16, 8);
      top = tower::max(top, d);
      xs.push_back(cut(d));
    }
    const CutReal sup = tower::sup_finite(xs);
    CHECK(sup.approx(30).contains(top));
    for (const auto& xi : xs) CHECK(tower::compare_eps(xi, sup, 30) != Approx::Greater);
    // any dyadic upper bound is not below the supremum
    const Dyadic ub = top + tower::scale_down(oracle::random_nonnegative(8, 0), oracle::uniform(0, 10));
    CHECK(tower::compare_eps(sup, cut(ub), 30) != Approx::Greater);
    CHECK(nested_and_narrow(sup, 40));
  }
}

TEST_CASE("inverses") {
  CHECK(tower::compare_eps(tower::inverse(cut(Dyadic(1)), 0), cut(Dyadic(1)), 40) == Approx::Indistinguishable);
  const CutReal half = tower::inverse(cut(Dyadic(2)), 0);
  REQUIRE(half.tag().has_value());
  CHECK(*half.tag() == q(1, 1));

  const Interval third = tower::inverse(cut(Dyadic(3)), 0).approx(20);
  CHECK(Dyadic(3) * third.lo < Dyadic(1));
  CHECK(Dyadic(1) < Dyadic(3) * third.hi);
  CHECK(oracle::width_at_most(third, 20));

  try {
    tower::inverse(cut(Dyadic(0)), 30);
    FAIL("expected NotBoundedAwayFromZero");
  } catch (const tower::Error& e) {
    CHECK(e.code() == Errc::NotBoundedAwayFromZero);
  }
  // 2^-10 has lo(n0) = 0 for n0 < 10
  CHECK_THROWS_AS(tower::inverse(cut(q(1, 10)), 5), tower::Error);
  CHECK_NOTHROW(tower::inverse(cut(q(1, 10)), 12));

  for (int i = 0; i < 200; ++i) {
    Dyadic d;
    do d = oracle::random_nonnegative(16, 10);
    while (d.is_zero() || d.is_power_of_two());
    const CutReal x = cut(d);
    const CutReal inv = tower::inverse(x, 40);
    CHECK(nested_and_narrow(inv, 40));
    for (unsigned n : {10U, 24U, 40U}) {
      CHECK(contains(inv.approx(n), Rational(1) / to_rational(d)));
      const Interval one = (x * inv).approx(n);
      CHECK(one.contains(Dyadic(1)));
      CHECK(oracle::width_at_most(one, n - 1));
    }
  }
}

TEST_CASE("powers") {
  const CutReal x = tower::inverse(cut(Dyadic(3)), 0);
  CHECK(tower::pow(x, 0).approx(30).contains(Dyadic(1)));
  CHECK(tower::pow(cut(q(1, 1)), 2).approx(30).contains(q(1, 2)));
  for (int i = 0; i < 100; ++i) {
    const CutReal a = random_cut();
    const std::uint64_t m = oracle::uniform(0, 5);
    const std::uint64_t k = oracle::uniform(0, 5);
    for (unsigned n : {12U, 24U}) {
      CHECK(close(tower::pow(a, m + k).approx(n), (tower::pow(a, m) * tower::pow(a, k)).approx(n), n - 2));
      CHECK(close(tower::pow(a, m + 1).approx(n), (tower::pow(a, m) * a).approx(n), n - 2));
    }
    CHECK(nested_and_narrow(tower::pow(a, m + 1), 40));
  }
  // strictly increasing and unbounded on a grid
  for (std::uint64_t m = 1; m <= 4; ++m) {
    CutReal prev = tower::pow(cut(Dyadic(0)), m);
    for (std::int64_t k = 1; k <= 40; ++k) {
      const CutReal cur = tower::pow(cut(q(k, 2)), m);
      CHECK(tower::compare_eps(prev, cur, 30) == Approx::Less);
      prev = cur;
    }
    CHECK(tower::compare_eps(cut(Dyadic(9)), prev, 10) == Approx::Less);
  }
}

TEST_CASE("memoized oracles") {
  std::atomic<int> calls{0};
  const CutReal x = CutReal::from_oracle([&calls](unsigned n) {
    ++calls;
    return Interval{Dyadic(0), tower::scale_down(Dyadic(1), n)};
  });
  x.approx(5);
  x.approx(5);
  x.approx(7);
  CHECK(calls.load() == 2);
  std::vector<std::thread> threads;
  for (int t = 0; t < 8; ++t) {
    threads.emplace_back([&x] {
      for (unsigned n = 0; n < 64; ++n) x.approx(n);
    });
  }
  for (auto& th : threads) th.join();
  CHECK(calls.load() == 64);

  const CutReal inv = tower::inverse(cut(Dyadic(7)), 0);
  std::vector<Interval> results(8);
  threads.clear();
  for (std::size_t t = 0; t < 8; ++t) threads.emplace_back([&, t] { results[t] = inv.approx(100); });
  for (auto& th : threads) th.join();
  for (const auto& r : results) CHECK(r.lo == results.front().lo);
}

TEST_CASE("signed reals") {
  const Real three = Real::from_dyadic(Dyadic(3));
  const Real minus_two = Real::from_dyadic(Dyadic(-2));
  CHECK(minus_two.tag() == Dyadic(-2));
  CHECK((three + minus_two).approx(20).contains(Dyadic(1)));
  CHECK((three * minus_two).approx(20).contains(Dyadic(-6)));
  CHECK(tower::abs(minus_two).approx(20).contains(Dyadic(2)));
  CHECK(tower::compare_eps(minus_two, three, 10) == Approx::Less);

  const Real third = tower::inverse(three, 10);
  const Real neg_third = tower::inverse(Real::from_dyadic(Dyadic(-3)), 10);
  CHECK(contains(neg_third.approx(30), Rational(-1, 3)));
  CHECK_THROWS_AS(tower::inverse(Real::from_dyadic(Dyadic(0)), 30), tower::Error);
  CHECK(tower::inverse(Real::from_dyadic(Dyadic(-4)), 0).tag() == q(-1, 2));

  for (int i = 0; i < 300; ++i) {
    const Real x = random_real();
    const Real y = random_real();
    const Real z = random_real();
    const Real zero = Real::from_dyadic(Dyadic(0));
    for (unsigned n : {10U, 30U}) {
      CHECK(tower::compare_eps(x + (-x), zero, n) == Approx::Indistinguishable);
      CHECK(tower::compare_eps(Real::from_dyadic(Dyadic(-1)) * x, -x, n) == Approx::Indistinguishable);
      CHECK(tower::compare_eps((x + y) * z, x * z + y * z, n) == Approx::Indistinguishable);
      CHECK(tower::compare_eps(x - y, -(y - x), n) == Approx::Indistinguishable);
    }
    CHECK(signed_narrow(x * y + z, 40));
    // |x + y| <= |x| + |y| and |x y| = |x| |y|
    CHECK(tower::compare_eps(tower::abs(x + y), tower::abs(x) + tower::abs(y), 30) != Approx::Greater);
    CHECK(tower::compare_eps(tower::abs(x * y), tower::abs(x) * tower::abs(y), 30) == Approx::Indistinguishable);

    const Real c = canonicalize(x);
    CHECK(tower::compare_eps(c, x, 30) == Approx::Indistinguishable);
    for (unsigned n : {5U, 15U, 30U}) {
      const bool pos_small = c.pos().approx(n).lo <= tower::scale_down(Dyadic(1), n);
      const bool neg_small = c.neg().approx(n).lo <= tower::scale_down(Dyadic(1), n);
      CHECK((pos_small || neg_small));
    }
  }

  // sign rules at n = 20
  for (int i = 0; i < 200; ++i) {
    Dyadic a = oracle::random_nonnegative(12, 4) + q(1, 4);
    Dyadic b = oracle::random_nonnegative(12, 4) + q(1, 4);
    const Real x = Real::from_dyadic(a);
    const Real y = Real::from_dyadic(-b);
    const Real zero = Real::from_dyadic(Dyadic(0));
    CHECK(tower::compare_eps(x * y, zero, 20) == Approx::Less);
    CHECK(tower::compare_eps(y * y, zero, 20) == Approx::Greater);
    CHECK(tower::compare_eps(-y, zero, 20) == Approx::Greater);
  }
}

TEST_CASE("signed suprema, infima and density") {
  for (int i = 0; i < 200; ++i) {
    std::vector<Real> xs;
    std::vector<Dyadic> ds;
    for (std::uint64_t k = oracle::uniform(1, 6); k > 0; --k) {
      ds.push_back(oracle::random_dyadic(14, 6));
      xs.push_back(Real::from_dyadic(ds.back()));
    }
    const Dyadic hi = *std::max_element(ds.begin(), ds.end());
    const Dyadic lo = *std::min_element(ds.begin(), ds.end());
    CHECK(tower::sup_finite(xs).approx(30).contains(hi));
    CHECK(tower::inf_finite(xs).approx(30).contains(lo));
    // inf (f + c) = inf f + c
    const Dyadic c = oracle::random_dyadic(14, 6);
    std::vector<Real> shifted;
    for (const auto& d : ds) shifted.push_back(Real::from_dyadic(d + c));
    CHECK(tower::compare_eps(tower::inf_finite(shifted), tower::inf_finite(xs) + Real::from_dyadic(c), 30) ==
          Approx::Indistinguishable);
  }
  CHECK_THROWS_AS(tower::sup_finite(std::span<const Real>{}), tower::Error);

  for (int i = 0; i < 300; ++i) {
    Dyadic a = oracle::random_dyadic(16, 12);
    Dyadic b = oracle::random_dyadic(16, 12);
    if (a == b) continue;
    if (b < a) std::swap(a, b);
    const Real x = Real::from_dyadic(a);
    const Real y = tower::mul(Real::from_dyadic(b), Real::from_dyadic(Dyadic(1)));
    const auto d = tower::dyadic_between(x, y, 30);
    REQUIRE(d.has_value());
    CHECK(a < *d);
    CHECK(*d < b);
  }
  const Real t = tower::inverse(Real::from_dyadic(Dyadic(3)), 4);
  const auto between = tower::dyadic_between(t, Real::from_dyadic(q(1, 1)), 30);
  REQUIRE(between.has_value());
  CHECK(Dyadic(1) < Dyadic(3) * *between);
  CHECK(*between < q(1, 1));
}

TEST_CASE("interval printing") {
  const Interval iv{q(1, 2), q(3, 2)};
  CHECK(iv.to_string(2) == "[1/2^2, 3/2^2]@2");
}
