#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <mutex>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "tower/error.hpp"

namespace tower {

/// Arbitrary-precision natural number. The magnitude is never negative.
class Nat {
 public:
  using Int = boost::multiprecision::cpp_int;

  Nat() = default;
  Nat(std::uint64_t v) : v_(v) {}  // NOLINT(google-explicit-constructor)

  /// Throws Underflow when `v` is negative.
  static Nat from_int(Int v);
  /// Decimal digits only; throws ParseError otherwise.
  static Nat parse(std::string_view text);

  const Int& value() const noexcept { return v_; }
  std::string to_string() const { return v_.str(); }

  bool is_zero() const noexcept { return v_.is_zero(); }
  bool is_even() const noexcept { return !bit_test(v_, 0); }
  bool is_odd() const noexcept { return bit_test(v_, 0); }
  bool bit(std::size_t i) const noexcept { return bit_test(v_, static_cast<unsigned>(i)); }
  std::size_t bit_length() const noexcept { return v_.is_zero() ? 0 : msb(v_) + 1; }

  /// Throws SizeLimit when the value does not fit.
  std::uint64_t to_u64() const;

  /// sigma(m) = m + 1.
  Nat succ() const { return Nat(Int(v_ + 1), 0); }

  friend bool operator==(const Nat&, const Nat&) = default;
  friend std::strong_ordering operator<=>(const Nat& a, const Nat& b) noexcept {
    int c = a.v_.compare(b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend Nat operator+(const Nat& a, const Nat& b) { return Nat(Int(a.v_ + b.v_), 0); }
  friend Nat operator*(const Nat& a, const Nat& b) { return Nat(Int(a.v_ * b.v_), 0); }
  Nat& operator+=(const Nat& o) { v_ += o.v_; return *this; }
  Nat& operator*=(const Nat& o) { v_ *= o.v_; return *this; }

 private:
  Nat(Int v, int /*trusted*/) : v_(std::move(v)) {}
  Int v_;
};

Nat add(const Nat& m, const Nat& n);
Nat mul(const Nat& m, const Nat& n);
/// m^n; the exponent must fit in 32 bits (SizeLimit otherwise). 0^0 = 1.
Nat pow(const Nat& m, const Nat& n);
/// The unique p with m + p = n. Throws Underflow when m > n.
Nat sub_partial(const Nat& m, const Nat& n);

/// s(m), the unique number with 2 s(m) = m (m + 1).
Nat triangular(const Nat& m);

/// h(p, q) = s(p + q) + q, a bijection N^2 -> N.
Nat pair(const Nat& p, const Nat& q);
/// Inverse of pair: locates the unique m with s(m) <= r < s(m + 1).
std::pair<Nat, Nat> unpair(const Nat& r);

/// The recursion theorem as a combinator: g(0) = x, g(sigma(n)) = f(g(n)).
///
/// Values are memoized in a growable table, so answering g(n) evaluates f
/// exactly n times over the lifetime of the object. Queries are serialized
/// internally; concurrent callers see identical values and f runs at most
/// once per index. Memory grows linearly in the largest index queried.
template <class T>
class Recursion {
 public:
  Recursion(T x, std::function<T(const T&)> f) : f_(std::move(f)) { table_.push_back(std::move(x)); }

  T operator()(std::size_t n) const {
    std::lock_guard lock(mutex_);
    while (table_.size() <= n) {
      T next = f_(table_.back());
      table_.push_back(std::move(next));
    }
    return table_[n];
  }

  T operator()(const Nat& n) const { return (*this)(static_cast<std::size_t>(n.to_u64())); }

  /// Number of times f has been evaluated so far.
  std::size_t evaluations() const {
    std::lock_guard lock(mutex_);
    return table_.size() - 1;
  }

 private:
  std::function<T(const T&)> f_;
  mutable std::mutex mutex_;
  mutable std::vector<T> table_;
};

template <class T>
Recursion<T> recurse(T x, std::function<T(const T&)> f) {
  return Recursion<T>(std::move(x), std::move(f));
}

}  // namespace tower
