#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tower/dyadic.hpp"

namespace tower {

/// Closed dyadic interval [lo, hi].
struct Interval {
  Dyadic lo;
  Dyadic hi;

  Dyadic width() const { return hi - lo; }
  bool contains(const Dyadic& d) const { return lo <= d && d <= hi; }
  /// `[lo, hi]@n` with both endpoints printed exactly.
  std::string to_string(unsigned precision) const;
  /// `≈ mid ± 2^-n`.
  std::string to_approx_string(unsigned precision) const;

  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Outcome of comparing two approximations at a finite precision.
enum class Approx { Less, Greater, Indistinguishable };

std::string_view approx_name(Approx a) noexcept;

/// A nonnegative real given by a nested dyadic interval oracle.
///
/// approx(n) returns [lo, hi] with 0 <= lo <= x <= hi, hi - lo <= 2^-n, and
/// the intervals nest as n grows. The lower endpoints generate the cut: x is
/// the union of the lower segments ]-inf, lo(n)[ (plus the point itself for
/// dyadic-tagged values, where hi(n) = d). Queries are memoized; each
/// precision is evaluated at most once even under concurrent access.
class CutReal {
 public:
  using Oracle = std::function<Interval(unsigned)>;

  /// Zero.
  CutReal();
  /// Wraps a caller-supplied oracle. The caller vouches for nesting and width.
  static CutReal from_oracle(Oracle oracle, std::optional<Dyadic> tag = std::nullopt);

  Interval approx(unsigned n) const;
  /// Exact value when the real is known to be dyadic.
  const std::optional<Dyadic>& tag() const noexcept;

 private:
  struct Node;
  explicit CutReal(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// g(d) = ]-inf, d[. Oracle: (max(d - 2^-(n+1), 0), d). Throws NegativeInput for d < 0.
CutReal from_dyadic(const Dyadic& d);

/// Operands are queried at n + 1.
CutReal add(const CutReal& x, const CutReal& y);
/// Operands are queried at n + b where 2^b >= hi_x(0) + hi_y(0).
CutReal mul(const CutReal& x, const CutReal& y);
/// x^m; pow(x, 0) = 1.
CutReal pow(const CutReal& x, std::uint64_t m);
/// Least upper bound of a nonempty finite list. Throws EmptyList.
CutReal sup_finite(std::span<const CutReal> xs);
/// 1/x given a witness n0 with lo_x(n0) > 0. Throws NotBoundedAwayFromZero.
CutReal inverse(const CutReal& x, unsigned n0);
/// max(x - y, 0).
CutReal positive_part(const CutReal& x, const CutReal& y);

/// Less iff hi_x(n) < lo_y(n); Greater symmetric; Indistinguishable otherwise,
/// in which case |x - y| <= 2^-(n-1).
Approx compare_eps(const CutReal& x, const CutReal& y, unsigned n);

/// A signed real <pos, neg> with value pos - neg.
class Real {
 public:
  Real() = default;
  explicit Real(CutReal pos, CutReal neg = CutReal()) : pos_(std::move(pos)), neg_(std::move(neg)) {}
  static Real from_dyadic(const Dyadic& d);

  const CutReal& pos() const noexcept { return pos_; }
  const CutReal& neg() const noexcept { return neg_; }

  /// Signed enclosure of pos - neg with width <= 2^-n.
  Interval approx(unsigned n) const;
  /// Exact value when both parts are dyadic-tagged.
  std::optional<Dyadic> tag() const;

 private:
  CutReal pos_;
  CutReal neg_;
};

/// <a + c, b + d>.
Real add(const Real& x, const Real& y);
/// <ac + bd, ad + bc>.
Real mul(const Real& x, const Real& y);
/// <b, a>.
Real neg(const Real& x);
Real sub(const Real& x, const Real& y);
/// |x| as a nonnegative real.
CutReal abs(const Real& x);
/// Compares pos_x + neg_y against pos_y + neg_x at precision n.
Approx compare_eps(const Real& x, const Real& y, unsigned n);
/// Removes the common part of pos and neg: at every precision one component
/// is enclosed in [0, 2^-n].
Real canonicalize(const Real& x);
Real pow(const Real& x, std::uint64_t m);
/// Maximum of a nonempty list: <sup_i (pos_i + sum_{j != i} neg_j), sum_j neg_j>.
Real sup_finite(std::span<const Real> xs);
/// Minimum of a nonempty list, as -sup(-xs).
Real inf_finite(std::span<const Real> xs);
/// 1/x, probing precisions 0..probe for a sign witness. Throws NotBoundedAwayFromZero.
Real inverse(const Real& x, unsigned probe);
/// A dyadic strictly between x and y, searched up to precision max_prec.
std::optional<Dyadic> dyadic_between(const Real& x, const Real& y, unsigned max_prec);

inline CutReal operator+(const CutReal& a, const CutReal& b) { return add(a, b); }
inline CutReal operator*(const CutReal& a, const CutReal& b) { return mul(a, b); }
inline Real operator+(const Real& a, const Real& b) { return add(a, b); }
inline Real operator-(const Real& a, const Real& b) { return sub(a, b); }
inline Real operator*(const Real& a, const Real& b) { return mul(a, b); }
inline Real operator-(const Real& a) { return neg(a); }

}  // namespace tower
