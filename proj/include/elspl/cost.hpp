#pragma once

#include <cassert>
#include <compare>
#include <cstdint>
#include <limits>

namespace elspl {

using Money = std::int64_t;
using Quantity = std::int64_t;

/// A cost amount in integer minor units, or the explicit INFEASIBLE
/// sentinel. INFEASIBLE absorbs under addition and compares greater than
/// every finite value, so min() over candidates never needs special cases.
class CostValue {
 public:
  constexpr CostValue() = default;
  constexpr explicit CostValue(Money amount) : raw_(amount) {
    assert(amount != kSentinel);
  }

  static constexpr CostValue infeasible() {
    CostValue c;
    c.raw_ = kSentinel;
    return c;
  }
  static constexpr CostValue zero() { return CostValue(); }

  [[nodiscard]] constexpr bool is_infeasible() const { return raw_ == kSentinel; }
  [[nodiscard]] constexpr bool is_finite() const { return raw_ != kSentinel; }

  /// Finite amount; must not be called on the sentinel.
  [[nodiscard]] constexpr Money amount() const {
    assert(is_finite());
    return raw_;
  }

  friend constexpr CostValue operator+(CostValue a, CostValue b) {
    if (a.is_infeasible() || b.is_infeasible()) return infeasible();
    Money sum = 0;
    if (__builtin_add_overflow(a.raw_, b.raw_, &sum) || sum == kSentinel) {
      return infeasible();
    }
    CostValue c;
    c.raw_ = sum;
    return c;
  }
  constexpr CostValue& operator+=(CostValue o) { return *this = *this + o; }

  friend constexpr bool operator==(CostValue a, CostValue b) = default;
  // Sentinel is the maximum representable value, so ordering by the raw
  // representation gives INFEASIBLE > finite for free.
  friend constexpr std::strong_ordering operator<=>(CostValue a, CostValue b) {
    return a.raw_ <=> b.raw_;
  }

 private:
  static constexpr Money kSentinel = std::numeric_limits<Money>::max();
  Money raw_ = 0;
};

constexpr CostValue min_cost(CostValue a, CostValue b) { return b < a ? b : a; }

/// rate * quantity as a cost term. Quantity may be negative (used for
/// order keys); overflow degrades to the sentinel.
constexpr CostValue scaled_cost(Money rate, Quantity quantity) {
  Money p = 0;
  if (__builtin_mul_overflow(rate, quantity, &p)) return CostValue::infeasible();
  return CostValue(p);
}

}  // namespace elspl
