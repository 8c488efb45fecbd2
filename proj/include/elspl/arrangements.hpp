#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "elspl/instance.hpp"

namespace elspl {

using VectorId = std::int32_t;
inline constexpr VectorId kNoVector = -1;

/// All production-arrangement vectors with nu(n) <= T, one count per
/// stationary production level (B_0..B_m, plus the capacity when it can
/// bind), enumerated once per solve and addressed by dense ids. Ids are
/// grouped by layer (nu value) and ordered inside a layer by the
/// mixed-radix index sum n_tau * (T+1)^tau, so a layer is a contiguous id
/// range. Caches nu, omega and the +/- unit vector neighbours for O(1)
/// recurrence steps.
class ArrangementUniverse {
 public:
  explicit ArrangementUniverse(const Instance& instance);

  [[nodiscard]] int horizon() const { return horizon_; }
  /// Number of vector components, m+1.
  [[nodiscard]] int components() const { return components_; }
  [[nodiscard]] VectorId size() const { return static_cast<VectorId>(nu_.size()); }

  [[nodiscard]] VectorId layer_begin(int k) const { return layer_offsets_[static_cast<std::size_t>(k)]; }
  [[nodiscard]] VectorId layer_end(int k) const { return layer_offsets_[static_cast<std::size_t>(k) + 1]; }
  /// Ids with nu <= k, as the contiguous range [0, prefix_size(k)).
  [[nodiscard]] VectorId prefix_size(int k) const { return layer_end(k); }

  [[nodiscard]] int nu(VectorId id) const { return nu_[static_cast<std::size_t>(id)]; }
  [[nodiscard]] Quantity omega(VectorId id) const { return omega_[static_cast<std::size_t>(id)]; }
  [[nodiscard]] std::int64_t dense_index(VectorId id) const {
    return dense_[static_cast<std::size_t>(id)];
  }
  [[nodiscard]] int component(VectorId id, int tau) const {
    return comps_[static_cast<std::size_t>(id) * components_ + static_cast<std::size_t>(tau)];
  }
  /// Id of n - e_{tau+1}, or kNoVector when component tau is zero.
  [[nodiscard]] VectorId sub(VectorId id, int tau) const {
    return sub_[static_cast<std::size_t>(id) * components_ + static_cast<std::size_t>(tau)];
  }
  /// Id of n + e_{tau+1}, or kNoVector when out of range.
  [[nodiscard]] VectorId add(VectorId id, int tau) const {
    return add_[static_cast<std::size_t>(id) * components_ + static_cast<std::size_t>(tau)];
  }

  [[nodiscard]] std::vector<int> components_of(VectorId id) const;
  /// Id for explicit components (all within range); kNoVector otherwise.
  [[nodiscard]] VectorId find(std::span<const int> components) const;

  /// Ihat_t(N) = D(t+1, t+nu(N)) - omega(N). Throws when nu(N) > T - t.
  [[nodiscard]] std::int64_t ihat(int t, VectorId id) const;
  /// Border sort key K_t(n) = omega(n) - D(t - nu(n), t).
  [[nodiscard]] std::int64_t border_key(int t, VectorId id) const {
    return omega(id) - demand_between(t - nu(id), t);
  }
  /// D(i, j) clipped to [1, T]; kept here so key evaluation does not need
  /// the Instance once the universe is built.
  [[nodiscard]] Quantity demand_between(int i, int j) const {
    if (i < 1) i = 1;
    if (j > horizon_) j = horizon_;
    if (i > j) return 0;
    return prefix_[static_cast<std::size_t>(j)] - prefix_[static_cast<std::size_t>(i) - 1];
  }
  [[nodiscard]] Quantity breakpoint_weight(int tau) const {
    return weights_[static_cast<std::size_t>(tau)];
  }

 private:
  int horizon_ = 0;
  int components_ = 0;
  std::vector<std::int16_t> nu_;
  std::vector<Quantity> omega_;
  std::vector<std::int64_t> dense_;
  std::vector<std::int32_t> comps_;
  std::vector<VectorId> sub_;
  std::vector<VectorId> add_;
  std::vector<VectorId> layer_offsets_;
  std::vector<Quantity> prefix_;
  std::vector<Quantity> weights_;  // B_0..B_m
};

/// Ids of Pi_k (all vectors with nu = k) in dense-index order.
std::vector<VectorId> enumerate_pi_k(const ArrangementUniverse& universe, int k);

/// For each t, the orderings the fast algorithm consumes:
///   hat_order(t):   Pi-hat'_t = {N : nu(N) <= T-t} by (Ihat_t, dense index)
///   tilde_order(t): Pi-tilde'_t = {n : nu(n) <= t} by (K_t, dense index)
/// Built by the incremental merge procedure; construction work is metered
/// by a touch counter (element writes + comparisons).
class SortedHorizonSequences {
 public:
  static SortedHorizonSequences build(const ArrangementUniverse& universe);

  [[nodiscard]] const std::vector<VectorId>& hat_order(int t) const {
    return hat_[static_cast<std::size_t>(t)];
  }
  [[nodiscard]] const std::vector<VectorId>& tilde_order(int t) const {
    return tilde_[static_cast<std::size_t>(t)];
  }
  [[nodiscard]] std::uint64_t construction_touches() const { return touches_; }

 private:
  std::vector<std::vector<VectorId>> hat_;
  std::vector<std::vector<VectorId>> tilde_;
  std::uint64_t touches_ = 0;
};

/// Comparison-sort oracles for the incremental procedure.
std::vector<VectorId> naive_hat_order(const ArrangementUniverse& universe, int t);
std::vector<VectorId> naive_tilde_order(const ArrangementUniverse& universe, int t);

}  // namespace elspl
