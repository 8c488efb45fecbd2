#include "elspl/arrangements.hpp"

#include <algorithm>
#include <stdexcept>

namespace elspl {

ArrangementUniverse::ArrangementUniverse(const Instance& instance)
    : horizon_(instance.horizon()) {
  const int T = horizon_;
  const auto& demands = instance.demands();
  prefix_.assign(static_cast<std::size_t>(T) + 1, 0);
  for (int j = 1; j <= T; ++j) {
    prefix_[static_cast<std::size_t>(j)] =
        prefix_[static_cast<std::size_t>(j) - 1] + demands[static_cast<std::size_t>(j) - 1];
  }
  // Stationary production levels: B_0..B_m always; the capacity becomes
  // one more level when it can bind (a single block may then need several
  // full-capacity periods, which the levels below cannot express).
  for (int tau = 0; tau <= instance.breakpoint_count(); ++tau) {
    weights_.push_back(instance.breakpoint(tau));
  }
  if (instance.capacity() < instance.total_demand()) {
    weights_.push_back(instance.capacity());
  }
  components_ = static_cast<int>(weights_.size());

  // Dense mixed-radix base and per-component place values.
  const std::int64_t base = T + 1;
  std::vector<std::int64_t> place(static_cast<std::size_t>(components_), 1);
  for (int tau = 1; tau < components_; ++tau) {
    place[static_cast<std::size_t>(tau)] = place[static_cast<std::size_t>(tau) - 1] * base;
  }

  layer_offsets_.assign(static_cast<std::size_t>(T) + 2, 0);

  // Enumerate layer k in ascending dense index: the dense index is the
  // mixed-radix code with component m most significant, so iterating the
  // highest component in the outer loop yields ascending codes.
  for (int k = 0; k <= T; ++k) {
    layer_offsets_[static_cast<std::size_t>(k)] = static_cast<VectorId>(nu_.size());
    // Iterative enumeration over compositions of k into components_ parts.
    std::vector<int> counts(static_cast<std::size_t>(components_), 0);
    // Start with everything in component 0.
    counts[0] = k;
    while (true) {
      nu_.push_back(static_cast<std::int16_t>(k));
      Quantity omega = 0;
      std::int64_t dense = 0;
      for (int tau = 0; tau < components_; ++tau) {
        const int c = counts[static_cast<std::size_t>(tau)];
        omega += static_cast<Quantity>(c) * weights_[static_cast<std::size_t>(tau)];
        dense += c * place[static_cast<std::size_t>(tau)];
        comps_.push_back(c);
      }
      omega_.push_back(omega);
      dense_.push_back(dense);

      // Next composition in ascending dense order: move one unit from the
      // pool in component 0 to the lowest incrementable higher component.
      if (components_ == 1) break;
      int tau = 1;
      while (tau < components_ && counts[0] == 0) {
        // Pool empty: roll component tau back into the pool and carry.
        counts[0] += counts[static_cast<std::size_t>(tau)];
        counts[static_cast<std::size_t>(tau)] = 0;
        ++tau;
      }
      if (tau >= components_) break;
      counts[0] -= 1;
      counts[static_cast<std::size_t>(tau)] += 1;
      // All units freed from lower components return to component 0,
      // which is already how counts[0] was updated above.
    }
  }
  layer_offsets_[static_cast<std::size_t>(T) + 1] = static_cast<VectorId>(nu_.size());

  // Neighbour tables via a dense-code -> id map per layer boundary.
  // Lookup through sorted (dense, id) pairs per layer.
  const VectorId n = size();
  sub_.assign(static_cast<std::size_t>(n) * components_, kNoVector);
  add_.assign(static_cast<std::size_t>(n) * components_, kNoVector);
  for (int k = 0; k + 1 <= T; ++k) {
    const VectorId lo = layer_begin(k + 1);
    const VectorId hi = layer_end(k + 1);
    // For each vector in layer k+1, link to its layer-k predecessors.
    for (VectorId id = lo; id < hi; ++id) {
      for (int tau = 0; tau < components_; ++tau) {
        if (component(id, tau) == 0) continue;
        const std::int64_t target = dense_index(id) - place[static_cast<std::size_t>(tau)];
        // Binary search inside layer k (dense ascending within a layer).
        const auto begin = dense_.begin() + layer_begin(k);
        const auto end = dense_.begin() + layer_end(k);
        const auto it = std::lower_bound(begin, end, target);
        const VectorId pred = static_cast<VectorId>(it - dense_.begin());
        sub_[static_cast<std::size_t>(id) * components_ + static_cast<std::size_t>(tau)] = pred;
        add_[static_cast<std::size_t>(pred) * components_ + static_cast<std::size_t>(tau)] = id;
      }
    }
  }
}

std::vector<int> ArrangementUniverse::components_of(VectorId id) const {
  std::vector<int> out(static_cast<std::size_t>(components_));
  for (int tau = 0; tau < components_; ++tau) out[static_cast<std::size_t>(tau)] = component(id, tau);
  return out;
}

VectorId ArrangementUniverse::find(std::span<const int> components) const {
  if (static_cast<int>(components.size()) != components_) return kNoVector;
  VectorId id = 0;  // zero vector
  for (int tau = 0; tau < components_; ++tau) {
    for (int step = 0; step < components[static_cast<std::size_t>(tau)]; ++step) {
      id = add(id, tau);
      if (id == kNoVector) return kNoVector;
    }
  }
  return id;
}

std::int64_t ArrangementUniverse::ihat(int t, VectorId id) const {
  if (nu(id) > horizon_ - t) {
    throw std::out_of_range("ihat: arrangement spans past the horizon (nu > T - t)");
  }
  return demand_between(t + 1, t + nu(id)) - omega(id);
}

std::vector<VectorId> enumerate_pi_k(const ArrangementUniverse& universe, int k) {
  std::vector<VectorId> out;
  out.reserve(static_cast<std::size_t>(universe.layer_end(k) - universe.layer_begin(k)));
  for (VectorId id = universe.layer_begin(k); id < universe.layer_end(k); ++id) {
    out.push_back(id);
  }
  return out;
}

namespace {

/// Working key for the hat sequences: the paper's omega-minus-demand
/// value, whose incremental order transfers between horizons under a
/// constant shift. Ties break on dense index descending so that the final
/// sign-flip reversal leaves ties in dense-ascending order.
struct HatKeyLess {
  const ArrangementUniverse& u;
  int t;

  bool operator()(VectorId a, VectorId b) const {
    const std::int64_t ka = u.omega(a) - u.demand_between(t + 1, t + u.nu(a));
    const std::int64_t kb = u.omega(b) - u.demand_between(t + 1, t + u.nu(b));
    if (ka != kb) return ka < kb;
    return u.dense_index(a) > u.dense_index(b);
  }
};

struct TildeKeyLess {
  const ArrangementUniverse& u;
  int t;

  bool operator()(VectorId a, VectorId b) const {
    const std::int64_t ka = u.border_key(t, a);
    const std::int64_t kb = u.border_key(t, b);
    if (ka != kb) return ka < kb;
    return u.dense_index(a) < u.dense_index(b);
  }
};

}  // namespace

SortedHorizonSequences SortedHorizonSequences::build(const ArrangementUniverse& universe) {
  SortedHorizonSequences seq;
  const int T = universe.horizon();
  const int m = universe.components() - 1;
  const int split = m;  // fixed split component: the largest breakpoint
  seq.hat_.resize(static_cast<std::size_t>(T) + 1);
  seq.tilde_.resize(static_cast<std::size_t>(T) + 1);
  std::uint64_t touches = 0;

  const auto merge_runs = [&touches](std::vector<VectorId>& out, std::span<const VectorId> a,
                                     std::span<const VectorId> b, auto less) {
    out.clear();
    out.reserve(a.size() + b.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.size() && j < b.size()) {
      ++touches;  // one key comparison
      if (less(b[j], a[i])) {
        out.push_back(b[j++]);
      } else {
        out.push_back(a[i++]);
      }
      ++touches;  // one element write
    }
    for (; i < a.size(); ++i, ++touches) out.push_back(a[i]);
    for (; j < b.size(); ++j, ++touches) out.push_back(b[j]);
  };

  // Hat side: work in omega-minus-demand order from the deepest horizon
  // backwards; reverse at the end to obtain ascending Ihat.
  std::vector<VectorId> prev;   // working order for t+1
  std::vector<VectorId> base;   // split-component-zero vectors, sorted fresh
  std::vector<VectorId> carry;  // shifted previous sequence
  std::vector<VectorId> merged;
  prev = {0};
  seq.hat_[static_cast<std::size_t>(T)] = {0};
  ++touches;
  for (int t = T - 1; t >= 1; --t) {
    base.clear();
    for (VectorId id = 0; id < universe.prefix_size(T - t); ++id) {
      if (universe.component(id, split) == 0) {
        base.push_back(id);
        ++touches;
      }
    }
    HatKeyLess less{universe, t};
    std::sort(base.begin(), base.end(), [&](VectorId a, VectorId b) {
      ++touches;
      return less(a, b);
    });
    carry.clear();
    carry.reserve(prev.size());
    for (VectorId id : prev) {
      // Adding one split-component unit shifts every key by the same
      // constant, so the carried run stays sorted.
      carry.push_back(universe.add(id, split));
      ++touches;
    }
    merge_runs(merged, base, carry, less);
    auto& final_order = seq.hat_[static_cast<std::size_t>(t)];
    final_order.assign(merged.rbegin(), merged.rend());
    touches += final_order.size();
    prev.swap(merged);
  }

  // Tilde side: same construction upward in t; the key itself is the
  // target order, so no reversal.
  prev = {0};
  for (int t = 1; t <= T; ++t) {
    base.clear();
    for (VectorId id = 0; id < universe.prefix_size(t); ++id) {
      if (universe.component(id, split) == 0) {
        base.push_back(id);
        ++touches;
      }
    }
    TildeKeyLess less{universe, t};
    std::sort(base.begin(), base.end(), [&](VectorId a, VectorId b) {
      ++touches;
      return less(a, b);
    });
    carry.clear();
    carry.reserve(prev.size());
    for (VectorId id : prev) {
      carry.push_back(universe.add(id, split));
      ++touches;
    }
    merge_runs(merged, base, carry, less);
    seq.tilde_[static_cast<std::size_t>(t)] = merged;
    touches += merged.size();
    prev.swap(merged);
  }

  seq.touches_ = touches;
  return seq;
}

std::vector<VectorId> naive_hat_order(const ArrangementUniverse& universe, int t) {
  std::vector<VectorId> out;
  const VectorId n = universe.prefix_size(universe.horizon() - t);
  out.reserve(static_cast<std::size_t>(n));
  for (VectorId id = 0; id < n; ++id) out.push_back(id);
  std::sort(out.begin(), out.end(), [&](VectorId a, VectorId b) {
    const std::int64_t ia = universe.ihat(t, a);
    const std::int64_t ib = universe.ihat(t, b);
    if (ia != ib) return ia < ib;
    return universe.dense_index(a) < universe.dense_index(b);
  });
  return out;
}

std::vector<VectorId> naive_tilde_order(const ArrangementUniverse& universe, int t) {
  std::vector<VectorId> out;
  const VectorId n = universe.prefix_size(t);
  out.reserve(static_cast<std::size_t>(n));
  for (VectorId id = 0; id < n; ++id) out.push_back(id);
  std::sort(out.begin(), out.end(), TildeKeyLess{universe, t});
  return out;
}

}  // namespace elspl
