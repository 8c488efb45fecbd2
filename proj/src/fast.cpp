#include "elspl/fast.hpp"

#include <algorithm>
#include <memory>
#include <stdexcept>

#include "elspl/baseline.hpp"

namespace elspl {

namespace {
constexpr std::int32_t kNull = -1;
}

bool FastCounters::within_amortized_bounds(int breakpoint_count) const {
  const std::int64_t lists = breakpoint_count + 1;
  for (const auto& h : per_horizon) {
    const std::int64_t cap = lists * h.universe_size;
    if (h.sets.hat_inserts > cap || h.sets.hat_removals > cap ||
        h.sets.opt_inserts > cap || h.sets.opt_removals > cap) {
      return false;
    }
  }
  return true;
}

BorderedSets::BorderedSets(const SolveContext& ctx, const PsiLedger& psi, int t,
                           std::span<const VectorId> hat_order, std::int64_t initial_key)
    : ctx_(&ctx),
      psi_(&psi),
      t_(t),
      pieces_(ctx.instance.piece_count()),
      key_(initial_key) {
  const std::size_t q = hat_order.size();
  ids_.assign(hat_order.begin(), hat_order.end());
  ival_.resize(q);
  for (std::size_t p = 0; p < q; ++p) {
    ival_[p] = ctx.universe.ihat(t, ids_[p]);
    if (p > 0 && ival_[p] < ival_[p - 1]) {
      throw std::invalid_argument("BorderedSets: hat order not sorted by inventory key");
    }
  }
  g_.assign(q, CostValue::infeasible());
  member_.assign(q, static_cast<std::int8_t>(staging_marker()));
  in_opt_.assign(q, 0);
  opt_prev_.assign(q, kNull);
  opt_next_.assign(q, kNull);
  opt_head_.assign(static_cast<std::size_t>(pieces_) + 1, kNull);
  opt_tail_.assign(static_cast<std::size_t>(pieces_) + 1, kNull);

  bound_.assign(static_cast<std::size_t>(pieces_) + 1, 0);
  std::int32_t p = 0;
  for (int ell = 0; ell <= pieces_; ++ell) {
    const std::int64_t upper = border(ell);
    while (p < static_cast<std::int32_t>(q) && ival_[static_cast<std::size_t>(p)] <= upper) {
      member_[static_cast<std::size_t>(p)] =
          static_cast<std::int8_t>(ell == 0 ? kRetired : ell);
      ++p;
    }
    bound_[static_cast<std::size_t>(ell)] = p;
  }
  // Left-to-right pass builds the optimality lists in Ihat order.
  for (std::int32_t live = bound_[0]; live < bound_[static_cast<std::size_t>(pieces_)]; ++live) {
    enter_set(live, member_[static_cast<std::size_t>(live)]);
  }
}

std::int64_t BorderedSets::border(int ell) const {
  const Quantity level =
      ell <= ctx_->instance.breakpoint_count() ? ctx_->universe.breakpoint_weight(ell)
                                               : ctx_->instance.capacity();
  return level + key_;
}

void BorderedSets::enter_set(std::int32_t pos, int ell) {
  member_[static_cast<std::size_t>(pos)] = static_cast<std::int8_t>(ell);
  g_[static_cast<std::size_t>(pos)] = big_g(*ctx_, *psi_, t_, ell, ids_[static_cast<std::size_t>(pos)]);
  ++counters_.hat_inserts;

  // check-and-remove: strip strictly worse residents off the back, then
  // append; the list stays non-decreasing in G.
  const CostValue g = g_[static_cast<std::size_t>(pos)];
  std::int32_t back = opt_tail_[static_cast<std::size_t>(ell)];
  while (back != kNull && g_[static_cast<std::size_t>(back)] > g) {
    unlink_from_optimality(back, ell);
    back = opt_tail_[static_cast<std::size_t>(ell)];
  }
  opt_prev_[static_cast<std::size_t>(pos)] = back;
  opt_next_[static_cast<std::size_t>(pos)] = kNull;
  if (back == kNull) {
    opt_head_[static_cast<std::size_t>(ell)] = pos;
  } else {
    opt_next_[static_cast<std::size_t>(back)] = pos;
  }
  opt_tail_[static_cast<std::size_t>(ell)] = pos;
  in_opt_[static_cast<std::size_t>(pos)] = 1;
  ++counters_.opt_inserts;
}

void BorderedSets::unlink_from_optimality(std::int32_t pos, int ell) {
  const std::int32_t prev = opt_prev_[static_cast<std::size_t>(pos)];
  const std::int32_t next = opt_next_[static_cast<std::size_t>(pos)];
  if (prev == kNull) {
    opt_head_[static_cast<std::size_t>(ell)] = next;
  } else {
    opt_next_[static_cast<std::size_t>(prev)] = next;
  }
  if (next == kNull) {
    opt_tail_[static_cast<std::size_t>(ell)] = prev;
  } else {
    opt_prev_[static_cast<std::size_t>(next)] = prev;
  }
  opt_prev_[static_cast<std::size_t>(pos)] = kNull;
  opt_next_[static_cast<std::size_t>(pos)] = kNull;
  in_opt_[static_cast<std::size_t>(pos)] = 0;
  ++counters_.opt_removals;
}

void BorderedSets::advance_borders(std::int64_t new_key) {
  if (new_key < key_) {
    throw std::logic_error("BorderedSets: border key decreased (rebordering not monotonic)");
  }
  key_ = new_key;
  const std::int32_t q = static_cast<std::int32_t>(ids_.size());

  // Admit staged vectors whose Ihat now falls inside the last border.
  const std::int64_t top = border(pieces_);
  while (bound_[static_cast<std::size_t>(pieces_)] < q &&
         ival_[static_cast<std::size_t>(bound_[static_cast<std::size_t>(pieces_)])] <= top) {
    enter_set(bound_[static_cast<std::size_t>(pieces_)], pieces_);
    ++bound_[static_cast<std::size_t>(pieces_)];
  }

  // Cascade front-pops from the highest set downward; popped vectors land
  // at the back of the next set down and re-rank there.
  for (int ell = pieces_; ell >= 1; --ell) {
    const std::int64_t left = border(ell - 1);
    auto& left_bound = bound_[static_cast<std::size_t>(ell) - 1];
    while (left_bound < bound_[static_cast<std::size_t>(ell)] &&
           ival_[static_cast<std::size_t>(left_bound)] <= left) {
      const std::int32_t pos = left_bound;
      if (in_opt_[static_cast<std::size_t>(pos)]) {
        unlink_from_optimality(pos, ell);
      }
      ++counters_.hat_removals;
      if (ell == 1) {
        member_[static_cast<std::size_t>(pos)] = kRetired;
      } else {
        enter_set(pos, ell - 1);
      }
      ++left_bound;
    }
  }
}

std::optional<BorderedSets::Front> BorderedSets::front(int ell) const {
  const std::int32_t head = opt_head_[static_cast<std::size_t>(ell)];
  if (head == kNull) return std::nullopt;
  return Front{ids_[static_cast<std::size_t>(head)], g_[static_cast<std::size_t>(head)]};
}

std::vector<VectorId> BorderedSets::order_list(int ell) const {
  std::vector<VectorId> out;
  for (std::int32_t p = bound_[static_cast<std::size_t>(ell) - 1];
       p < bound_[static_cast<std::size_t>(ell)]; ++p) {
    out.push_back(ids_[static_cast<std::size_t>(p)]);
  }
  return out;
}

std::vector<VectorId> BorderedSets::optimality_list(int ell) const {
  std::vector<VectorId> out;
  for (std::int32_t p = opt_head_[static_cast<std::size_t>(ell)]; p != kNull;
       p = opt_next_[static_cast<std::size_t>(p)]) {
    out.push_back(ids_[static_cast<std::size_t>(p)]);
  }
  return out;
}

bool BorderedSets::verify_structure() const {
  const std::int32_t q = static_cast<std::int32_t>(ids_.size());
  // Bounds are monotone and consistent with the locator array.
  std::int32_t prev_bound = 0;
  for (std::size_t ell = 0; ell < bound_.size(); ++ell) {
    if (bound_[ell] < prev_bound || bound_[ell] > q) return false;
    prev_bound = bound_[ell];
  }
  for (std::int32_t p = 0; p < q; ++p) {
    int expected = staging_marker();
    if (p < bound_[0]) {
      expected = kRetired;
    } else {
      for (int ell = 1; ell <= pieces_; ++ell) {
        if (p >= bound_[static_cast<std::size_t>(ell) - 1] &&
            p < bound_[static_cast<std::size_t>(ell)]) {
          expected = ell;
          break;
        }
      }
    }
    if (member_[static_cast<std::size_t>(p)] != expected) return false;
    // Border membership in terms of the inventory key.
    if (expected >= 1 && expected <= pieces_) {
      if (!(ival_[static_cast<std::size_t>(p)] > border(expected - 1) &&
            ival_[static_cast<std::size_t>(p)] <= border(expected))) {
        return false;
      }
    }
  }
  // Optimality lists: members only, non-decreasing G, and exactly the
  // Pareto staircase of the current members.
  for (int ell = 1; ell <= pieces_; ++ell) {
    std::vector<std::int32_t> listed;
    for (std::int32_t p = opt_head_[static_cast<std::size_t>(ell)]; p != kNull;
         p = opt_next_[static_cast<std::size_t>(p)]) {
      if (member_[static_cast<std::size_t>(p)] != ell) return false;
      if (!listed.empty() && g_[static_cast<std::size_t>(listed.back())] > g_[static_cast<std::size_t>(p)]) {
        return false;
      }
      listed.push_back(p);
      if (listed.size() > ids_.size()) return false;  // cycle guard
    }
    std::vector<std::int32_t> staircase;
    CostValue best_behind = CostValue::infeasible();
    for (std::int32_t p = bound_[static_cast<std::size_t>(ell)] - 1;
         p >= bound_[static_cast<std::size_t>(ell) - 1]; --p) {
      if (g_[static_cast<std::size_t>(p)] <= best_behind) {
        staircase.push_back(p);
        best_behind = g_[static_cast<std::size_t>(p)];
      }
    }
    std::reverse(staircase.begin(), staircase.end());
    if (staircase != listed) return false;
  }
  return true;
}

namespace {

enum class PsiKind { kNone, kAllBreakpoints, kFracLast, kFracFirst, kMainChain };

struct PsiChoice {
  PsiKind kind = PsiKind::kNone;
  int period = 0;  // t for kFracLast, v for kFracFirst
  VectorId n_id = kNoVector;
  VectorId N_id = kNoVector;
};

struct MainTrace {
  int t = 0;
  VectorId n_id = kNoVector;
  VectorId N_id = kNoVector;
};

class FastSolver {
 public:
  FastSolver(const Instance& instance, const FastOptions& options)
      : ctx_(instance),
        sequences_(SortedHorizonSequences::build(ctx_.universe)),
        psi_(instance.horizon()),
        options_(options) {}

  FastResult run();

 private:
  void evaluate_arrangement(int t, VectorId n_id, int u_prime, FastResult& result);
  void fold(int u_prime, int t, CostValue value, const MainTrace& trace);
  [[nodiscard]] CostValue chain_value(int u_prime, int t) const;
  void harvest_sets(FastResult& result);
  Schedule reconstruct(const std::vector<PsiChoice>& choices, CostValue objective) const;

  SolveContext ctx_;
  SortedHorizonSequences sequences_;
  PsiLedger psi_;
  FastOptions options_;
  std::unique_ptr<BorderedSets> sets_;
  std::vector<std::vector<CostValue>> m_value_;
  std::vector<std::vector<MainTrace>> m_trace_;
  int column_frontier_ = 0;
};

CostValue FastSolver::chain_value(int u_prime, int t) const {
  if (t < column_frontier_) {
    throw std::logic_error("fast solver: read of unfinalized phi column");
  }
  return m_value_[static_cast<std::size_t>(u_prime)][static_cast<std::size_t>(t)];
}

void FastSolver::fold(int u_prime, int t, CostValue value, const MainTrace& trace) {
  auto& slot = m_value_[static_cast<std::size_t>(u_prime)][static_cast<std::size_t>(t)];
  if (value < slot) {
    slot = value;
    m_trace_[static_cast<std::size_t>(u_prime)][static_cast<std::size_t>(t)] = trace;
  }
}

void FastSolver::evaluate_arrangement(int t, VectorId n_id, int u_prime, FastResult& result) {
  const ArrangementUniverse& universe = ctx_.universe;
  const Instance& instance = ctx_.instance;
  if (sets_->key() != universe.border_key(t, n_id)) {
    throw std::logic_error("fast solver: sets not bordered for the current arrangement");
  }
  const CostValue prefix_cost = ctx_.tables.fbar(u_prime, n_id);
  const Quantity demand_gap = universe.demand_between(u_prime, t) - universe.omega(n_id);

  CostValue best = CostValue::infeasible();
  VectorId best_completion = kNoVector;
  for (int ell = 1; ell <= instance.piece_count(); ++ell) {
    const auto front = sets_->front(ell);
    if (!front) continue;
    const CostValue candidate = prefix_cost + CostValue(instance.piece_setup(t, ell)) +
                                scaled_cost(instance.piece_unit(t, ell), demand_gap) + front->g;
    if (candidate < best) {
      best = candidate;
      best_completion = front->id;
    }
    if (options_.verify_fronts) {
      // The front must match a full scan of the set, both through the G
      // identity and by direct evaluation.
      CostValue naive = CostValue::infeasible();
      for (VectorId member : sets_->order_list(ell)) {
        naive = min_cost(naive, phi(ctx_, u_prime, t, t + universe.nu(member), n_id, member) +
                                    psi_.get(t + universe.nu(member) + 1));
      }
      const CostValue direct = phi(ctx_, u_prime, t, t + universe.nu(front->id), n_id, front->id) +
                               psi_.get(t + universe.nu(front->id) + 1);
      if (candidate != naive || direct != naive) {
        ++result.front_check_failures;
      }
    }
  }
  ++result.counters.eval_calls;

  fold(u_prime, t, best, MainTrace{t, n_id, best_completion});
  fold(u_prime, t, chain_value(u_prime, t + 1),
       m_trace_[static_cast<std::size_t>(u_prime)][static_cast<std::size_t>(t) + 1]);
}

void FastSolver::harvest_sets(FastResult& result) {
  if (!sets_) return;
  HorizonCounters h;
  h.t = sets_->horizon_index();
  h.universe_size = sets_->universe_size();
  h.sets = sets_->counters();
  result.counters.per_horizon.push_back(h);
  result.counters.totals.hat_inserts += h.sets.hat_inserts;
  result.counters.totals.hat_removals += h.sets.hat_removals;
  result.counters.totals.opt_inserts += h.sets.opt_inserts;
  result.counters.totals.opt_removals += h.sets.opt_removals;
  sets_.reset();
}

FastResult FastSolver::run() {
  const Instance& instance = ctx_.instance;
  const ArrangementUniverse& universe = ctx_.universe;
  const int T = instance.horizon();

  FastResult result;
  result.sort_touches = sequences_.construction_touches();

  m_value_.assign(static_cast<std::size_t>(T) + 2,
                  std::vector<CostValue>(static_cast<std::size_t>(T) + 2,
                                         CostValue::infeasible()));
  m_trace_.assign(static_cast<std::size_t>(T) + 2,
                  std::vector<MainTrace>(static_cast<std::size_t>(T) + 2));
  column_frontier_ = T;  // columns T and T+1 hold no interior-split candidates

  std::vector<PsiChoice> choices(static_cast<std::size_t>(T) + 1);

  const CostValue base = instance.production_cost(T, instance.demand(T));
  psi_.finalize(T, base);
  if (base.is_finite()) {
    choices[static_cast<std::size_t>(T)] = PsiChoice{PsiKind::kFracLast, T, 0, kNoVector};
  }

  for (int u = T - 1; u >= 1; --u) {
    CostValue best = CostValue::infeasible();
    PsiChoice choice;

    VectorId tail_n = kNoVector;
    const CostValue all_bp = tail_all_breakpoints(ctx_, u, &tail_n);
    if (all_bp < best) {
      best = all_bp;
      choice = PsiChoice{PsiKind::kAllBreakpoints, 0, tail_n, kNoVector};
    }
    int last_t = 0;
    VectorId last_n = kNoVector;
    const CostValue frac_last = tail_fractional_last(ctx_, psi_, u, &last_t, &last_n);
    if (frac_last < best) {
      best = frac_last;
      choice = PsiChoice{PsiKind::kFracLast, last_t, last_n, kNoVector};
    }
    int first_v = 0;
    VectorId first_N = kNoVector;
    const CostValue frac_first = tail_fractional_first(ctx_, psi_, u, &first_v, &first_N);
    if (frac_first < best) {
      best = frac_first;
      choice = PsiChoice{PsiKind::kFracFirst, first_v, kNoVector, first_N};
    }

    if (u <= T - 2) {
      const int t = u + 1;
      if (!sets_ || sets_->horizon_index() != t) {
        throw std::logic_error("fast solver: bordered sets missing for the current horizon");
      }
      const auto& order = sequences_.tilde_order(t);
      for (std::size_t i = 0; i < order.size(); ++i) {
        const VectorId n_id = order[i];
        if (i > 0) {
          sets_->advance_borders(universe.border_key(t, n_id));
          ++result.counters.reborder_passes;
          if (options_.verify_structure && !sets_->verify_structure()) {
            ++result.structure_check_failures;
          }
        }
        const int u_prime = t - universe.nu(n_id);
        if (u_prime < 1) continue;
        if (universe.omega(n_id) >= universe.demand_between(u_prime, T)) continue;
        evaluate_arrangement(t, n_id, u_prime, result);
      }
      column_frontier_ = t;
      const CostValue via_chain = chain_value(u, t);
      if (via_chain < best) {
        best = via_chain;
        const MainTrace& trace =
            m_trace_[static_cast<std::size_t>(u)][static_cast<std::size_t>(t)];
        choice = PsiChoice{PsiKind::kMainChain, trace.t, trace.n_id, trace.N_id};
      }
    }

    psi_.finalize(u, best);
    choices[static_cast<std::size_t>(u)] = choice;

    if (u >= 2) {
      harvest_sets(result);
      const int next_t = u;
      const auto& next_order = sequences_.tilde_order(next_t);
      sets_ = std::make_unique<BorderedSets>(ctx_, psi_, next_t, sequences_.hat_order(next_t),
                                             universe.border_key(next_t, next_order.front()));
      if (options_.verify_structure && !sets_->verify_structure()) {
        ++result.structure_check_failures;
      }
    }
  }
  harvest_sets(result);

  result.psi = psi_.values();
  result.objective = result.psi[1];
  if (result.objective.is_finite()) {
    result.schedule = reconstruct(choices, result.objective);
  }
  return result;
}

Schedule FastSolver::reconstruct(const std::vector<PsiChoice>& choices,
                                 CostValue objective) const {
  const ArrangementUniverse& universe = ctx_.universe;
  const int T = ctx_.instance.horizon();
  std::vector<Quantity> production(static_cast<std::size_t>(T), 0);
  int u = 1;
  while (u <= T) {
    const PsiChoice& choice = choices[static_cast<std::size_t>(u)];
    switch (choice.kind) {
      case PsiKind::kAllBreakpoints: {
        replay_fbar_block(ctx_, u, T, choice.n_id, production);
        u = T + 1;
        break;
      }
      case PsiKind::kFracLast: {
        const int t = choice.period;
        replay_fbar_block(ctx_, u, t - 1, choice.n_id, production);
        production[static_cast<std::size_t>(t) - 1] =
            universe.demand_between(u, t) - universe.omega(choice.n_id);
        u = t + 1;
        break;
      }
      case PsiKind::kFracFirst: {
        const int v = choice.period;
        production[static_cast<std::size_t>(u) - 1] =
            universe.demand_between(u, v) - universe.omega(choice.N_id);
        replay_fhat_block(ctx_, u + 1, v, choice.N_id, production);
        u = v + 1;
        break;
      }
      case PsiKind::kMainChain: {
        const int t = choice.period;
        const int v = t + universe.nu(choice.N_id);
        replay_fbar_block(ctx_, u, t - 1, choice.n_id, production);
        production[static_cast<std::size_t>(t) - 1] = universe.demand_between(u, v) -
                                                      universe.omega(choice.n_id) -
                                                      universe.omega(choice.N_id);
        replay_fhat_block(ctx_, t + 1, v, choice.N_id, production);
        u = v + 1;
        break;
      }
      case PsiKind::kNone:
        throw std::logic_error("fast solver: finite objective without a trace");
    }
  }

  Schedule schedule;
  schedule.production = std::move(production);
  schedule.total_cost = evaluate_schedule(ctx_.instance, schedule.production);
  if (schedule.total_cost != objective) {
    throw std::logic_error("fast solver: schedule cost does not reproduce the optimum");
  }
  if (max_fractional_periods_per_block(ctx_.instance, schedule.production) > 1) {
    throw std::logic_error("fast solver: more than one fractional period in a block");
  }
  return schedule;
}

}  // namespace

FastResult solve_fast(const Instance& instance, const FastOptions& options) {
  require_structurally_valid(instance);
  FastSolver solver(instance, options);
  return solver.run();
}

}  // namespace elspl
