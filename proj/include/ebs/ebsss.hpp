#ifndef EBS_EBSSS_HPP
#define EBS_EBSSS_HPP

#include <chrono>
#include <cstdint>
#include <optional>
#include <utility>

#include "ebs/bounded_search.hpp"
#include "ebs/cached_engine.hpp"
#include "ebs/cost.hpp"
#include "ebs/search_space.hpp"

namespace ebs {

// Driver parameters: after an iteration that expanded N nodes, the next
// f-bound targets an expansion count in [ceil(c1*N), ceil(c2*N)], and delta0
// seeds the exponential probe step.
struct EbParams {
  Ratio c1{2, 1};
  Ratio c2{5, 1};
  std::uint64_t delta0 = 1;

  void validate() const {
    if (!c1.greater_than_one() || !ratio_le(c1, c2)) {
      throw std::invalid_argument("EbParams: need c2 >= c1 > 1");
    }
    if (delta0 == 0) throw std::invalid_argument("EbParams: delta must be >= 1");
  }
};

enum class BoundKind { TooLow, TooHigh, Good, Solved, Exhausted };

template <StateSpace S>
struct BoundStatus {
  BoundKind kind;
  std::optional<Solution<S>> solution;  // present iff kind == Solved
};

template <StateSpace S>
struct EbsssResult {
  std::optional<Solution<S>> solution;  // empty: no solution exists
  SearchStats stats;
};

namespace detail {

template <typename SP, typename CE>
struct ProbeCtx {
  const SP& space;
  CE& engine;
  SearchStats& stats;
};

// One trial search with expansion limit n_max. A solution terminates the whole
// algorithm; otherwise classify the bound. The branch order mirrors the
// driver's contract: a completed search below n_min is "too low" even when
// n_min > n_max would make that impossible for an incomplete one.
template <typename SP, typename CE>
BoundStatus<SP> test_f_bound(ProbeCtx<SP, CE>& ctx, Cost f_max, std::uint64_t n_min,
                             std::uint64_t n_max, Phase phase) {
  auto r = ctx.engine.run(ctx.space, f_max, n_max);
  BoundStatus<SP> out{BoundKind::Good, std::nullopt};
  ProbeStatus logged;
  if (r.solution_found) {
    out.kind = BoundKind::Solved;
    out.solution = std::move(r.solution);
    logged = ProbeStatus::Solved;
  } else if (!r.is_incomplete && r.min_f_pruned.is_infinite()) {
    // The whole reachable space fit under the bound and holds no goal.
    // Raising the bound can never change that; probing further would loop.
    out.kind = BoundKind::Exhausted;
    logged = ProbeStatus::NoSolution;
  } else if (r.expanded_nodes < n_min) {
    out.kind = BoundKind::TooLow;
    logged = ProbeStatus::TooLow;
  } else if (r.is_incomplete) {
    out.kind = BoundKind::TooHigh;
    logged = ProbeStatus::TooHigh;
  } else {
    out.kind = BoundKind::Good;
    logged = ProbeStatus::Good;
  }
  ctx.stats.iterations.push_back(IterationLog{phase, f_max, n_min, n_max, r.expanded_nodes,
                                              logged, ctx.engine.last_was_cache_hit(), false});
  return out;
}

template <StateSpace SP>
struct NextBound {
  std::optional<Solution<SP>> solution;  // short-circuit: optimal solution found
  Cost f_new{};
  bool certified_good = false;
  bool exhausted = false;  // a probe proved the instance unsolvable
};

// Exponential probing from f_old in steps delta, 2*delta, 4*delta, ... until a
// bound is not too low, then binary refinement between the last too-low bound
// + 1 and the first too-high bound. Returns a good bound, or on window
// collapse a too-high bound that is still <= C* (a completed, solution-free
// search at f_new - 1 always exists by then).
template <typename SP, typename CE>
NextBound<SP> next_f_bound(ProbeCtx<SP, CE>& ctx, Cost f_old, std::uint64_t delta,
                           std::uint64_t n_min, std::uint64_t n_max) {
  const std::uint64_t f_old_v = f_old.value();
  std::uint64_t f_low = f_old_v + 1;
  std::uint64_t f_high = f_old_v + delta;
  for (;;) {
    auto st = test_f_bound(ctx, Cost(f_high), n_min, n_max, Phase::Exponential);
    if (st.kind == BoundKind::Solved) return {std::move(st.solution), Cost(f_high), false};
    if (st.kind == BoundKind::Exhausted) return {std::nullopt, Cost(f_high), false, true};
    if (st.kind == BoundKind::Good) return {std::nullopt, Cost(f_high), true};
    if (st.kind == BoundKind::TooHigh) break;
    if (delta > Cost::kMaxFinite / 2) throw OverflowError("exponential probe step overflow");
    delta *= 2;
    f_low = f_high + 1;
    f_high = f_old_v + delta;
    if (f_high > Cost::kMaxFinite) throw OverflowError("probe bound overflows 63 bits");
  }
  while (f_low != f_high) {
    std::uint64_t f_mid = (f_low + f_high) / 2;
    auto st = test_f_bound(ctx, Cost(f_mid), n_min, n_max, Phase::Binary);
    if (st.kind == BoundKind::Solved) return {std::move(st.solution), Cost(f_mid), false};
    if (st.kind == BoundKind::Exhausted) return {std::nullopt, Cost(f_mid), false, true};
    if (st.kind == BoundKind::TooLow) {
      f_low = f_mid + 1;
    } else if (st.kind == BoundKind::TooHigh) {
      f_high = f_mid;
    } else {
      return {std::nullopt, Cost(f_mid), true};
    }
  }
  return {std::nullopt, Cost(f_low), false};
}

}  // namespace detail

// Exponential-binary state-space search over any BoundedSearch engine.
// Each main-loop iteration runs the cached engine with an unbounded expansion
// budget; between iterations the f-bound grows via next_f_bound so that
// expansions grow geometrically without overshooting C*. Returns the optimal
// solution, or none when a completed, nothing-pruned, solution-free search
// proves the instance unsolvable.
template <StateSpace S, typename E>
  requires BoundedSearchEngine<E, Instrumented<S>>
EbsssResult<S> ebsss_search(const S& space, E& engine, const EbParams& params,
                            const Deadline* deadline = nullptr) {
  params.validate();
  EbsssResult<S> out;
  auto t0 = std::chrono::steady_clock::now();
  Instrumented<S> isp(space, out.stats, deadline);
  CachedEngine<Instrumented<S>, E> cached(engine);
  detail::ProbeCtx<Instrumented<S>, CachedEngine<Instrumented<S>, E>> ctx{isp, cached, out.stats};

  Cost f_max = isp.h(isp.init());
  bool certified_good = false;
  for (;;) {
    auto r = cached.run(isp, f_max, kNoLimit);
    out.stats.iterations.push_back(
        IterationLog{Phase::Main, f_max, 0, kNoLimit, r.expanded_nodes,
                     r.solution_found ? ProbeStatus::Solved : ProbeStatus::NoSolution,
                     cached.last_was_cache_hit(), certified_good});
    if (r.solution_found) {
      out.solution = std::move(r.solution);
      break;
    }
    if (r.min_f_pruned.is_infinite()) break;  // exhausted: no goal reachable
    std::uint64_t n_min = ceil_scaled(params.c1, r.expanded_nodes);
    std::uint64_t n_max = ceil_scaled(params.c2, r.expanded_nodes);
    auto nb = detail::next_f_bound(ctx, f_max, params.delta0, n_min, n_max);
    if (nb.solution) {
      out.solution = std::move(nb.solution);
      break;
    }
    if (nb.exhausted) break;  // a probe proved no goal is reachable
    f_max = nb.f_new;
    certified_good = nb.certified_good;
  }
  out.stats.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

}  // namespace ebs

#endif  // EBS_EBSSS_HPP
