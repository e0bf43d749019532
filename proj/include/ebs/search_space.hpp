#ifndef EBS_SEARCH_SPACE_HPP
#define EBS_SEARCH_SPACE_HPP

#include <chrono>
#include <concepts>
#include <cstdint>
#include <optional>
#include <ranges>
#include <stdexcept>
#include <string>
#include <vector>

#include "ebs/cost.hpp"

namespace ebs {

template <typename A, typename St>
struct Transition {
  A action;
  St state;
};

// Black-box problem interface. A state space exposes exactly five
// capabilities (init / is_goal / succ / cost / h) plus an inverse-action
// relation used for parent pruning in the depth-first engines (return false
// everywhere if the domain has none). succ must be deterministic: same state,
// same sequence, every call.
template <typename S>
concept StateSpace = requires(const S& sp, const typename S::State& s, const typename S::Action& a) {
  typename S::State;
  typename S::Action;
  typename S::StateHash;
  requires std::equality_comparable<typename S::State>;
  requires std::equality_comparable<typename S::Action>;
  { sp.init() } -> std::same_as<typename S::State>;
  { sp.is_goal(s) } -> std::same_as<bool>;
  { sp.succ(s) };
  { sp.cost(a) } -> std::same_as<Cost>;
  { sp.h(s) } -> std::same_as<Cost>;
  { sp.undoes(a, a) } -> std::same_as<bool>;
};

template <typename A, typename St>
struct StepT {
  A action;
  St state;  // state after taking action
};

template <typename A, typename St>
struct PathT {
  St start{};
  std::vector<StepT<A, St>> steps;
  Cost g{};  // cached path cost

  const St& end_state() const { return steps.empty() ? start : steps.back().state; }
  std::size_t length() const { return steps.size(); }
};

template <typename A, typename St>
struct SolutionT {
  PathT<A, St> path;
  Cost cost{};
};

template <StateSpace S>
using Step = StepT<typename S::Action, typename S::State>;
template <StateSpace S>
using Path = PathT<typename S::Action, typename S::State>;
template <StateSpace S>
using Solution = SolutionT<typename S::Action, typename S::State>;

// Re-sum a path's action costs (must equal the cached g).
template <StateSpace S>
Cost path_cost(const S& sp, const Path<S>& path) {
  Cost g{};
  for (const auto& step : path.steps) g += sp.cost(step.action);
  return g;
}

template <StateSpace S>
Cost f_value(const S& sp, const Path<S>& path) {
  return path.g + sp.h(path.end_state());
}

// Replays a solution against the domain: starts at init, every step must be a
// transition the domain actually offers, costs re-sum to the cached value, and
// the final state is a goal.
template <StateSpace S>
bool validate_solution(const S& sp, const Solution<S>& sol, std::string* why = nullptr) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (!(sol.path.start == sp.init())) return fail("path does not start at init");
  typename S::State cur = sol.path.start;
  Cost g{};
  std::size_t i = 0;
  for (const auto& step : sol.path.steps) {
    bool found = false;
    for (const auto& tr : sp.succ(cur)) {
      if (tr.action == step.action && tr.state == step.state) {
        found = true;
        break;
      }
    }
    if (!found) return fail("illegal transition at step " + std::to_string(i));
    g += sp.cost(step.action);
    cur = step.state;
    ++i;
  }
  if (!sp.is_goal(cur)) return fail("path does not end in a goal state");
  if (g != sol.path.g) return fail("cached g does not match re-summed cost");
  if (g != sol.cost) return fail("solution cost does not match path cost");
  return true;
}

// ---------------------------------------------------------------------------
// Instrumentation

enum class Phase { Main, Exponential, Binary };
enum class ProbeStatus { TooLow, TooHigh, Good, Solved, NoSolution };

// One entry per BoundedSearch invocation made by the driver (cached or real).
struct IterationLog {
  Phase phase{};
  Cost f_max{};
  std::uint64_t n_min = 0;
  std::uint64_t n_max = 0;
  std::uint64_t expanded = 0;
  ProbeStatus status{};
  bool cache_hit = false;
  // Main-phase rows only: the bound in force was certified good by the
  // preceding bound computation (as opposed to provably <= C*).
  bool certified_good = false;
};

struct SearchStats {
  std::uint64_t expansions = 0;       // succ calls
  std::uint64_t generations = 0;      // transitions returned + 1 per init call
  std::uint64_t heuristic_evals = 0;  // h calls
  double wall_time = 0.0;             // seconds
  std::vector<IterationLog> iterations;

  void merge(const SearchStats& o) {
    expansions += o.expansions;
    generations += o.generations;
    heuristic_evals += o.heuristic_evals;
    wall_time += o.wall_time;
    iterations.insert(iterations.end(), o.iterations.begin(), o.iterations.end());
  }
};

class SearchTimeout : public std::runtime_error {
 public:
  SearchTimeout() : std::runtime_error("search exceeded its time limit") {}
};

struct Deadline {
  std::chrono::steady_clock::time_point at;

  static Deadline after_seconds(double s) {
    return Deadline{std::chrono::steady_clock::now() +
                    std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                        std::chrono::duration<double>(s))};
  }
};

// Counting wrapper. Every algorithm runs against one of these, so the counter
// invariants (expansions = succ calls, generations = returned transitions + 1
// per init, heuristic_evals = h calls) hold by construction. Also the
// cooperative timeout checkpoint.
template <StateSpace S>
class Instrumented {
 public:
  using State = typename S::State;
  using Action = typename S::Action;
  using StateHash = typename S::StateHash;

  Instrumented(const S& space, SearchStats& stats, const Deadline* deadline = nullptr)
      : space_(&space), stats_(&stats), deadline_(deadline) {}

  State init() const {
    ++stats_->generations;
    return space_->init();
  }
  bool is_goal(const State& s) const { return space_->is_goal(s); }
  decltype(auto) succ(const State& s) const {
    ++stats_->expansions;
    if (deadline_ && (++tick_ & 1023) == 0 &&
        std::chrono::steady_clock::now() > deadline_->at) {
      throw SearchTimeout();
    }
    decltype(auto) r = space_->succ(s);
    stats_->generations += std::ranges::size(r);
    return r;
  }
  Cost cost(const Action& a) const { return space_->cost(a); }
  Cost h(const State& s) const {
    ++stats_->heuristic_evals;
    return space_->h(s);
  }
  bool undoes(const Action& prev, const Action& next) const { return space_->undoes(prev, next); }

  const S& underlying() const { return *space_; }
  SearchStats& stats() const { return *stats_; }

 private:
  const S* space_;
  SearchStats* stats_;
  const Deadline* deadline_;
  mutable std::uint64_t tick_ = 0;
};

}  // namespace ebs

#endif  // EBS_SEARCH_SPACE_HPP
