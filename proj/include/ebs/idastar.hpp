#ifndef EBS_IDASTAR_HPP
#define EBS_IDASTAR_HPP

#include <chrono>
#include <cstdint>
#include <utility>
#include <vector>

#include "ebs/bounded_search.hpp"
#include "ebs/cost.hpp"
#include "ebs/search_space.hpp"

namespace ebs {

template <StateSpace S>
struct IdastarResult {
  std::optional<Solution<S>> solution;
  SearchStats stats;
  // (bound, expansions in that round), in round order
  std::vector<std::pair<Cost, std::uint64_t>> rounds;
  bool out_of_budget = false;
};

namespace detail {

template <StateSpace S>
class IdastarRun {
 public:
  IdastarRun(const S& sp, std::uint64_t max_expansions)
      : sp_(sp), max_expansions_(max_expansions) {}

  IdastarResult<S> run() {
    IdastarResult<S> out;
    start_ = sp_.init();
    Cost bound = sp_.h(start_);
    for (;;) {
      next_bound_ = Cost::infinity();
      round_expanded_ = 0;
      int rc = visit(start_, Cost{}, nullptr, bound);
      out.rounds.emplace_back(bound, round_expanded_);
      if (rc == kFound) {
        out.solution = std::move(found_);
        return out;
      }
      if (rc == kBudget) {
        out.out_of_budget = true;
        return out;
      }
      if (next_bound_.is_infinite()) return out;  // nothing pruned: unsolvable
      bound = next_bound_;
    }
  }

 private:
  using State = typename S::State;
  using Action = typename S::Action;
  static constexpr int kNotFound = 0, kFound = 1, kBudget = 2;

  // Classic formulation: prune above the bound, test the goal on visit, stop
  // the round at the first goal found.
  int visit(const State& s, Cost g, const Action* last, Cost bound) {
    Cost f = g + sp_.h(s);
    if (f > bound) {
      next_bound_ = min_cost(next_bound_, f);
      return kNotFound;
    }
    if (sp_.is_goal(s)) {
      Solution<S> sol;
      sol.path.start = start_;
      sol.path.steps = stack_;
      sol.path.g = g;
      sol.cost = g;
      found_ = std::move(sol);
      return kFound;
    }
    if (total_expanded_ == max_expansions_) return kBudget;
    ++total_expanded_;
    ++round_expanded_;
    for (const auto& tr : sp_.succ(s)) {
      if (last && sp_.undoes(*last, tr.action)) continue;
      Action a = tr.action;
      Cost g2 = g + sp_.cost(a);
      stack_.push_back({a, tr.state});
      int rc = visit(tr.state, g2, &a, bound);
      stack_.pop_back();
      if (rc != kNotFound) return rc;
    }
    return kNotFound;
  }

  const S& sp_;
  std::uint64_t max_expansions_;
  State start_{};
  std::vector<Step<S>> stack_;
  std::optional<Solution<S>> found_;
  Cost next_bound_ = Cost::infinity();
  std::uint64_t total_expanded_ = 0;
  std::uint64_t round_expanded_ = 0;
};

}  // namespace detail

// Iterative-deepening A* with the classic minimal next bound: each round is an
// f-bounded depth-first search and the next bound is the smallest f that was
// pruned. The round sequence is strictly increasing and never exceeds C*.
template <StateSpace S>
IdastarResult<S> idastar(const S& space, std::uint64_t max_expansions = kNoLimit,
                         const Deadline* deadline = nullptr) {
  SearchStats stats;
  auto t0 = std::chrono::steady_clock::now();
  Instrumented<S> sp(space, stats, deadline);
  auto inner = detail::IdastarRun<Instrumented<S>>(sp, max_expansions).run();
  stats.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  IdastarResult<S> out;
  out.solution = std::move(inner.solution);
  out.rounds = std::move(inner.rounds);
  out.out_of_budget = inner.out_of_budget;
  out.stats = std::move(stats);
  return out;
}

}  // namespace ebs

#endif  // EBS_IDASTAR_HPP
