#ifndef EBS_DFBNB_HPP
#define EBS_DFBNB_HPP

#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ebs/bounded_search.hpp"
#include "ebs/cost.hpp"
#include "ebs/search_space.hpp"

namespace ebs {

class ZeroCostCycleError : public std::runtime_error {
 public:
  ZeroCostCycleError()
      : std::runtime_error("zero-cost cycle reachable under the f-bound; "
                           "depth-first search would not terminate") {}
};

namespace detail {

// Tree search: no duplicate detection. A path is pruned when its f exceeds
// f_max (tracked in min_f_pruned) or when it cannot beat the incumbent
// (f >= incumbent cost; not tracked). Goal paths install/replace the incumbent
// and are never expanded. Termination relies on every cycle under the bound
// having positive cost; the optional on-stack check turns a violation into an
// error instead of a hang.
template <StateSpace S>
class DfbnbRun {
 public:
  DfbnbRun(const S& sp, Cost f_max, std::uint64_t n_max, bool cycle_check)
      : sp_(sp), f_max_(f_max), n_max_(n_max), cycle_check_(cycle_check) {}

  BoundedSearchResult<S> run() {
    start_ = sp_.init();
    visit(start_, Cost{}, nullptr);

    BoundedSearchResult<S> r;
    r.expanded_nodes = expanded_;
    r.max_f_expanded = max_f_expanded_;
    r.min_f_pruned = min_f_pruned_;
    if (incomplete_) {
      r.is_incomplete = true;  // no solution from an unfinished search
    } else if (incumbent_) {
      r.solution_found = true;
      r.solution = std::move(incumbent_);
    }
    return r;
  }

 private:
  using State = typename S::State;
  using Action = typename S::Action;

  bool visit(const State& s, Cost g, const Action* last) {
    Cost f = g + sp_.h(s);
    if (f > f_max_) {
      min_f_pruned_ = min_cost(min_f_pruned_, f);
      return true;
    }
    if (incumbent_ && f >= incumbent_->cost) return true;
    if (sp_.is_goal(s)) {
      Solution<S> sol;
      sol.path.start = start_;
      sol.path.steps = stack_;
      sol.path.g = g;
      sol.cost = g;
      incumbent_ = std::move(sol);
      return true;
    }
    if (expanded_ == n_max_) {
      incomplete_ = true;
      return false;
    }
    if (cycle_check_) {
      auto& gs = on_stack_[s];
      for (Cost prior : gs) {
        if (prior == g) throw ZeroCostCycleError();
      }
      gs.push_back(g);
    }
    max_f_expanded_ = max_cost(max_f_expanded_, f);
    ++expanded_;
    bool keep_going = true;
    for (const auto& tr : sp_.succ(s)) {
      if (last && sp_.undoes(*last, tr.action)) continue;
      Action a = tr.action;
      Cost g2 = g + sp_.cost(a);
      stack_.push_back({a, tr.state});
      keep_going = visit(tr.state, g2, &a);
      stack_.pop_back();
      if (!keep_going) break;
    }
    if (cycle_check_) on_stack_[s].pop_back();
    return keep_going;
  }

  const S& sp_;
  Cost f_max_;
  std::uint64_t n_max_;
  bool cycle_check_;

  State start_{};
  std::vector<Step<S>> stack_;
  std::optional<Solution<S>> incumbent_;
  std::uint64_t expanded_ = 0;
  bool incomplete_ = false;
  Cost max_f_expanded_{};
  Cost min_f_pruned_ = Cost::infinity();
  std::unordered_map<State, std::vector<Cost>, typename S::StateHash> on_stack_;
};

}  // namespace detail

// f-bounded depth-first branch-and-bound; the tree-search BoundedSearch used
// by EBTS. Continues past solutions, using the incumbent for pruning.
struct DfbnbEngine {
  // Debug guard against zero-cost cycles; off in benchmarks.
  bool cycle_check = false;

  template <StateSpace S>
  BoundedSearchResult<S> run(const S& sp, Cost f_max, std::uint64_t n_max) const {
    return detail::DfbnbRun<S>(sp, f_max, n_max, cycle_check).run();
  }
};

}  // namespace ebs

#endif  // EBS_DFBNB_HPP
