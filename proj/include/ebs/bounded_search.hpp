#ifndef EBS_BOUNDED_SEARCH_HPP
#define EBS_BOUNDED_SEARCH_HPP

#include <cstdint>
#include <optional>

#include "ebs/cost.hpp"
#include "ebs/search_space.hpp"

namespace ebs {

inline constexpr std::uint64_t kNoLimit = ~std::uint64_t{0};

// Outcome of one f-bounded, expansion-bounded search. The four contract
// properties every engine must satisfy:
//   1. never more than n_max expansions; if work remained at n_max, the
//      result is is_incomplete with no solution and expanded_nodes == n_max;
//   2. completed and f_max >= C*  =>  an optimal solution is returned;
//   3. completed and f_max <  C*  =>  reports that no solution of cost
//      <= f_max exists (solution_found and is_incomplete both false);
//   4. expanded_nodes is always reported.
template <StateSpace S>
struct BoundedSearchResult {
  bool solution_found = false;
  bool is_incomplete = false;
  std::uint64_t expanded_nodes = 0;
  std::optional<Solution<S>> solution;
  // Largest f among paths actually expanded (0 if nothing was expanded) and
  // smallest f among paths pruned for exceeding the f-bound (infinity if
  // nothing was pruned). Together they delimit the f-window within which a
  // repeated search must expand the identical set.
  Cost max_f_expanded{};
  Cost min_f_pruned = Cost::infinity();

  bool completed() const { return !is_incomplete; }
};

template <typename E, typename S>
concept BoundedSearchEngine =
    StateSpace<S> && requires(E& e, const S& sp, Cost f_max, std::uint64_t n_max) {
      { e.run(sp, f_max, n_max) } -> std::same_as<BoundedSearchResult<S>>;
    };

}  // namespace ebs

#endif  // EBS_BOUNDED_SEARCH_HPP
