#ifndef EBS_CACHED_ENGINE_HPP
#define EBS_CACHED_ENGINE_HPP

#include <cstdint>
#include <optional>
#include <utility>

#include "ebs/bounded_search.hpp"
#include "ebs/search_space.hpp"

namespace ebs {

// Remembers the single most recent invocation and answers from it whenever
// the result for the current arguments is provably identical:
//   - identical (f_max, n_max): engines are deterministic;
//   - same f_max, cached run completed, new budget >= its expansion count:
//     a completed search is budget-independent;
//   - f-window: cached run completed without a solution, and the new bound
//     sits in [cached f_max, cached min_f_pruned) with budget >= the cached
//     expansion count. Nothing has an f-value inside that window, so the
//     searched set cannot change.
// Hits perform no search and therefore add nothing to the statistics.
template <StateSpace S, typename E>
  requires BoundedSearchEngine<E, S>
class CachedEngine {
 public:
  explicit CachedEngine(E& engine) : engine_(&engine) {}

  BoundedSearchResult<S> run(const S& sp, Cost f_max, std::uint64_t n_max) {
    last_hit_ = false;
    if (cache_) {
      const Entry& c = *cache_;
      bool completed = c.result.completed();
      bool hit = (f_max == c.f_max && n_max == c.n_max) ||
                 (f_max == c.f_max && completed && n_max >= c.result.expanded_nodes) ||
                 (completed && !c.result.solution_found && f_max >= c.f_max &&
                  f_max < c.result.min_f_pruned && n_max >= c.result.expanded_nodes);
      if (hit) {
        last_hit_ = true;
        return c.result;
      }
    }
    BoundedSearchResult<S> r = engine_->run(sp, f_max, n_max);
    cache_ = Entry{f_max, n_max, r};
    return r;
  }

  bool last_was_cache_hit() const { return last_hit_; }
  void reset() {
    cache_.reset();
    last_hit_ = false;
  }

 private:
  struct Entry {
    Cost f_max;
    std::uint64_t n_max;
    BoundedSearchResult<S> result;
  };

  E* engine_;
  std::optional<Entry> cache_;
  bool last_hit_ = false;
};

}  // namespace ebs

#endif  // EBS_CACHED_ENGINE_HPP
