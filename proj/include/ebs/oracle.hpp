#ifndef EBS_ORACLE_HPP
#define EBS_ORACLE_HPP

#include <chrono>
#include <stdexcept>
#include <utility>

#include "ebs/bounded_search.hpp"
#include "ebs/cost.hpp"
#include "ebs/search_space.hpp"

namespace ebs {

class IntegrityError : public std::runtime_error {
 public:
  explicit IntegrityError(const std::string& what) : std::runtime_error(what) {}
};

template <StateSpace S>
struct OracleResult {
  Solution<S> solution;
  SearchStats stats;
};

// Baseline that is handed the optimal cost and only has to prove that nothing
// cheaper exists: a single engine run at f_max = C* with an unbounded budget.
// An engine that disagrees with the supplied cost signals a bug (or a wrong
// C*) and is treated as an integrity failure.
template <StateSpace S, typename E>
  requires BoundedSearchEngine<E, Instrumented<S>>
OracleResult<S> oracle(const S& space, E& engine, Cost c_star,
                       const Deadline* deadline = nullptr) {
  OracleResult<S> out;
  auto t0 = std::chrono::steady_clock::now();
  Instrumented<S> sp(space, out.stats, deadline);
  auto r = engine.run(sp, c_star, kNoLimit);
  out.stats.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (!r.solution_found || !r.solution) {
    throw IntegrityError("oracle: engine found no solution at f_max = C*");
  }
  if (r.solution->cost != c_star) {
    throw IntegrityError("oracle: engine solution cost disagrees with supplied C*");
  }
  out.solution = std::move(*r.solution);
  return out;
}

}  // namespace ebs

#endif  // EBS_ORACLE_HPP
