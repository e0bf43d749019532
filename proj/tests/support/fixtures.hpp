#ifndef EBS_TESTS_FIXTURES_HPP
#define EBS_TESTS_FIXTURES_HPP

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "ebs/bounded_search.hpp"
#include "ebs/explicit_space.hpp"

namespace ebs::testing {

// Canonical micro-fixture G1: A=0 (init), B=1, C=2, G=3 (goal).
// Edges A->B (1), A->C (3), B->G (3), C->G (1); succ lists B-edges first.
// h = {2, 3, 1, 0}. C* = 4 with two optimal paths.
inline ExplicitSpace make_g1() {
  ExplicitSpace g(4, 0);
  g.add_edge(0, 1, Cost(1));
  g.add_edge(0, 2, Cost(3));
  g.add_edge(1, 3, Cost(3));
  g.add_edge(2, 3, Cost(1));
  g.set_h(0, Cost(2));
  g.set_h(1, Cost(3));
  g.set_h(2, Cost(1));
  g.set_goal(3);
  return g;
}

// G2: two paths meeting in one state, so S+ < P+.
// A=0 -> B=1 -> D=3 -> G=4 and A -> C=2 -> D; all edges cost 1, h = 0.
inline ExplicitSpace make_g2() {
  ExplicitSpace g(5, 0);
  g.add_edge(0, 1, Cost(1));
  g.add_edge(0, 2, Cost(1));
  g.add_edge(1, 3, Cost(1));
  g.add_edge(2, 3, Cost(1));
  g.add_edge(3, 4, Cost(1));
  g.set_goal(4);
  return g;
}

// Unit-cost chain 0 -> 1 -> ... -> n with h = 0; C* = n.
inline ExplicitSpace make_unit_chain(std::uint32_t n) {
  ExplicitSpace g(n + 1, 0);
  for (std::uint32_t i = 0; i < n; ++i) g.add_edge(i, i + 1, Cost(1));
  g.set_goal(n);
  return g;
}

// Engine stub whose behavior per f-bound is a test fixture: completes with a
// given expansion count, runs out of budget, or reports a solution.
struct ScriptedEngine {
  struct Behavior {
    enum Kind { Complete, Incomplete, Solve } kind = Complete;
    std::uint64_t expansions = 0;  // Complete: exact count; Solve: count
    std::uint64_t sol_cost = 0;
  };

  std::map<std::uint64_t, Behavior> by_f;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> calls;  // (f, n_max)

  template <StateSpace S>
  BoundedSearchResult<S> run(const S& sp, Cost f_max, std::uint64_t n_max) {
    calls.emplace_back(f_max.value(), n_max);
    BoundedSearchResult<S> r;
    auto it = by_f.find(f_max.value());
    if (it == by_f.end()) throw std::logic_error("ScriptedEngine: unexpected f-bound");
    const Behavior& b = it->second;
    switch (b.kind) {
      case Behavior::Complete:
        r.expanded_nodes = b.expansions;
        // a completed, solution-free search leaves a pruned frontier
        r.min_f_pruned = f_max + Cost(1);
        break;
      case Behavior::Incomplete:
        r.is_incomplete = true;
        r.expanded_nodes = n_max;
        break;
      case Behavior::Solve: {
        r.solution_found = true;
        r.expanded_nodes = b.expansions;
        Solution<S> sol;
        sol.path.start = sp.init();
        sol.path.g = Cost(b.sol_cost);
        sol.cost = Cost(b.sol_cost);
        r.solution = std::move(sol);
        break;
      }
    }
    return r;
  }

  bool last_was_cache_hit() const { return false; }
};

}  // namespace ebs::testing

#endif  // EBS_TESTS_FIXTURES_HPP
