#ifndef EBS_DOMAINS_RANDOM_SPACE_HPP
#define EBS_DOMAINS_RANDOM_SPACE_HPP

#include <cstdint>

#include "ebs/explicit_space.hpp"

namespace ebs {

// Property-test generator: seeded random digraphs with known-admissible
// heuristics. Zero-cost edges only ever point "forward" in the state order,
// so every cycle has positive cost and depth-first search terminates.
struct RandomSpaceParams {
  enum class HeuristicMode {
    Zero,              // h = 0
    Exact,             // h = h*
    ConsistentSlack,   // h = max(0, floor(alpha*h*) - sigma), consistent
    InconsistentSlack  // per-state slack; admissible, often inconsistent
  };

  std::uint32_t n_states = 10;
  std::uint32_t max_cost = 5;      // per-edge cost range
  std::uint32_t edge_permille = 300;
  HeuristicMode mode = HeuristicMode::ConsistentSlack;
  std::uint32_t max_slack = 3;
  bool ensure_solvable = true;  // plant a path init -> goal
  bool make_goal = true;        // false: no goal states at all
};

ExplicitSpace random_space(std::uint64_t seed, const RandomSpaceParams& params = {});

// True heuristic h*(s) for every state (infinite where no goal is reachable),
// computed by exhaustive backward relaxation. Test support.
std::vector<Cost> true_distances(const ExplicitSpace& space);

// Edge-by-edge consistency test: h(from) <= cost + h(to) for every edge.
bool heuristic_consistent(const ExplicitSpace& space);

}  // namespace ebs

#endif  // EBS_DOMAINS_RANDOM_SPACE_HPP
