#include "ebs/domains/random_space.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <vector>

namespace ebs {

namespace {

// Bellman-Ford style backward relaxation toward the goal set. Fine at
// generator scale; keeps this independent of the forward search code.
std::vector<Cost> distances_to_goal(const ExplicitSpace& space) {
  const std::uint32_t n = space.n_states();
  std::vector<Cost> d(n, Cost::infinity());
  for (std::uint32_t s = 0; s < n; ++s) {
    if (space.is_goal(s)) d[s] = Cost{};
  }
  for (std::uint32_t pass = 0; pass < n; ++pass) {
    bool changed = false;
    for (const auto& e : space.edges()) {
      if (d[e.to].is_infinite()) continue;
      Cost via = e.cost + d[e.to];
      if (via < d[e.from]) {
        d[e.from] = via;
        changed = true;
      }
    }
    if (!changed) break;
  }
  return d;
}

}  // namespace

std::vector<Cost> true_distances(const ExplicitSpace& space) { return distances_to_goal(space); }

bool heuristic_consistent(const ExplicitSpace& space) {
  for (const auto& e : space.edges()) {
    if (space.h(e.from) > e.cost + space.h(e.to)) return false;
  }
  return true;
}

ExplicitSpace random_space(std::uint64_t seed, const RandomSpaceParams& p) {
  if (p.n_states < 2) throw std::invalid_argument("random_space: need at least 2 states");
  std::mt19937_64 rng(seed);
  auto draw = [&](std::uint64_t m) { return static_cast<std::uint32_t>(rng() % m); };

  const std::uint32_t n = p.n_states;
  const ExplicitSpace::State goal = n - 1;
  ExplicitSpace space(n, 0);
  if (p.make_goal) space.set_goal(goal);

  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (draw(1000) >= p.edge_permille) continue;
      // forward edges may be free, back edges never are: positive cycles
      std::uint64_t c = i < j ? draw(p.max_cost + 1) : 1 + draw(p.max_cost);
      space.add_edge(i, j, Cost(c));
    }
  }

  if (p.ensure_solvable && p.make_goal) {
    // plant a strictly increasing path 0 -> ... -> goal
    std::uint32_t cur = 0;
    while (cur != goal) {
      std::uint32_t nxt = cur + 1 + draw(goal - cur);
      space.add_edge(cur, nxt, Cost(draw(p.max_cost) + 1));
      cur = nxt;
    }
  }

  auto hstar = distances_to_goal(space);
  using Mode = RandomSpaceParams::HeuristicMode;
  std::uint32_t global_slack = draw(p.max_slack + 1);
  std::uint32_t alpha_quarters = 1 + draw(4);  // h* scaled by 1/4 .. 4/4
  std::uint64_t max_assigned = 0;
  for (std::uint32_t s = 0; s < n; ++s) {
    if (hstar[s].is_infinite()) continue;
    std::uint64_t exact = hstar[s].value();
    std::uint64_t hval = 0;
    switch (p.mode) {
      case Mode::Zero:
        hval = 0;
        break;
      case Mode::Exact:
        hval = exact;
        break;
      case Mode::ConsistentSlack: {
        std::uint64_t scaled = exact * alpha_quarters / 4;
        hval = scaled > global_slack ? scaled - global_slack : 0;
        break;
      }
      case Mode::InconsistentSlack: {
        std::uint64_t slack = draw(p.max_slack + 1);
        hval = exact > slack ? exact - slack : 0;
        break;
      }
    }
    space.set_h(s, Cost(hval));
    max_assigned = std::max(max_assigned, hval);
  }
  if (p.mode != Mode::Zero) {
    // Dead ends (h* infinite) take a uniformly large finite value; 0 would
    // make edges into them inconsistent, and any finite value is admissible.
    Cost dead_h{max_assigned + p.max_cost + 1};
    for (std::uint32_t s = 0; s < n; ++s) {
      if (hstar[s].is_infinite()) space.set_h(s, dead_h);
    }
  }
  return space;
}

}  // namespace ebs
