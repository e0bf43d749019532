#include "ebs/domains/mero.hpp"

#include <string>

#include "ebs/astar.hpp"
#include "ebs/bounded_dijkstra.hpp"
#include "ebs/oracle.hpp"

namespace ebs {

namespace {

#ifndef NDEBUG
void calibration_self_test(const MeroGraph& g) {
  // Exact-count self-check at construction; debug builds only, and only where
  // it is cheap. Larger k are covered by the test suites.
  if (g.k % 2 != 0 || g.k > 200) return;
  auto a = astar(g.space);
  if (!a.solution || a.solution->cost != g.optimal_cost) {
    throw CalibrationError("mero_graph: A* cost mismatch at k=" + std::to_string(g.k));
  }
  if (a.stats.expansions != MeroGraph::astar_expansion_formula(g.k)) {
    throw CalibrationError("mero_graph: A* expansions " + std::to_string(a.stats.expansions) +
                           " != closed form " +
                           std::to_string(MeroGraph::astar_expansion_formula(g.k)) +
                           " at k=" + std::to_string(g.k));
  }
  BoundedDijkstraEngine dij;
  auto o = oracle(g.space, dij, g.optimal_cost);
  if (o.stats.expansions != MeroGraph::oracle_expansions(g.k)) {
    throw CalibrationError("mero_graph: oracle expansions " + std::to_string(o.stats.expansions) +
                           " != " + std::to_string(MeroGraph::oracle_expansions(g.k)) +
                           " at k=" + std::to_string(g.k));
  }
}
#endif

}  // namespace

MeroGraph mero_graph(std::uint32_t k) {
  if (k < 1) throw std::invalid_argument("mero_graph: k must be >= 1");
  const std::uint32_t n = 2 * k + 3;
  const ExplicitSpace::State s = 0;
  auto t = [&](std::uint32_t i) { return 1 + i; };            // i = 0..k
  auto c = [&](std::uint32_t j) { return k + 2 + j; };        // j = 0..k-1
  const ExplicitSpace::State goal = 2 * k + 2;

  ExplicitSpace space(n, s);
  space.set_goal(goal);
  for (std::uint32_t i = 0; i <= k; ++i) {
    space.add_edge(s, t(i), Cost(1));
    space.add_edge(t(i), c(0), Cost(k + 1 - i));
    space.set_h(t(i), Cost(std::uint64_t{k} + i));
  }
  for (std::uint32_t j = 0; j + 1 < k; ++j) {
    space.add_edge(c(j), c(j + 1), Cost(1));
  }
  space.add_edge(c(k - 1), goal, Cost(k));

  MeroGraph g{std::move(space), k, Cost(2 * std::uint64_t{k} + 1)};
#ifndef NDEBUG
  calibration_self_test(g);
#endif
  return g;
}

}  // namespace ebs
