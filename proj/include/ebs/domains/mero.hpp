#ifndef EBS_DOMAINS_MERO_HPP
#define EBS_DOMAINS_MERO_HPP

#include <cstdint>
#include <stdexcept>

#include "ebs/cost.hpp"
#include "ebs/explicit_space.hpp"

namespace ebs {

class CalibrationError : public std::runtime_error {
 public:
  explicit CalibrationError(const std::string& what) : std::runtime_error(what) {}
};

// Inconsistent-heuristic graph family on which A*-style search is quadratic.
//
// Layout (2k+2 expandable states plus the goal):
//   s --1--> t_i                    i = 0..k, h(t_i) = k+i
//   t_i --(k+1-i)--> c_0            successively cheaper entries to the chain
//   c_j --1--> c_{j+1}              j = 0..k-2, h = 0
//   c_{k-1} --k--> goal             C* = 2k+1
//
// Each t_i is expanded in increasing-f order and reopens the already-closed
// chain head with a cheaper g, forcing the chain to be re-expanded as far as
// the next t's f-value allows: partial cascades in the first half, full ones
// in the second. For even k this makes A* (lowest f, then lowest g, then
// LIFO) perform exactly (3/4)k^2 + (3/2)k + 2 expansions, while a g-ordered
// search at f_max = C* expands every non-goal state exactly once: 2k+2.
struct MeroGraph {
  ExplicitSpace space;
  std::uint32_t k;
  Cost optimal_cost;  // 2k+1

  static std::uint64_t astar_expansion_formula(std::uint32_t k) {
    std::uint64_t kk = k;
    return 3 * kk * kk / 4 + 3 * kk / 2 + 2;  // even k
  }
  static std::uint64_t oracle_expansions(std::uint32_t k) { return 2 * std::uint64_t{k} + 2; }
};

MeroGraph mero_graph(std::uint32_t k);

}  // namespace ebs

#endif  // EBS_DOMAINS_MERO_HPP
