#ifndef EBS_EXPLICIT_SPACE_HPP
#define EBS_EXPLICIT_SPACE_HPP

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <vector>

#include "ebs/cost.hpp"
#include "ebs/search_space.hpp"

namespace ebs {

// Explicit directed graph with per-state heuristic table. States are dense
// indices, actions are global edge ids; succ order is edge insertion order.
class ExplicitSpace {
 public:
  using State = std::uint32_t;
  using Action = std::uint32_t;
  struct StateHash {
    std::size_t operator()(State s) const noexcept { return std::hash<std::uint32_t>{}(s); }
  };

  struct Edge {
    State from;
    State to;
    Cost cost;
  };

  ExplicitSpace(std::uint32_t n_states, State init_state);

  Action add_edge(State from, State to, Cost cost);
  void set_h(State s, Cost h);
  void set_goal(State s, bool is_goal = true);

  State init() const { return init_; }
  bool is_goal(State s) const { return goal_[s]; }
  const std::vector<Transition<Action, State>>& succ(State s) const { return adj_[s]; }
  Cost cost(Action a) const { return edges_[a].cost; }
  Cost h(State s) const { return h_[s]; }
  bool undoes(Action, Action) const { return false; }

  std::uint32_t n_states() const { return static_cast<std::uint32_t>(adj_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  std::uint32_t goal_count() const;

  // One "src dst cost" line per edge, then "# h" and one "state value" line
  // per state, for external verification.
  void dump(std::ostream& os) const;

 private:
  State init_;
  std::vector<std::vector<Transition<Action, State>>> adj_;
  std::vector<Edge> edges_;
  std::vector<Cost> h_;
  std::vector<bool> goal_;
};

static_assert(StateSpace<ExplicitSpace>);

}  // namespace ebs

#endif  // EBS_EXPLICIT_SPACE_HPP
