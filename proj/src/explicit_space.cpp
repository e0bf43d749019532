#include "ebs/explicit_space.hpp"

#include <ostream>
#include <stdexcept>

namespace ebs {

ExplicitSpace::ExplicitSpace(std::uint32_t n_states, State init_state)
    : init_(init_state), adj_(n_states), h_(n_states, Cost{}), goal_(n_states, false) {
  if (init_state >= n_states) throw std::invalid_argument("init state out of range");
}

ExplicitSpace::Action ExplicitSpace::add_edge(State from, State to, Cost cost) {
  if (from >= n_states() || to >= n_states()) throw std::invalid_argument("edge endpoint out of range");
  Action id = static_cast<Action>(edges_.size());
  edges_.push_back(Edge{from, to, cost});
  adj_[from].push_back({id, to});
  return id;
}

void ExplicitSpace::set_h(State s, Cost h) { h_.at(s) = h; }

void ExplicitSpace::set_goal(State s, bool is_goal) { goal_.at(s) = is_goal; }

std::uint32_t ExplicitSpace::goal_count() const {
  std::uint32_t n = 0;
  for (bool g : goal_) n += g ? 1 : 0;
  return n;
}

void ExplicitSpace::dump(std::ostream& os) const {
  for (const Edge& e : edges_) {
    os << e.from << ' ' << e.to << ' ' << e.cost.value() << '\n';
  }
  os << "# h\n";
  for (std::uint32_t s = 0; s < n_states(); ++s) {
    os << s << ' ' << h_[s].value() << '\n';
  }
}

}  // namespace ebs
