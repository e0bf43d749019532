#ifndef EBS_ASTAR_HPP
#define EBS_ASTAR_HPP

#include <chrono>
#include <cstdint>
#include <queue>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ebs/bounded_search.hpp"
#include "ebs/cost.hpp"
#include "ebs/search_space.hpp"

namespace ebs {

struct AstarOptions {
  // Cooperative resource guard; an exhausted budget is reported, not thrown.
  std::uint64_t max_expansions = kNoLimit;
};

template <StateSpace S>
struct AstarResult {
  std::optional<Solution<S>> solution;
  SearchStats stats;
  bool out_of_budget = false;
};

// A* with duplicate detection and reopening: a closed state reached by a
// strictly cheaper path goes back on open and may be re-expanded, which keeps
// the result optimal for admissible but inconsistent heuristics.
// Re-expansions count. Tie-breaking on equal f: lower g first, then
// last-in-first-out.
template <StateSpace S>
AstarResult<S> astar(const S& space, const AstarOptions& opts = {},
                     const Deadline* deadline = nullptr) {
  using State = typename S::State;
  using Action = typename S::Action;

  struct Node {
    Cost best_g{};
    Cost h{};
    bool has_parent = false;
    Action parent_action{};
    State parent_state{};
  };
  struct Entry {
    Cost f;
    Cost g;
    std::uint64_t seq;
    State state;
  };
  struct Worse {
    bool operator()(const Entry& a, const Entry& b) const {
      if (a.f != b.f) return a.f > b.f;
      if (a.g != b.g) return a.g > b.g;
      return a.seq < b.seq;  // LIFO on full ties
    }
  };

  AstarResult<S> out;
  auto t0 = std::chrono::steady_clock::now();
  Instrumented<S> sp(space, out.stats, deadline);

  std::unordered_map<State, Node, typename S::StateHash> nodes;
  if (opts.max_expansions != kNoLimit && opts.max_expansions <= (1u << 22)) {
    nodes.reserve(2 * opts.max_expansions);  // capped runs skip the rehashes
  }
  std::priority_queue<Entry, std::vector<Entry>, Worse> open;
  std::uint64_t seq = 0;
  std::uint64_t expanded = 0;

  State s0 = sp.init();
  Cost h0 = sp.h(s0);
  nodes.emplace(s0, Node{Cost{}, h0});
  open.push(Entry{h0, Cost{}, seq++, s0});

  while (!open.empty()) {
    Entry e = open.top();
    open.pop();
    if (e.g > nodes.at(e.state).best_g) continue;  // stale
    if (sp.is_goal(e.state)) {
      Solution<S> sol;
      sol.cost = e.g;
      sol.path.g = e.g;
      sol.path.start = s0;
      std::vector<Step<S>> rev;
      State cur = e.state;
      while (!(cur == s0)) {
        const Node& nd = nodes.at(cur);
        rev.push_back({nd.parent_action, cur});
        cur = nd.parent_state;
      }
      sol.path.steps.assign(rev.rbegin(), rev.rend());
      out.solution = std::move(sol);
      break;
    }
    if (expanded == opts.max_expansions) {
      out.out_of_budget = true;
      break;
    }
    ++expanded;
    for (const auto& tr : sp.succ(e.state)) {
      Cost g2 = e.g + sp.cost(tr.action);
      auto it = nodes.find(tr.state);
      if (it == nodes.end()) {
        Cost h2 = sp.h(tr.state);
        Node nd{g2, h2};
        nd.has_parent = true;
        nd.parent_action = tr.action;
        nd.parent_state = e.state;
        nodes.emplace(tr.state, std::move(nd));
        open.push(Entry{g2 + h2, g2, seq++, tr.state});
      } else if (g2 < it->second.best_g) {
        Node& nd = it->second;
        nd.best_g = g2;  // reopens closed states implicitly
        nd.has_parent = true;
        nd.parent_action = tr.action;
        nd.parent_state = e.state;
        open.push(Entry{g2 + nd.h, g2, seq++, tr.state});
      }
    }
  }

  out.stats.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

// ---------------------------------------------------------------------------
// Float comparison mode (raw-cost baseline parity)

struct FloatTolerance {
  double epsilon = 1e-6;
};

// Same capability surface as StateSpace but with raw real-valued costs.
template <typename S>
concept FloatStateSpace =
    requires(const S& sp, const typename S::State& s, const typename S::Action& a) {
      typename S::State;
      typename S::Action;
      typename S::StateHash;
      requires std::equality_comparable<typename S::State>;
      { sp.init() } -> std::same_as<typename S::State>;
      { sp.is_goal(s) } -> std::same_as<bool>;
      { sp.succ(s) };
      { sp.cost(a) } -> std::same_as<double>;
      { sp.h(s) } -> std::same_as<double>;
    };

template <FloatStateSpace S>
struct FloatAstarResult {
  bool solved = false;
  double cost = 0.0;
  std::uint64_t expansions = 0;
  bool out_of_budget = false;
};

// A* over raw float costs, comparing with a tolerance the way the fixed-point
// baselines do: f and g values within epsilon are treated as equal for
// ordering, and reopening requires an improvement of more than epsilon.
template <FloatStateSpace S>
FloatAstarResult<S> astar_float(const S& sp, FloatTolerance tol = {},
                                std::uint64_t max_expansions = kNoLimit) {
  using State = typename S::State;

  struct Node {
    double best_g;
  };
  struct Entry {
    double f;
    double g;
    std::uint64_t seq;
    State state;
  };
  const double eps = tol.epsilon;
  struct Worse {
    double eps;
    bool operator()(const Entry& a, const Entry& b) const {
      if (a.f < b.f - eps) return false;
      if (b.f < a.f - eps) return true;
      if (a.g < b.g - eps) return false;
      if (b.g < a.g - eps) return true;
      return a.seq < b.seq;
    }
  };

  FloatAstarResult<S> out;
  std::unordered_map<State, Node, typename S::StateHash> nodes;
  std::priority_queue<Entry, std::vector<Entry>, Worse> open(Worse{eps});
  std::uint64_t seq = 0;

  State s0 = sp.init();
  nodes.emplace(s0, Node{0.0});
  open.push(Entry{sp.h(s0), 0.0, seq++, s0});

  while (!open.empty()) {
    Entry e = open.top();
    open.pop();
    if (e.g > nodes.at(e.state).best_g + eps) continue;
    if (sp.is_goal(e.state)) {
      out.solved = true;
      out.cost = e.g;
      return out;
    }
    if (out.expansions == max_expansions) {
      out.out_of_budget = true;
      return out;
    }
    ++out.expansions;
    for (const auto& tr : sp.succ(e.state)) {
      double g2 = e.g + sp.cost(tr.action);
      auto it = nodes.find(tr.state);
      if (it == nodes.end()) {
        nodes.emplace(tr.state, Node{g2});
        open.push(Entry{g2 + sp.h(tr.state), g2, seq++, tr.state});
      } else if (g2 < it->second.best_g - eps) {
        it->second.best_g = g2;
        open.push(Entry{g2 + sp.h(tr.state), g2, seq++, tr.state});
      }
    }
  }
  return out;
}

}  // namespace ebs

#endif  // EBS_ASTAR_HPP
