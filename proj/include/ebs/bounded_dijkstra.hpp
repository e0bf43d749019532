#ifndef EBS_BOUNDED_DIJKSTRA_HPP
#define EBS_BOUNDED_DIJKSTRA_HPP

#include <cstdint>
#include <queue>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ebs/bounded_search.hpp"
#include "ebs/cost.hpp"
#include "ebs/search_space.hpp"

namespace ebs {

// f-bounded Dijkstra; the graph-search BoundedSearch used by EBGS. Ordered by
// g with a closed set, so each state is expanded at most once per invocation
// and the first goal popped is optimal regardless of h's consistency. A
// generated path with g + h > f_max is pruned and recorded in min_f_pruned.
// Ties on g pop in last-in-first-out insertion order.
struct BoundedDijkstraEngine {
  template <StateSpace S>
  BoundedSearchResult<S> run(const S& sp, Cost f_max, std::uint64_t n_max) const {
    using State = typename S::State;
    using Action = typename S::Action;

    struct Node {
      Cost best_g{};
      Cost h{};
      bool closed = false;
      bool has_parent = false;
      Action parent_action{};
      State parent_state{};
    };
    struct Entry {
      Cost g;
      std::uint64_t seq;
      State state;
    };
    struct Worse {
      bool operator()(const Entry& a, const Entry& b) const {
        if (a.g != b.g) return a.g > b.g;
        return a.seq < b.seq;  // LIFO among equal g
      }
    };

    BoundedSearchResult<S> r;
    std::unordered_map<State, Node, typename S::StateHash> nodes;
    std::priority_queue<Entry, std::vector<Entry>, Worse> open;
    std::uint64_t seq = 0;
    std::uint64_t expanded = 0;
    Cost max_f_expanded{};
    Cost min_f_pruned = Cost::infinity();

    auto finish = [&](BoundedSearchResult<S>& out) {
      out.expanded_nodes = expanded;
      out.max_f_expanded = max_f_expanded;
      out.min_f_pruned = min_f_pruned;
    };

    State s0 = sp.init();
    Cost h0 = sp.h(s0);
    if (h0 > f_max) {
      r.min_f_pruned = h0;
      return r;  // even the empty path exceeds the bound
    }
    nodes.emplace(s0, Node{Cost{}, h0});
    open.push(Entry{Cost{}, seq++, s0});

    while (!open.empty()) {
      Entry e = open.top();
      open.pop();
      auto it = nodes.find(e.state);
      Node& nd = it->second;
      if (nd.closed || e.g > nd.best_g) continue;  // stale entry
      if (sp.is_goal(e.state)) {
        r.solution_found = true;
        r.solution = reconstruct<S>(nodes, s0, e.state, e.g);
        finish(r);
        return r;
      }
      if (expanded == n_max) {
        r.is_incomplete = true;  // real work remained
        finish(r);
        return r;
      }
      nd.closed = true;
      max_f_expanded = max_cost(max_f_expanded, e.g + nd.h);
      ++expanded;
      for (const auto& tr : sp.succ(e.state)) {
        Cost g2 = e.g + sp.cost(tr.action);
        auto cit = nodes.find(tr.state);
        if (cit == nodes.end()) {
          Cost h2 = sp.h(tr.state);
          if (g2 + h2 > f_max) {
            // Not closed out for good: a cheaper path may still fit the bound.
            min_f_pruned = min_cost(min_f_pruned, g2 + h2);
            continue;
          }
          Node child{g2, h2};
          child.has_parent = true;
          child.parent_action = tr.action;
          child.parent_state = e.state;
          nodes.emplace(tr.state, std::move(child));
          open.push(Entry{g2, seq++, tr.state});
        } else {
          Node& child = cit->second;
          if (child.closed || g2 >= child.best_g) continue;
          if (g2 + child.h > f_max) {
            min_f_pruned = min_cost(min_f_pruned, g2 + child.h);
            continue;
          }
          child.best_g = g2;
          child.has_parent = true;
          child.parent_action = tr.action;
          child.parent_state = e.state;
          open.push(Entry{g2, seq++, tr.state});
        }
      }
    }

    finish(r);
    return r;  // open exhausted: no solution of cost <= f_max
  }

 private:
  template <StateSpace S, typename Nodes>
  static Solution<S> reconstruct(const Nodes& nodes, const typename S::State& start,
                                 const typename S::State& goal, Cost g) {
    Solution<S> sol;
    sol.cost = g;
    sol.path.g = g;
    sol.path.start = start;
    std::vector<Step<S>> rev;
    typename S::State cur = goal;
    while (!(cur == start)) {
      const auto& nd = nodes.at(cur);
      rev.push_back({nd.parent_action, cur});
      cur = nd.parent_state;
    }
    sol.path.steps.assign(rev.rbegin(), rev.rend());
    return sol;
  }
};

}  // namespace ebs

#endif  // EBS_BOUNDED_DIJKSTRA_HPP
