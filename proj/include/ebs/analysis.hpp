#ifndef EBS_ANALYSIS_HPP
#define EBS_ANALYSIS_HPP

#include <cstdint>
#include <queue>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "ebs/cost.hpp"
#include "ebs/dfbnb.hpp"
#include "ebs/search_space.hpp"

namespace ebs {

class EnumerationGuardError : public std::runtime_error {
 public:
  explicit EnumerationGuardError(const std::string& what) : std::runtime_error(what) {}
};

// Ground-truth optimal cost: plain Dijkstra over the reachable graph, no
// heuristic involved. Only for spaces small enough to enumerate.
template <StateSpace S>
Cost brute_force_cstar(const S& sp, std::uint64_t max_states = 1'000'000) {
  using State = typename S::State;
  struct Entry {
    Cost g;
    std::uint64_t seq;
    State state;
  };
  struct Worse {
    bool operator()(const Entry& a, const Entry& b) const {
      if (a.g != b.g) return a.g > b.g;
      return a.seq < b.seq;
    }
  };
  std::unordered_map<State, Cost, typename S::StateHash> best;
  std::unordered_set<State, typename S::StateHash> closed;
  std::priority_queue<Entry, std::vector<Entry>, Worse> open;
  std::uint64_t seq = 0;

  State s0 = sp.init();
  best.emplace(s0, Cost{});
  open.push(Entry{Cost{}, seq++, s0});
  while (!open.empty()) {
    Entry e = open.top();
    open.pop();
    if (closed.contains(e.state) || e.g > best.at(e.state)) continue;
    if (sp.is_goal(e.state)) return e.g;
    closed.insert(e.state);
    if (closed.size() > max_states) {
      throw EnumerationGuardError("brute_force_cstar: state guard exceeded");
    }
    for (const auto& tr : sp.succ(e.state)) {
      Cost g2 = e.g + sp.cost(tr.action);
      auto it = best.find(tr.state);
      if (it == best.end()) {
        best.emplace(tr.state, g2);
        open.push(Entry{g2, seq++, tr.state});
      } else if (g2 < it->second) {
        it->second = g2;
        open.push(Entry{g2, seq++, tr.state});
      }
    }
  }
  return Cost::infinity();
}

struct PromisingCounts {
  std::uint64_t p_star = 0;  // goal-free paths with f <  C*
  std::uint64_t p_plus = 0;  // goal-free paths with f <= C*
  std::uint64_t s_star = 0;  // states reached by some highly promising path
  std::uint64_t s_plus = 0;  // states reached by some promising path
  Cost c_star{};
};

namespace detail {

template <StateSpace S>
class PromisingEnumerator {
 public:
  PromisingEnumerator(const S& sp, Cost c_star, std::uint64_t max_paths)
      : sp_(sp), c_star_(c_star), max_paths_(max_paths) {}

  PromisingCounts run() {
    counts_.c_star = c_star_;
    visit(sp_.init(), Cost{});
    counts_.s_star = star_states_.size();
    counts_.s_plus = plus_states_.size();
    return counts_;
  }

 private:
  using State = typename S::State;

  // Enumerates every path from init whose running g stays within C* (f >= g,
  // so nothing beyond can qualify) and that contains no goal state. A path
  // counts when its own f is within the bound; its extensions are explored
  // regardless, because f may dip back down under an inconsistent heuristic.
  void visit(const State& s, Cost g) {
    if (sp_.is_goal(s)) return;  // paths through goals never count or extend
    Cost f = g + sp_.h(s);
    if (f <= c_star_) {
      ++counts_.p_plus;
      plus_states_.insert(s);
      if (f < c_star_) {
        ++counts_.p_star;
        star_states_.insert(s);
      }
      if (counts_.p_plus > max_paths_) {
        throw EnumerationGuardError("enumerate_promising: path guard exceeded");
      }
    }
    auto [it, fresh] = on_stack_.try_emplace(s);
    for (Cost prior : it->second) {
      if (prior == g) {
        throw EnumerationGuardError(
            "enumerate_promising: zero-cost cycle within the bound; path count is infinite");
      }
    }
    it->second.push_back(g);
    for (const auto& tr : sp_.succ(s)) {
      Cost g2 = g + sp_.cost(tr.action);
      if (g2 > c_star_) continue;  // no extension can come back under
      visit(tr.state, g2);
    }
    on_stack_.at(s).pop_back();
  }

  const S& sp_;
  Cost c_star_;
  std::uint64_t max_paths_;
  PromisingCounts counts_;
  std::unordered_set<State, typename S::StateHash> star_states_;
  std::unordered_set<State, typename S::StateHash> plus_states_;
  std::unordered_map<State, std::vector<Cost>, typename S::StateHash> on_stack_;
};

}  // namespace detail

// Exhaustive enumeration of promising / highly promising paths and states
// (P+, P*, S+, S*) for a given optimal cost. Fails loudly on zero-cost cycles
// inside the bound, where the counts would be infinite.
template <StateSpace S>
PromisingCounts enumerate_promising(const S& sp, Cost c_star,
                                    std::uint64_t max_paths = 50'000'000) {
  return detail::PromisingEnumerator<S>(sp, c_star, max_paths).run();
}

}  // namespace ebs

#endif  // EBS_ANALYSIS_HPP
