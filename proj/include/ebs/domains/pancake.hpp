#ifndef EBS_DOMAINS_PANCAKE_HPP
#define EBS_DOMAINS_PANCAKE_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "ebs/cost.hpp"
#include "ebs/search_space.hpp"

namespace ebs {

// Pancake stack, top first: v[0] is the topmost pancake. Goal is 1..n sorted
// with 1 on top; the plate below the stack counts as pancake n+1.
struct PancakeState {
  static constexpr std::uint8_t kMaxN = 24;
  std::array<std::uint8_t, kMaxN> v{};
  std::uint8_t n = 0;

  friend bool operator==(const PancakeState& a, const PancakeState& b) {
    if (a.n != b.n) return false;
    for (std::uint8_t i = 0; i < a.n; ++i) {
      if (a.v[i] != b.v[i]) return false;
    }
    return true;
  }
};

struct PancakeStateHash {
  std::size_t operator()(const PancakeState& s) const noexcept {
    std::uint64_t x = 0xcbf29ce484222325ULL;  // FNV-1a
    for (std::uint8_t i = 0; i < s.n; ++i) {
      x ^= s.v[i];
      x *= 0x100000001b3ULL;
    }
    return static_cast<std::size_t>(x);
  }
};

// Weighted pancake puzzle: flipping the top f pancakes costs 1 + f/(10N).
// The heuristic is the GAP count (adjacent positions, plate included, whose
// values differ by more than 1) priced at the cheapest unit 1.0; every flip
// costs at least that and closes at most one gap, so it stays admissible
// under the weighting (though not necessarily consistent). Successor order
// is frozen: flip sizes in increasing order.
class PancakeSpace {
 public:
  using State = PancakeState;
  using Action = std::uint8_t;  // flip size, 2..n
  using StateHash = PancakeStateHash;

  PancakeSpace(PancakeState start, std::uint64_t resolution);

  struct SuccRange {
    std::array<Transition<Action, State>, PancakeState::kMaxN> items;
    std::size_t count = 0;
    const Transition<Action, State>* begin() const { return items.data(); }
    const Transition<Action, State>* end() const { return items.data() + count; }
    std::size_t size() const { return count; }
  };

  State init() const { return start_; }
  bool is_goal(const State& s) const {
    for (std::uint8_t i = 0; i < s.n; ++i) {
      if (s.v[i] != i + 1) return false;
    }
    return true;
  }
  SuccRange succ(const State& s) const;
  Cost cost(const Action& a) const { return flip_cost_[a]; }
  Cost h(const State& s) const;
  bool undoes(const Action& prev, const Action& next) const { return prev == next; }

  std::uint8_t n() const { return start_.n; }
  std::uint64_t resolution() const { return resolution_; }
  Cost unit_cost() const { return unit_cost_; }

  // Exact rational flip cost: (10N + f) / 10N.
  std::uint64_t raw_cost_num(Action f) const { return 10ULL * start_.n + f; }
  std::uint64_t raw_cost_den() const { return 10ULL * start_.n; }

  static PancakeState sorted_state(std::uint8_t n);
  static PancakeState make_state(const std::vector<std::uint8_t>& stack);

 private:
  PancakeState start_;
  std::uint64_t resolution_;
  Cost unit_cost_{};
  std::array<Cost, PancakeState::kMaxN + 1> flip_cost_{};
};

static_assert(StateSpace<PancakeSpace>);

// Seeded uniform-random instances (Fisher-Yates over the library RNG so the
// sequence is identical on every platform).
std::vector<PancakeState> random_pancake_instances(std::size_t count, std::uint8_t n,
                                                   std::uint64_t seed);

// Raw-cost adapter for the float comparison mode.
class PancakeFloatSpace {
 public:
  using State = PancakeState;
  using Action = std::uint8_t;
  using StateHash = PancakeStateHash;

  explicit PancakeFloatSpace(PancakeState start) : int_space_(start, 1) {}

  State init() const { return int_space_.init(); }
  bool is_goal(const State& s) const { return int_space_.is_goal(s); }
  PancakeSpace::SuccRange succ(const State& s) const { return int_space_.succ(s); }
  double cost(const Action& a) const { return 1.0 + a / (10.0 * int_space_.n()); }
  double h(const State& s) const;

 private:
  PancakeSpace int_space_;
};

}  // namespace ebs

#endif  // EBS_DOMAINS_PANCAKE_HPP
