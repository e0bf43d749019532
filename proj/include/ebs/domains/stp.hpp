#ifndef EBS_DOMAINS_STP_HPP
#define EBS_DOMAINS_STP_HPP

#include <array>
#include <cstdint>
#include <utility>

#include "ebs/cost.hpp"
#include "ebs/search_space.hpp"

namespace ebs {

// 4x4 sliding-tile board, position-indexed: tiles[pos] = tile at pos, 0 is
// the blank. Goal is the identity permutation (blank in the top-left corner).
struct TilePuzzleState {
  std::array<std::uint8_t, 16> tiles{};
  std::uint8_t blank = 0;

  friend bool operator==(const TilePuzzleState& a, const TilePuzzleState& b) {
    return a.tiles == b.tiles;
  }
  std::uint64_t packed() const {
    std::uint64_t key = 0;
    for (int i = 0; i < 16; ++i) key |= static_cast<std::uint64_t>(tiles[i]) << (4 * i);
    return key;
  }
};

struct TilePuzzleStateHash {
  std::size_t operator()(const TilePuzzleState& s) const noexcept {
    std::uint64_t x = s.packed();
    // splitmix64 finalizer
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return static_cast<std::size_t>(x ^ (x >> 31));
  }
};

enum class TileDir : std::uint8_t { Up = 0, Left = 1, Right = 2, Down = 3 };

struct TileMove {
  std::uint8_t tile;  // the tile that slides into the blank
  TileDir dir;        // direction the blank moves

  friend bool operator==(const TileMove&, const TileMove&) = default;
};

// Weighted 15-puzzle: moving tile t costs 1 + 1/(1+t), discretized once at
// construction. The heuristic is Manhattan distance priced per tile with the
// same discretized move costs, which keeps it admissible and consistent.
// Successor order is frozen (blank Up, Left, Right, Down); expansion counts
// depend on it.
class StpSpace {
 public:
  using State = TilePuzzleState;
  using Action = TileMove;
  using StateHash = TilePuzzleStateHash;

  StpSpace(TilePuzzleState start, std::uint64_t resolution);

  struct SuccRange {
    std::array<Transition<Action, State>, 4> items;
    std::size_t count = 0;
    const Transition<Action, State>* begin() const { return items.data(); }
    const Transition<Action, State>* end() const { return items.data() + count; }
    std::size_t size() const { return count; }
  };

  State init() const { return start_; }
  bool is_goal(const State& s) const {
    for (int i = 0; i < 16; ++i) {
      if (s.tiles[i] != i) return false;
    }
    return true;
  }
  SuccRange succ(const State& s) const;
  Cost cost(const Action& a) const { return tile_cost_[a.tile]; }
  Cost h(const State& s) const;
  bool undoes(const Action& prev, const Action& next) const {
    return static_cast<std::uint8_t>(prev.dir) + static_cast<std::uint8_t>(next.dir) == 3;
  }

  Cost tile_cost(std::uint8_t tile) const { return tile_cost_[tile]; }
  std::uint64_t resolution() const { return resolution_; }

  // Exact rational move cost: (num(tile), kRawCostDen) with
  // num(t) = den * (1 + 1/(1+t)). lcm(2..16) keeps everything integral.
  static constexpr std::uint64_t kRawCostDen = 720720;
  static std::uint64_t raw_cost_num(std::uint8_t tile) {
    return kRawCostDen + kRawCostDen / (1 + std::uint64_t{tile});
  }

  static bool solvable(const TilePuzzleState& s);
  static TilePuzzleState goal_state();
  static TilePuzzleState make_state(const std::array<std::uint8_t, 16>& tiles);

 private:
  TilePuzzleState start_;
  std::uint64_t resolution_;
  std::array<Cost, 16> tile_cost_{};
  // weighted_md_[pos][tile]: tile's Manhattan distance from pos to its goal
  // square, priced at that tile's move cost
  std::array<std::array<Cost, 16>, 16> weighted_md_{};
};

static_assert(StateSpace<StpSpace>);

// Raw-cost adapter for the float comparison mode of the baselines.
class StpFloatSpace {
 public:
  using State = TilePuzzleState;
  using Action = TileMove;
  using StateHash = TilePuzzleStateHash;

  explicit StpFloatSpace(TilePuzzleState start) : int_space_(std::move(start), 1) {}

  State init() const { return int_space_.init(); }
  bool is_goal(const State& s) const { return int_space_.is_goal(s); }
  StpSpace::SuccRange succ(const State& s) const { return int_space_.succ(s); }
  double cost(const Action& a) const { return 1.0 + 1.0 / (1.0 + a.tile); }
  double h(const State& s) const;

 private:
  StpSpace int_space_;
};

}  // namespace ebs

#endif  // EBS_DOMAINS_STP_HPP
