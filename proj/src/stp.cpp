#include "ebs/domains/stp.hpp"

#include <cstdlib>
#include <stdexcept>

namespace ebs {

namespace {

inline int row_of(int pos) { return pos / 4; }
inline int col_of(int pos) { return pos % 4; }

inline int manhattan(int from, int to) {
  return std::abs(row_of(from) - row_of(to)) + std::abs(col_of(from) - col_of(to));
}

}  // namespace

StpSpace::StpSpace(TilePuzzleState start, std::uint64_t resolution)
    : start_(start), resolution_(resolution) {
  if (!solvable(start)) throw std::invalid_argument("StpSpace: unsolvable instance");
  for (int t = 1; t < 16; ++t) {
    tile_cost_[t] = discretize(1.0 + 1.0 / (1.0 + t), resolution);
  }
  for (int pos = 0; pos < 16; ++pos) {
    for (int t = 1; t < 16; ++t) {
      std::uint64_t d = manhattan(pos, t);
      weighted_md_[pos][t] = Cost(d * tile_cost_[t].value());
    }
  }
}

StpSpace::SuccRange StpSpace::succ(const State& s) const {
  SuccRange out;
  const int b = s.blank;
  auto push = [&](int from_pos, TileDir dir) {
    State next = s;
    std::uint8_t tile = next.tiles[from_pos];
    next.tiles[b] = tile;
    next.tiles[from_pos] = 0;
    next.blank = static_cast<std::uint8_t>(from_pos);
    out.items[out.count++] = {TileMove{tile, dir}, next};
  };
  // frozen order: blank moves Up, Left, Right, Down
  if (row_of(b) > 0) push(b - 4, TileDir::Up);
  if (col_of(b) > 0) push(b - 1, TileDir::Left);
  if (col_of(b) < 3) push(b + 1, TileDir::Right);
  if (row_of(b) < 3) push(b + 4, TileDir::Down);
  return out;
}

Cost StpSpace::h(const State& s) const {
  Cost total{};
  for (int pos = 0; pos < 16; ++pos) {
    std::uint8_t t = s.tiles[pos];
    if (t != 0) total += weighted_md_[pos][t];
  }
  return total;
}

bool StpSpace::solvable(const TilePuzzleState& s) {
  // Every blank move is one transposition and changes the blank's Manhattan
  // distance from home by one, so their parities must agree with the goal's.
  std::array<bool, 16> seen{};
  int transpositions = 0;
  for (int i = 0; i < 16; ++i) {
    if (seen[i]) continue;
    int len = 0;
    int j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = s.tiles[j];
      ++len;
    }
    transpositions ^= (len - 1) & 1;
  }
  int blank_md = manhattan(s.blank, 0) & 1;
  return transpositions == blank_md;
}

TilePuzzleState StpSpace::goal_state() {
  TilePuzzleState s;
  for (int i = 0; i < 16; ++i) s.tiles[i] = static_cast<std::uint8_t>(i);
  s.blank = 0;
  return s;
}

TilePuzzleState StpSpace::make_state(const std::array<std::uint8_t, 16>& tiles) {
  TilePuzzleState s;
  s.tiles = tiles;
  std::array<bool, 16> seen{};
  int blank = -1;
  for (int i = 0; i < 16; ++i) {
    if (tiles[i] > 15 || seen[tiles[i]]) throw std::invalid_argument("not a permutation of 0..15");
    seen[tiles[i]] = true;
    if (tiles[i] == 0) blank = i;
  }
  s.blank = static_cast<std::uint8_t>(blank);
  return s;
}

double StpFloatSpace::h(const State& s) const {
  double total = 0.0;
  for (int pos = 0; pos < 16; ++pos) {
    std::uint8_t t = s.tiles[pos];
    if (t != 0) total += manhattan(pos, t) * (1.0 + 1.0 / (1.0 + t));
  }
  return total;
}

}  // namespace ebs
