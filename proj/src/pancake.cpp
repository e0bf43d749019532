#include "ebs/domains/pancake.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace ebs {

namespace {

int gap_count(const PancakeState& s) {
  int gaps = 0;
  for (std::uint8_t i = 0; i + 1 < s.n; ++i) {
    int d = int{s.v[i]} - int{s.v[i + 1]};
    if (d > 1 || d < -1) ++gaps;
  }
  // plate boundary: the bottom pancake should sit next to virtual pancake n+1
  if (s.n > 0 && s.v[s.n - 1] != s.n) ++gaps;
  return gaps;
}

}  // namespace

PancakeSpace::PancakeSpace(PancakeState start, std::uint64_t resolution)
    : start_(start), resolution_(resolution) {
  if (start.n < 2 || start.n > PancakeState::kMaxN) {
    throw std::invalid_argument("PancakeSpace: n out of range");
  }
  unit_cost_ = discretize(1.0, resolution);
  for (std::uint32_t f = 2; f <= start.n; ++f) {
    flip_cost_[f] = discretize(1.0 + static_cast<double>(f) / (10.0 * start.n), resolution);
  }
}

PancakeSpace::SuccRange PancakeSpace::succ(const State& s) const {
  SuccRange out;
  for (std::uint8_t f = 2; f <= s.n; ++f) {
    State next = s;
    std::reverse(next.v.begin(), next.v.begin() + f);
    out.items[out.count++] = {f, next};
  }
  return out;
}

Cost PancakeSpace::h(const State& s) const {
  return Cost(static_cast<std::uint64_t>(gap_count(s)) * unit_cost_.value());
}

PancakeState PancakeSpace::sorted_state(std::uint8_t n) {
  PancakeState s;
  s.n = n;
  for (std::uint8_t i = 0; i < n; ++i) s.v[i] = i + 1;
  return s;
}

PancakeState PancakeSpace::make_state(const std::vector<std::uint8_t>& stack) {
  if (stack.size() < 2 || stack.size() > PancakeState::kMaxN) {
    throw std::invalid_argument("pancake stack size out of range");
  }
  PancakeState s;
  s.n = static_cast<std::uint8_t>(stack.size());
  std::array<bool, PancakeState::kMaxN + 1> seen{};
  for (std::size_t i = 0; i < stack.size(); ++i) {
    std::uint8_t v = stack[i];
    if (v < 1 || v > s.n || seen[v]) throw std::invalid_argument("not a permutation of 1..n");
    seen[v] = true;
    s.v[i] = v;
  }
  return s;
}

std::vector<PancakeState> random_pancake_instances(std::size_t count, std::uint8_t n,
                                                   std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<PancakeState> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    PancakeState s = PancakeSpace::sorted_state(n);
    for (std::uint8_t i = n; i > 1; --i) {  // hand-rolled Fisher-Yates, stable across stdlibs
      std::uint8_t j = static_cast<std::uint8_t>(rng() % i);
      std::swap(s.v[i - 1], s.v[j]);
    }
    out.push_back(s);
  }
  return out;
}

double PancakeFloatSpace::h(const State& s) const {
  return static_cast<double>(gap_count(s)) * 1.0;
}

}  // namespace ebs
