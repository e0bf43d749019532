#ifndef EBS_COST_HPP
#define EBS_COST_HPP

#include <cmath>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ebs {

class OverflowError : public std::runtime_error {
 public:
  explicit OverflowError(const std::string& what) : std::runtime_error(what) {}
};

// Non-negative integer search cost with an infinity sentinel. Finite values
// occupy [0, 2^63); any arithmetic that would leave that range throws instead
// of wrapping. All g/h/f values and f-bounds in the library are Costs.
class Cost {
 public:
  static constexpr std::uint64_t kMaxFinite = (std::uint64_t{1} << 63) - 1;

  constexpr Cost() = default;
  constexpr explicit Cost(std::uint64_t v) : v_(v) {
    if (v > kMaxFinite) throw OverflowError("finite cost out of 63-bit range");
  }

  static constexpr Cost infinity() {
    Cost c;
    c.v_ = kInfValue;
    return c;
  }

  constexpr bool is_infinite() const { return v_ == kInfValue; }
  constexpr bool is_finite() const { return v_ != kInfValue; }

  // Finite value accessor; infinity has no numeric value.
  constexpr std::uint64_t value() const {
    if (is_infinite()) throw OverflowError("value() on infinite cost");
    return v_;
  }

  friend constexpr bool operator==(Cost a, Cost b) = default;
  friend constexpr auto operator<=>(Cost a, Cost b) { return a.v_ <=> b.v_; }

  friend constexpr Cost operator+(Cost a, Cost b) {
    if (a.is_infinite() || b.is_infinite()) return infinity();
    std::uint64_t s = a.v_ + b.v_;  // cannot wrap: both <= 2^63-1
    if (s > kMaxFinite) throw OverflowError("cost addition overflows 63 bits");
    Cost c;
    c.v_ = s;
    return c;
  }

  Cost& operator+=(Cost o) { return *this = *this + o; }

 private:
  static constexpr std::uint64_t kInfValue = ~std::uint64_t{0};
  std::uint64_t v_ = 0;
};

constexpr Cost min_cost(Cost a, Cost b) { return a < b ? a : b; }
constexpr Cost max_cost(Cost a, Cost b) { return a < b ? b : a; }

// Round-to-nearest conversion of a raw real cost into integer units, ties away
// from zero. This is the only place real-valued domain costs enter the system.
Cost discretize(double raw, std::uint64_t resolution);

// Exact rational multiplier for the driver's expansion-window bounds
// (c1, c2 in Algorithm parlance). Parsed from "2", "5", "3/2", "10/3".
struct Ratio {
  std::uint64_t num = 1;
  std::uint64_t den = 1;

  static Ratio parse(std::string_view text);
  double as_double() const { return static_cast<double>(num) / static_cast<double>(den); }
  bool greater_than_one() const { return num > den; }
  std::string str() const;

  friend bool operator==(const Ratio&, const Ratio&) = default;
};

// true iff a <= b as rationals
bool ratio_le(const Ratio& a, const Ratio& b);

// ceil(r * n) computed exactly in integers.
std::uint64_t ceil_scaled(const Ratio& r, std::uint64_t n);

}  // namespace ebs

#endif  // EBS_COST_HPP
