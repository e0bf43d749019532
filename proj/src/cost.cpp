#include "ebs/cost.hpp"

#include <charconv>

namespace ebs {

Cost discretize(double raw, std::uint64_t resolution) {
  if (!(raw >= 0.0)) throw std::invalid_argument("discretize: raw cost must be >= 0");
  if (resolution == 0) throw std::invalid_argument("discretize: resolution must be positive");
  double scaled = raw * static_cast<double>(resolution);
  if (scaled > static_cast<double>(Cost::kMaxFinite)) {
    throw OverflowError("discretize: scaled cost exceeds 63-bit range");
  }
  // llround rounds half away from zero, the tie rule we want.
  return Cost(static_cast<std::uint64_t>(std::llround(scaled)));
}

namespace {

std::uint64_t parse_u64(std::string_view s) {
  std::uint64_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size()) {
    throw std::invalid_argument("bad rational component: '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

Ratio Ratio::parse(std::string_view text) {
  Ratio r;
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    r.num = parse_u64(text);
    r.den = 1;
  } else {
    r.num = parse_u64(text.substr(0, slash));
    r.den = parse_u64(text.substr(slash + 1));
  }
  if (r.den == 0) throw std::invalid_argument("rational with zero denominator");
  return r;
}

std::string Ratio::str() const {
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

bool ratio_le(const Ratio& a, const Ratio& b) {
  return static_cast<unsigned __int128>(a.num) * b.den <=
         static_cast<unsigned __int128>(b.num) * a.den;
}

std::uint64_t ceil_scaled(const Ratio& r, std::uint64_t n) {
  unsigned __int128 prod = static_cast<unsigned __int128>(r.num) * n;
  unsigned __int128 q = (prod + r.den - 1) / r.den;
  if (q > Cost::kMaxFinite) throw OverflowError("ceil_scaled overflows 63 bits");
  return static_cast<std::uint64_t>(q);
}

}  // namespace ebs
