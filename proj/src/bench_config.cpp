#include "ebs/bench/config.hpp"

#include <charconv>
#include <stdexcept>

namespace ebs::bench {

namespace {

std::string format_magnitude(std::uint64_t v) {
  // powers of ten print in the tables' exponent shorthand
  if (v >= 10) {
    std::uint64_t x = v;
    int exp = 0;
    while (x % 10 == 0) {
      x /= 10;
      ++exp;
    }
    if (x == 1 && exp > 0) return "1e" + std::to_string(exp);
  }
  return std::to_string(v);
}

std::uint32_t parse_u32(const std::string& s) {
  std::uint32_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size()) {
    throw std::invalid_argument("bad integer: '" + s + "'");
  }
  return v;
}

}  // namespace

std::string ExperimentConfig::label() const {
  switch (alg) {
    case Algorithm::Astar:
      return "A*";
    case Algorithm::Idastar:
      return "IDA*";
    case Algorithm::Oracle:
      return "Oracle";
    case Algorithm::Ebts:
      return "EBTS(" + c1.str() + "," + c2.str() + "," + format_magnitude(resolution) + "," +
             format_magnitude(delta) + ")";
    case Algorithm::Ebgs:
      if (domain == Domain::Mero) {  // integer-cost domain: no resolution in the label
        return "EBGS(" + c1.str() + "," + c2.str() + "," + std::to_string(delta) + ")";
      }
      return "EBGS(" + c1.str() + "," + c2.str() + "," + format_magnitude(resolution) + "," +
             format_magnitude(delta) + ")";
  }
  return "?";
}

std::string domain_name(Domain d) {
  switch (d) {
    case Domain::Stp:
      return "stp";
    case Domain::Pancake:
      return "pancake";
    case Domain::Mero:
      return "mero";
    case Domain::Random:
      return "random";
  }
  return "?";
}

Domain parse_domain(const std::string& name) {
  if (name == "stp") return Domain::Stp;
  if (name == "pancake") return Domain::Pancake;
  if (name == "mero") return Domain::Mero;
  if (name == "random") return Domain::Random;
  throw std::invalid_argument("unknown domain: " + name);
}

Algorithm parse_algorithm(const std::string& name) {
  if (name == "ebts") return Algorithm::Ebts;
  if (name == "ebgs") return Algorithm::Ebgs;
  if (name == "astar" || name == "a*") return Algorithm::Astar;
  if (name == "idastar" || name == "ida*") return Algorithm::Idastar;
  if (name == "oracle") return Algorithm::Oracle;
  throw std::invalid_argument("unknown algorithm: " + name);
}

void parse_instances(const std::string& text, ExperimentConfig& cfg) {
  if (text.rfind("k=", 0) == 0) {
    cfg.ks.clear();
    std::string rest = text.substr(2);
    std::size_t pos = 0;
    while (pos < rest.size()) {
      std::size_t comma = rest.find(',', pos);
      if (comma == std::string::npos) comma = rest.size();
      cfg.ks.push_back(parse_u32(rest.substr(pos, comma - pos)));
      pos = comma + 1;
    }
    if (cfg.ks.empty()) throw std::invalid_argument("empty k list");
    return;
  }
  std::size_t dots = text.find("..");
  if (dots == std::string::npos) {
    cfg.first = cfg.last = parse_u32(text);
    return;
  }
  cfg.first = parse_u32(text.substr(0, dots));
  cfg.last = parse_u32(text.substr(dots + 2));
  if (cfg.last < cfg.first) throw std::invalid_argument("instance span end before start");
}

std::string outcome_name(RunOutcome o) {
  switch (o) {
    case RunOutcome::Solved:
      return "solved";
    case RunOutcome::Timeout:
      return "timeout";
    case RunOutcome::Resource:
      return "resource";
    case RunOutcome::NoSolution:
      return "no_solution";
  }
  return "?";
}

Aggregate aggregate(const std::vector<RunRecord>& records) {
  Aggregate a;
  a.total = records.size();
  for (const auto& r : records) {
    if (r.status == RunOutcome::Solved) ++a.solved;
    a.expansions += r.expansions;
    a.generations += r.generations;
    a.heuristic_evals += r.heuristic_evals;
    a.time_s += r.time_s;
  }
  return a;
}

}  // namespace ebs::bench
