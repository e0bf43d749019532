#ifndef EBS_BENCH_CONFIG_HPP
#define EBS_BENCH_CONFIG_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "ebs/bounded_search.hpp"
#include "ebs/cost.hpp"
#include "ebs/search_space.hpp"

namespace ebs::bench {

enum class Domain { Stp, Pancake, Mero, Random };
enum class Algorithm { Ebts, Ebgs, Astar, Idastar, Oracle };
enum class EngineKind { DomainDefault, Dfbnb, Dijkstra };

struct ExperimentConfig {
  Domain domain = Domain::Mero;
  Algorithm alg = Algorithm::Astar;
  Ratio c1{2, 1};
  Ratio c2{5, 1};
  std::uint64_t delta = 1;
  std::uint64_t resolution = 1'000'000;

  // instance selection: index span for stp/pancake/random, k list for mero
  std::uint32_t first = 0;
  std::uint32_t last = 0;
  std::vector<std::uint32_t> ks;

  std::uint64_t seed = 1;
  std::uint8_t pancake_n = 20;
  std::string data_file;  // stp instance file

  double timeout_s = 0.0;                    // <= 0: no limit
  std::uint64_t max_expansions = kNoLimit;   // cooperative resource guard
  int workers = 1;
  EngineKind oracle_engine = EngineKind::DomainDefault;

  // Row label echoing the parameter tuple, e.g. EBTS(2,5,1e6,1).
  std::string label() const;
};

Domain parse_domain(const std::string& name);
Algorithm parse_algorithm(const std::string& name);
std::string domain_name(Domain d);

// "a..b" index span, or "k=100,1000" size list.
void parse_instances(const std::string& text, ExperimentConfig& cfg);

enum class RunOutcome { Solved, Timeout, Resource, NoSolution };

std::string outcome_name(RunOutcome o);

struct RunRecord {
  std::string config_label;
  std::string domain;
  std::uint64_t resolution = 0;
  std::uint64_t seed = 0;
  std::string instance_id;
  RunOutcome status = RunOutcome::Solved;
  bool has_cost = false;
  std::uint64_t cost_int = 0;  // integer search units
  std::uint64_t raw_num = 0;   // exact rational raw cost
  std::uint64_t raw_den = 1;
  std::uint64_t expansions = 0;
  std::uint64_t generations = 0;
  std::uint64_t heuristic_evals = 0;
  double time_s = 0.0;
  bool path_valid = false;
  std::vector<IterationLog> iters;
};

struct Aggregate {
  std::size_t total = 0;
  std::size_t solved = 0;
  std::uint64_t expansions = 0;
  std::uint64_t generations = 0;
  std::uint64_t heuristic_evals = 0;
  double time_s = 0.0;
};

Aggregate aggregate(const std::vector<RunRecord>& records);

}  // namespace ebs::bench

#endif  // EBS_BENCH_CONFIG_HPP
