#ifndef EBS_BENCH_RUNNER_HPP
#define EBS_BENCH_RUNNER_HPP

#include <iosfwd>
#include <vector>

#include "ebs/bench/config.hpp"

namespace ebs::bench {

struct SuiteResult {
  std::vector<RunRecord> records;
  Aggregate agg;
};

// Runs every instance the config selects, validates each returned path by
// replaying it, and aggregates totals. Per-instance timeouts and resource
// failures are recorded, never abort the suite.
SuiteResult run_suite(const ExperimentConfig& cfg);

// header + one row per record; stable column order
void emit_csv(const std::vector<RunRecord>& records, std::ostream& os);
// per-iteration logs (sibling ".iters.csv" of the main output)
void emit_iters_csv(const std::vector<RunRecord>& records, std::ostream& os);
// aggregate markdown table (Alg. | Solved | Exp. | Gen. | Time); expansions
// and generations are scaled by 10^6 for the stp/pancake domains
void emit_table(const std::vector<RunRecord>& records, Domain domain, std::ostream& os);

}  // namespace ebs::bench

#endif  // EBS_BENCH_RUNNER_HPP
