#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ebs/bench/config.hpp"
#include "ebs/bench/runner.hpp"
#include "ebs/domains/mero.hpp"

namespace {

// Soft report only; nothing is enforced.
long peak_rss_kb() {
  std::ifstream status("/proc/self/status");
  std::string line;
  while (std::getline(status, line)) {
    if (line.rfind("VmHWM:", 0) == 0) {
      std::istringstream ss(line.substr(6));
      long kb = 0;
      ss >> kb;
      return kb;
    }
  }
  return -1;
}

struct CliOptions {
  ebs::bench::ExperimentConfig cfg;
  std::string alg;
  std::string instances;
  std::string c1 = "2";
  std::string c2 = "5";
  std::string out;
  std::string dump_graph;
  bool table = false;
};

void add_common(CLI::App* sub, CliOptions& o) {
  sub->add_option("--alg", o.alg, "algorithm: ebts | ebgs | astar | idastar | oracle")->required();
  sub->add_option("--c1", o.c1, "expansion lower-bound factor (rational, e.g. 2 or 3/2)");
  sub->add_option("--c2", o.c2, "expansion upper-bound factor (rational)");
  sub->add_option("--delta", o.cfg.delta, "initial exponential probe step");
  sub->add_option("--resolution", o.cfg.resolution, "cost discretization multiplier");
  sub->add_option("--instances", o.instances, "index span a..b, or k=100,1000 for mero");
  sub->add_option("--seed", o.cfg.seed, "instance generator seed");
  sub->add_option("--timeout", o.cfg.timeout_s, "per-instance wall-clock limit (seconds)");
  sub->add_option("--max-expansions", o.cfg.max_expansions,
                  "cooperative expansion cap for astar/idastar");
  sub->add_option("--out", o.out, "CSV output path (iteration logs go to <out>.iters.csv)");
  sub->add_option("--workers", o.cfg.workers, "parallel instance workers");
  sub->add_flag("--table", o.table, "print an aggregate markdown table");
}

int run(CliOptions& o) {
  o.cfg.alg = ebs::bench::parse_algorithm(o.alg);
  o.cfg.c1 = ebs::Ratio::parse(o.c1);
  o.cfg.c2 = ebs::Ratio::parse(o.c2);
  if (!o.instances.empty()) ebs::bench::parse_instances(o.instances, o.cfg);

  if (!o.dump_graph.empty()) {
    for (std::uint32_t k : o.cfg.ks) {
      std::ofstream f(o.dump_graph + (o.cfg.ks.size() > 1 ? "." + std::to_string(k) : ""));
      if (!f) {
        std::cerr << "cannot write " << o.dump_graph << "\n";
        return 2;
      }
      ebs::mero_graph(k).space.dump(f);
    }
  }

  auto result = ebs::bench::run_suite(o.cfg);

  if (!o.out.empty()) {
    std::ofstream f(o.out);
    if (!f) {
      std::cerr << "cannot write " << o.out << "\n";
      return 2;
    }
    ebs::bench::emit_csv(result.records, f);
    std::ofstream fi(o.out + ".iters.csv");
    if (!fi) {
      std::cerr << "cannot write " << o.out << ".iters.csv\n";
      return 2;
    }
    ebs::bench::emit_iters_csv(result.records, fi);
  } else {
    ebs::bench::emit_csv(result.records, std::cout);
  }
  if (o.table) {
    ebs::bench::emit_table(result.records, o.cfg.domain, std::cout);
  }

  std::size_t failures = 0;
  for (const auto& r : result.records) {
    if (r.status == ebs::bench::RunOutcome::Timeout ||
        r.status == ebs::bench::RunOutcome::Resource) {
      ++failures;
    }
  }
  std::cerr << result.agg.solved << "/" << result.agg.total << " solved, " << failures
            << " timed out or hit resource limits";
  if (long kb = peak_rss_kb(); kb > 0) std::cerr << "; peak rss " << kb / 1024 << " MB";
  std::cerr << "\n";
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"state-space search benchmark harness"};
  app.require_subcommand(1);

  CliOptions stp, pancake, mero, random;

  auto* s_stp = app.add_subcommand("stp", "weighted 4x4 sliding-tile puzzle");
  add_common(s_stp, stp);
  s_stp->add_option("--data", stp.cfg.data_file, "instance file (default data/korf100.txt)");
  stp.cfg.domain = ebs::bench::Domain::Stp;

  auto* s_pan = app.add_subcommand("pancake", "weighted pancake puzzle");
  add_common(s_pan, pancake);
  s_pan->add_option("--n", pancake.cfg.pancake_n, "stack size (default 20)");
  pancake.cfg.domain = ebs::bench::Domain::Pancake;

  auto* s_mero = app.add_subcommand("mero", "inconsistent-heuristic graph family");
  add_common(s_mero, mero);
  s_mero->add_option("--dump-graph", mero.dump_graph, "write adjacency + heuristic dump");
  mero.cfg.domain = ebs::bench::Domain::Mero;
  mero.cfg.ks = {100};

  auto* s_rand = app.add_subcommand("random", "seeded random digraphs");
  add_common(s_rand, random);
  random.cfg.domain = ebs::bench::Domain::Random;

  CLI11_PARSE(app, argc, argv);

  try {
    if (s_stp->parsed()) return run(stp);
    if (s_pan->parsed()) return run(pancake);
    if (s_mero->parsed()) return run(mero);
    if (s_rand->parsed()) return run(random);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
