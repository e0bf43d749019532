#include "ebs/bench/runner.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <thread>
#include <utility>

#include "ebs/astar.hpp"
#include "ebs/bounded_dijkstra.hpp"
#include "ebs/dfbnb.hpp"
#include "ebs/domains/korf.hpp"
#include "ebs/domains/mero.hpp"
#include "ebs/domains/pancake.hpp"
#include "ebs/domains/random_space.hpp"
#include "ebs/domains/stp.hpp"
#include "ebs/ebsss.hpp"
#include "ebs/idastar.hpp"
#include "ebs/oracle.hpp"

namespace ebs::bench {

namespace {

EngineKind default_engine(Domain d) {
  return (d == Domain::Stp || d == Domain::Pancake) ? EngineKind::Dfbnb : EngineKind::Dijkstra;
}

template <StateSpace S, typename RawNumFn>
RunRecord run_instance(const S& space, const ExperimentConfig& cfg, std::string id,
                       RawNumFn raw_num_of, std::uint64_t raw_den,
                       std::optional<Cost> known_cstar) {
  RunRecord rec;
  rec.config_label = cfg.label();
  rec.domain = domain_name(cfg.domain);
  rec.resolution = cfg.resolution;
  rec.seed = cfg.seed;
  rec.instance_id = std::move(id);
  rec.raw_den = raw_den;

  std::optional<Deadline> dl;
  if (cfg.timeout_s > 0) dl = Deadline::after_seconds(cfg.timeout_s);
  const Deadline* dlp = dl ? &*dl : nullptr;

  auto fill_stats = [&rec](const SearchStats& st) {
    rec.expansions = st.expansions;
    rec.generations = st.generations;
    rec.heuristic_evals = st.heuristic_evals;
    rec.time_s = st.wall_time;
    rec.iters = st.iterations;
  };

  try {
    std::optional<Solution<S>> sol;
    switch (cfg.alg) {
      case Algorithm::Ebts: {
        DfbnbEngine engine;
        auto r = ebsss_search(space, engine, EbParams{cfg.c1, cfg.c2, cfg.delta}, dlp);
        fill_stats(r.stats);
        sol = std::move(r.solution);
        break;
      }
      case Algorithm::Ebgs: {
        BoundedDijkstraEngine engine;
        auto r = ebsss_search(space, engine, EbParams{cfg.c1, cfg.c2, cfg.delta}, dlp);
        fill_stats(r.stats);
        sol = std::move(r.solution);
        break;
      }
      case Algorithm::Astar: {
        auto r = astar(space, AstarOptions{cfg.max_expansions}, dlp);
        fill_stats(r.stats);
        if (r.out_of_budget) {
          rec.status = RunOutcome::Resource;
          return rec;
        }
        sol = std::move(r.solution);
        break;
      }
      case Algorithm::Idastar: {
        auto r = idastar(space, cfg.max_expansions, dlp);
        fill_stats(r.stats);
        if (r.out_of_budget) {
          rec.status = RunOutcome::Resource;
          return rec;
        }
        sol = std::move(r.solution);
        break;
      }
      case Algorithm::Oracle: {
        Cost cstar{};
        if (known_cstar) {
          cstar = *known_cstar;
        } else {
          // derive C* with a driver run; the oracle's own stats stay clean
          EbParams pre{Ratio{10, 1}, Ratio{20, 1}, std::max<std::uint64_t>(cfg.resolution, 1)};
          if (default_engine(cfg.domain) == EngineKind::Dfbnb) {
            DfbnbEngine e;
            auto r = ebsss_search(space, e, pre, dlp);
            if (!r.solution) {
              rec.status = RunOutcome::NoSolution;
              return rec;
            }
            cstar = r.solution->cost;
          } else {
            BoundedDijkstraEngine e;
            auto r = ebsss_search(space, e, pre, dlp);
            if (!r.solution) {
              rec.status = RunOutcome::NoSolution;
              return rec;
            }
            cstar = r.solution->cost;
          }
        }
        EngineKind kind = cfg.oracle_engine == EngineKind::DomainDefault ? default_engine(cfg.domain)
                                                                         : cfg.oracle_engine;
        if (kind == EngineKind::Dfbnb) {
          DfbnbEngine e;
          auto r = oracle(space, e, cstar, dlp);
          fill_stats(r.stats);
          sol = std::move(r.solution);
        } else {
          BoundedDijkstraEngine e;
          auto r = oracle(space, e, cstar, dlp);
          fill_stats(r.stats);
          sol = std::move(r.solution);
        }
        break;
      }
    }
    if (!sol) {
      rec.status = RunOutcome::NoSolution;
      return rec;
    }
    std::string why;
    if (!validate_solution(space, *sol, &why)) {
      throw IntegrityError("path replay failed for " + rec.instance_id + ": " + why);
    }
    rec.path_valid = true;
    rec.status = RunOutcome::Solved;
    rec.has_cost = true;
    rec.cost_int = sol->cost.value();
    std::uint64_t num = 0;
    for (const auto& step : sol->path.steps) num += raw_num_of(step.action);
    rec.raw_num = num;
  } catch (const SearchTimeout&) {
    rec.status = RunOutcome::Timeout;
  } catch (const std::bad_alloc&) {
    rec.status = RunOutcome::Resource;
  }
  return rec;
}

std::vector<RunRecord> run_parallel(std::vector<std::function<RunRecord()>> items, int workers) {
  std::vector<RunRecord> records(items.size());
  if (items.empty()) return records;
  workers = std::max(1, std::min<int>(workers, static_cast<int>(items.size())));
  if (workers == 1) {
    for (std::size_t i = 0; i < items.size(); ++i) records[i] = items[i]();
    return records;
  }
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= items.size()) return;
      records[i] = items[i]();
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) pool.emplace_back(work);
  for (auto& t : pool) t.join();
  return records;
}

SuiteResult finish(std::vector<RunRecord> records) {
  SuiteResult out;
  out.records = std::move(records);
  out.agg = aggregate(out.records);
  return out;
}

SuiteResult run_stp(const ExperimentConfig& cfg) {
  std::string path = cfg.data_file.empty() ? std::string("data/korf100.txt") : cfg.data_file;
  auto all = load_korf_instances(path);
  std::vector<std::function<RunRecord()>> items;
  for (std::uint32_t i = cfg.first; i <= cfg.last && i < all.size(); ++i) {
    items.push_back([&cfg, inst = all[i], i] {
      StpSpace space(inst, cfg.resolution);
      return run_instance(space, cfg, "korf-" + std::to_string(i + 1),
                          [](const TileMove& a) { return StpSpace::raw_cost_num(a.tile); },
                          StpSpace::kRawCostDen, std::nullopt);
    });
  }
  return finish(run_parallel(std::move(items), cfg.workers));
}

SuiteResult run_pancake(const ExperimentConfig& cfg) {
  auto all = random_pancake_instances(std::size_t{cfg.last} + 1, cfg.pancake_n, cfg.seed);
  std::vector<std::function<RunRecord()>> items;
  for (std::uint32_t i = cfg.first; i <= cfg.last && i < all.size(); ++i) {
    items.push_back([&cfg, inst = all[i], i] {
      PancakeSpace space(inst, cfg.resolution);
      return run_instance(space, cfg,
                          "pan" + std::to_string(cfg.pancake_n) + "-" + std::to_string(i),
                          [&space](std::uint8_t f) { return space.raw_cost_num(f); },
                          10ULL * cfg.pancake_n, std::nullopt);
    });
  }
  return finish(run_parallel(std::move(items), cfg.workers));
}

SuiteResult run_mero(const ExperimentConfig& cfg) {
  std::vector<std::function<RunRecord()>> items;
  for (std::uint32_t k : cfg.ks) {
    items.push_back([&cfg, k] {
      MeroGraph g = mero_graph(k);
      const ExplicitSpace& space = g.space;
      return run_instance(space, cfg, "k=" + std::to_string(k),
                          [&space](ExplicitSpace::Action a) { return space.cost(a).value(); },
                          1, g.optimal_cost);
    });
  }
  return finish(run_parallel(std::move(items), cfg.workers));
}

SuiteResult run_random(const ExperimentConfig& cfg) {
  std::vector<std::function<RunRecord()>> items;
  for (std::uint32_t i = cfg.first; i <= cfg.last; ++i) {
    items.push_back([&cfg, i] {
      ExplicitSpace space = random_space(cfg.seed + i);
      return run_instance(space, cfg, "seed-" + std::to_string(cfg.seed + i),
                          [&space](ExplicitSpace::Action a) { return space.cost(a).value(); }, 1,
                          std::nullopt);
    });
  }
  return finish(run_parallel(std::move(items), cfg.workers));
}

std::string rational_decimal(std::uint64_t num, std::uint64_t den) {
  std::string out = std::to_string(num / den);
  std::uint64_t rem = num % den;
  if (den == 1) return out;
  out += '.';
  for (int i = 0; i < 9; ++i) {
    rem *= 10;
    out += static_cast<char>('0' + rem / den);
    rem %= den;
  }
  return out;
}

std::string fixed3(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  return buf;
}

std::string phase_name(Phase p) {
  switch (p) {
    case Phase::Main:
      return "main";
    case Phase::Exponential:
      return "exponential";
    case Phase::Binary:
      return "binary";
  }
  return "?";
}

std::string probe_name(ProbeStatus s) {
  switch (s) {
    case ProbeStatus::TooLow:
      return "too_low";
    case ProbeStatus::TooHigh:
      return "too_high";
    case ProbeStatus::Good:
      return "good";
    case ProbeStatus::Solved:
      return "solved";
    case ProbeStatus::NoSolution:
      return "no_solution";
  }
  return "?";
}

std::string limit_str(std::uint64_t v) { return v == kNoLimit ? "inf" : std::to_string(v); }

}  // namespace

SuiteResult run_suite(const ExperimentConfig& cfg) {
  switch (cfg.domain) {
    case Domain::Stp:
      return run_stp(cfg);
    case Domain::Pancake:
      return run_pancake(cfg);
    case Domain::Mero:
      return run_mero(cfg);
    case Domain::Random:
      return run_random(cfg);
  }
  throw std::logic_error("unreachable");
}

void emit_csv(const std::vector<RunRecord>& records, std::ostream& os) {
  os << "alg,domain,resolution,seed,instance,status,cost_raw,cost_int,expansions,generations,"
        "heval,time_s\n";
  for (const auto& r : records) {
    os << r.config_label << ',' << r.domain << ',' << r.resolution << ',' << r.seed << ','
       << r.instance_id << ',' << outcome_name(r.status) << ',';
    if (r.has_cost) {
      os << rational_decimal(r.raw_num, r.raw_den) << ',' << r.cost_int;
    } else {
      os << ',';
    }
    os << ',' << r.expansions << ',' << r.generations << ',' << r.heuristic_evals << ','
       << fixed3(r.time_s) << '\n';
  }
}

void emit_iters_csv(const std::vector<RunRecord>& records, std::ostream& os) {
  os << "instance,phase,f_max,n_min,n_max,expanded,status,cache_hit\n";
  for (const auto& r : records) {
    for (const auto& it : r.iters) {
      os << r.instance_id << ',' << phase_name(it.phase) << ',' << it.f_max.value() << ','
         << limit_str(it.n_min) << ',' << limit_str(it.n_max) << ',' << it.expanded << ','
         << probe_name(it.status) << ',' << (it.cache_hit ? 1 : 0) << '\n';
    }
  }
}

void emit_table(const std::vector<RunRecord>& records, Domain domain, std::ostream& os) {
  bool scaled = domain == Domain::Stp || domain == Domain::Pancake;
  os << "| Alg. | Solved | Exp. | Gen. | Time (s) |\n";
  os << "|---|---|---|---|---|\n";
  // one aggregate row per distinct config label, in first-appearance order
  std::vector<std::string> labels;
  for (const auto& r : records) {
    bool known = false;
    for (const auto& l : labels) {
      if (l == r.config_label) {
        known = true;
        break;
      }
    }
    if (!known) labels.push_back(r.config_label);
  }
  for (const auto& label : labels) {
    std::vector<RunRecord> group;
    for (const auto& r : records) {
      if (r.config_label == label) group.push_back(r);
    }
    Aggregate a = aggregate(group);
    os << "| " << label << " | " << a.solved << " | ";
    if (scaled) {
      char buf[64];
      std::snprintf(buf, sizeof(buf), "%.1f", static_cast<double>(a.expansions) / 1e6);
      os << buf << " | ";
      std::snprintf(buf, sizeof(buf), "%.1f", static_cast<double>(a.generations) / 1e6);
      os << buf << " | ";
    } else {
      os << a.expansions << " | " << a.generations << " | ";
    }
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.1f", a.time_s);
    os << buf << " |\n";
  }
}

}  // namespace ebs::bench
