// Acceptance suite: runs every contract criterion at its stated tolerance and
// prints one pass/fail line per criterion. Exit code = number of failures.
//
// EBS_SKIP_SLOW=1 drops the k=10000 family check (75M expansions; seconds on
// a desktop, longer on weak hardware).

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "ebs/analysis.hpp"
#include "ebs/astar.hpp"
#include "ebs/bounded_dijkstra.hpp"
#include "ebs/cached_engine.hpp"
#include "ebs/dfbnb.hpp"
#include "ebs/domains/korf.hpp"
#include "ebs/domains/mero.hpp"
#include "ebs/domains/pancake.hpp"
#include "ebs/domains/random_space.hpp"
#include "ebs/domains/stp.hpp"
#include "ebs/ebsss.hpp"
#include "ebs/oracle.hpp"
#include "support/contract.hpp"
#include "support/fixtures.hpp"

using namespace ebs;

namespace {

int g_failures = 0;

class Timer {
 public:
  Timer() : t0_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count();
  }

 private:
  std::chrono::steady_clock::time_point t0_;
};

void report(int id, const std::string& name, bool pass, const std::string& detail, double secs) {
  if (!pass) ++g_failures;
  std::ostringstream line;
  line << (pass ? "[PASS] " : "[FAIL] ") << id << ". " << name;
  if (!detail.empty()) line << ": " << detail;
  line << " (" << std::fixed;
  line.precision(1);
  line << secs << "s)";
  std::cout << line.str() << std::endl;
}

// ---------------------------------------------------------------------------
// Shared random-space pool for criteria 4-6

struct PoolEntry {
  ExplicitSpace space;
  Cost cstar;
  PromisingCounts counts;
  bool consistent;
};

std::vector<PoolEntry> build_pool(std::size_t need) {
  std::vector<PoolEntry> pool;
  pool.reserve(need);
  std::uint64_t seed = 90000;
  const std::uint32_t sizes[] = {8, 10, 12};
  while (pool.size() < need) {
    ++seed;
    RandomSpaceParams p;
    p.n_states = sizes[seed % 3];
    p.mode = (seed % 2 == 0) ? RandomSpaceParams::HeuristicMode::ConsistentSlack
                             : RandomSpaceParams::HeuristicMode::InconsistentSlack;
    auto sp = random_space(seed, p);
    Cost cs = brute_force_cstar(sp);
    if (cs.is_infinite()) continue;
    PromisingCounts counts;
    try {
      counts = enumerate_promising(sp, cs, 100'000);
    } catch (const EnumerationGuardError&) {
      continue;  // keep the sweep budget bounded
    }
    if (counts.p_plus > 250) continue;
    bool consistent = heuristic_consistent(sp);
    pool.push_back(PoolEntry{std::move(sp), cs, counts, consistent});
  }
  return pool;
}

// ---------------------------------------------------------------------------
// Criteria

void criterion_1_mero_exact() {
  Timer t;
  std::ostringstream detail;
  bool pass = true;

  auto g100 = mero_graph(100);
  auto g1000 = mero_graph(1000);
  auto a100 = astar(g100.space);
  auto a1000 = astar(g1000.space);
  pass &= a100.stats.expansions == 7652;
  pass &= a1000.stats.expansions == 751502;
  BoundedDijkstraEngine dij;
  auto o100 = oracle(g100.space, dij, g100.optimal_cost);
  auto o1000 = oracle(g1000.space, dij, g1000.optimal_cost);
  pass &= o100.stats.expansions == 202;
  pass &= o1000.stats.expansions == 2002;
  detail << "A*: " << a100.stats.expansions << "/" << a1000.stats.expansions
         << " (want 7652/751502), oracle: " << o100.stats.expansions << "/"
         << o1000.stats.expansions << " (want 202/2002)";

  double anchor_secs = t.seconds();
  pass &= anchor_secs < 10.0;  // the k=100/1000 anchors carry the time budget

  {
    auto g10000 = mero_graph(10000);
    auto o10000 = oracle(g10000.space, dij, g10000.optimal_cost);
    pass &= o10000.stats.expansions == 20002;
    detail << ", k=10000 oracle: " << o10000.stats.expansions << " (want 20002)";
    if (const char* skip = std::getenv("EBS_SKIP_SLOW"); !(skip && skip[0] == '1')) {
      auto a10000 = astar(g10000.space);
      pass &= a10000.stats.expansions == 75015002;
      detail << ", A*: " << a10000.stats.expansions << " (want 75015002)";
    } else {
      detail << ", A* skipped (EBS_SKIP_SLOW=1)";
    }
  }
  report(1, "Mero exact expansion counts", pass, detail.str(), t.seconds());
}

void criterion_2_mero_closed_form() {
  Timer t;
  bool pass = true;
  std::ostringstream detail;
  for (std::uint32_t k : {10u, 50u, 300u}) {
    auto g = mero_graph(k);
    auto r = astar(g.space);
    std::uint64_t want = MeroGraph::astar_expansion_formula(k);
    if (r.stats.expansions != want) pass = false;
    detail << "k=" << k << ": " << r.stats.expansions << "/" << want << " ";
  }
  report(2, "Mero closed form (3/4)k^2+(3/2)k+2", pass, detail.str(), t.seconds());
}

void criterion_3_ebgs_growth() {
  Timer t;
  auto g100 = mero_graph(100);
  auto g1000 = mero_graph(1000);
  EbParams p251{Ratio{2, 1}, Ratio{5, 1}, 1};
  BoundedDijkstraEngine e1, e2;
  auto r100 = ebsss_search(g100.space, e1, p251);
  auto r1000 = ebsss_search(g1000.space, e2, p251);
  auto a100 = astar(g100.space);
  auto a1000 = astar(g1000.space);

  double ebgs_ratio =
      static_cast<double>(r1000.stats.expansions) / static_cast<double>(r100.stats.expansions);
  double astar_ratio =
      static_cast<double>(a1000.stats.expansions) / static_cast<double>(a100.stats.expansions);
  bool pass = ebgs_ratio < 20.0 && astar_ratio > 90.0;
  pass &= r100.solution && r100.solution->cost == g100.optimal_cost;
  pass &= r1000.solution && r1000.solution->cost == g1000.optimal_cost;

  // a second parameter point, reported alongside for comparison
  EbParams p2023{Ratio{10, 1}, Ratio{20, 1}, 3};
  BoundedDijkstraEngine e3, e4;
  auto q100 = ebsss_search(g100.space, e3, p2023);
  auto q1000 = ebsss_search(g1000.space, e4, p2023);

  std::ostringstream detail;
  detail.precision(1);
  detail << std::fixed << "EBGS(2,5,1): " << r100.stats.expansions << "/"
         << r1000.stats.expansions << " ratio " << ebgs_ratio << " (<20), A* ratio " << astar_ratio
         << " (>90); EBGS(10,20,3): " << q100.stats.expansions << "/" << q1000.stats.expansions;
  report(3, "EBGS sub-quadratic growth on the Mero family", pass, detail.str(), t.seconds());
}

void criterion_4_contract(const std::vector<PoolEntry>& pool) {
  Timer t;
  std::vector<std::string> violations;
  std::uint64_t runs = 0;
  for (const auto& e : pool) {
    DfbnbEngine d;
    auto v1 = testing::check_bounded_contract(e.space, d, e.cstar, e.counts.p_plus + 2, &runs);
    BoundedDijkstraEngine b;
    auto v2 = testing::check_bounded_contract(e.space, b, e.cstar, e.counts.p_plus + 2, &runs);
    violations.insert(violations.end(), v1.begin(), v1.end());
    violations.insert(violations.end(), v2.begin(), v2.end());
    if (violations.size() > 5) break;
  }
  double secs = t.seconds();
  bool pass = violations.empty() && secs < 60.0;
  std::ostringstream detail;
  detail << pool.size() << " spaces, " << runs << " engine runs";
  if (!violations.empty()) detail << "; first violation: " << violations.front();
  if (secs >= 60.0) detail << "; over the 60s budget";
  report(4, "BoundedSearch contract properties 1-4", pass, detail.str(), secs);
}

void criterion_5_expansion_bounds(const std::vector<PoolEntry>& pool) {
  Timer t;
  bool pass = true;
  std::size_t consistent_count = 0;
  std::string first_bad;
  for (const auto& e : pool) {
    DfbnbEngine d;
    auto rd = d.run(e.space, e.cstar, kNoLimit);
    BoundedDijkstraEngine b;
    auto rb = b.run(e.space, e.cstar, kNoLimit);
    bool ok = rd.expanded_nodes <= e.counts.p_plus && rb.expanded_nodes <= e.counts.s_plus;
    if (e.consistent) {
      ++consistent_count;
      ok = ok && rd.expanded_nodes >= e.counts.p_star && rb.expanded_nodes >= e.counts.s_star;
    }
    if (!ok && first_bad.empty()) {
      std::ostringstream os;
      os << "dfbnb " << rd.expanded_nodes << " in [" << e.counts.p_star << "," << e.counts.p_plus
         << "], dijkstra " << rb.expanded_nodes << " in [" << e.counts.s_star << ","
         << e.counts.s_plus << "]";
      first_bad = os.str();
    }
    pass &= ok;
  }
  pass &= consistent_count >= pool.size() / 4;
  std::ostringstream detail;
  detail << "P*/P+ and S*/S+ brackets at f=C* on " << pool.size() << " spaces ("
         << consistent_count << " consistent; lower bounds apply there)";
  if (!first_bad.empty()) detail << "; violation: " << first_bad;
  report(5, "Expansion-bound suite", pass, detail.str(), t.seconds());
}

void criterion_6_optimality(const std::vector<PoolEntry>& pool) {
  Timer t;
  bool pass = true;
  std::string first_bad;
  const std::vector<EbParams> settings = {
      EbParams{Ratio{2, 1}, Ratio{5, 1}, 1},
      EbParams{Ratio{10, 1}, Ratio{20, 1}, 1},
      EbParams{Ratio{3, 2}, Ratio{3, 1}, 2},
  };
  for (const auto& e : pool) {
    for (const auto& params : settings) {
      DfbnbEngine d;
      auto rt = ebsss_search(e.space, d, params);
      BoundedDijkstraEngine b;
      auto rg = ebsss_search(e.space, b, params);
      bool ok = rt.solution && rt.solution->cost == e.cstar && rg.solution &&
                rg.solution->cost == e.cstar && validate_solution(e.space, *rt.solution) &&
                validate_solution(e.space, *rg.solution);
      if (!ok && first_bad.empty()) {
        first_bad = "c1=" + params.c1.str() + " c2=" + params.c2.str();
      }
      pass &= ok;
    }
  }
  std::ostringstream detail;
  detail << pool.size() << " spaces x 3 parameter sets x both engines";
  if (!first_bad.empty()) detail << "; first failure at " << first_bad;
  report(6, "EBSSS optimality (EBTS and EBGS)", pass, detail.str(), t.seconds());
}

bool driver_log_ok(const SearchStats& stats, const EbParams& params, Cost cstar,
                   std::string* why) {
  std::vector<const IterationLog*> mains;
  for (const auto& it : stats.iterations) {
    if (it.phase == Phase::Main) mains.push_back(&it);
  }
  for (std::size_t m = 0; m + 1 < mains.size(); ++m) {
    if (mains[m + 1]->status == ProbeStatus::Solved) continue;
    if (mains[m + 1]->expanded < ceil_scaled(params.c1, mains[m]->expanded)) {
      *why = "main-loop growth below c1";
      return false;
    }
  }
  for (const auto* it : mains) {
    if (it->f_max > cstar && !it->certified_good) {
      *why = "overshooting bound was not certified good";
      return false;
    }
  }
  std::uint64_t m_bound = std::max(cstar.value() + params.delta0, 2 * cstar.value());
  std::uint64_t k_cap =
      2 * static_cast<std::uint64_t>(std::ceil(std::log2(std::max<double>(2.0, (double)m_bound)))) +
      2;
  std::uint64_t run_len = 0;
  for (const auto& it : stats.iterations) {
    if (it.phase == Phase::Main) {
      run_len = 0;
    } else if (++run_len > k_cap) {
      *why = "more TestFBound calls in one NextFBound than 2*ceil(log2(M))+2";
      return false;
    }
  }
  return true;
}

void criterion_7_driver_contract(const std::vector<PoolEntry>& pool) {
  Timer t;
  bool pass = true;
  std::string why;
  EbParams params{Ratio{2, 1}, Ratio{5, 1}, 1};

  auto g = mero_graph(1000);
  BoundedDijkstraEngine dij;
  auto r = ebsss_search(g.space, dij, params);
  pass &= r.solution && r.solution->cost == g.optimal_cost;
  pass &= driver_log_ok(r.stats, params, g.optimal_cost, &why);

  std::size_t checked = 0;
  for (std::size_t i = 0; i < pool.size() && checked < 20; i += 37, ++checked) {
    const auto& e = pool[i];
    DfbnbEngine d;
    auto rt = ebsss_search(e.space, d, params);
    pass &= driver_log_ok(rt.stats, params, e.cstar, &why);
    BoundedDijkstraEngine b;
    auto rg = ebsss_search(e.space, b, params);
    pass &= driver_log_ok(rg.stats, params, e.cstar, &why);
  }
  std::ostringstream detail;
  detail << "growth >= c1, overshoot certification, TestFBound call cap; Mero k=1000 + "
         << checked << " random spaces";
  if (!pass) detail << "; " << why;
  report(7, "Driver-contract suite (iteration logs)", pass, detail.str(), t.seconds());
}

void criterion_8_next_f_bound_traces() {
  Timer t;
  bool pass = true;
  std::ostringstream detail;
  auto g1 = testing::make_g1();

  {
    SearchStats stats;
    testing::ScriptedEngine eng;
    for (std::uint64_t f : {11, 12, 14, 16}) {
      eng.by_f[f] = {testing::ScriptedEngine::Behavior::Complete, 3};
    }
    for (std::uint64_t f : {17, 18}) eng.by_f[f] = {testing::ScriptedEngine::Behavior::Incomplete};
    detail::ProbeCtx<ExplicitSpace, testing::ScriptedEngine> ctx{g1, eng, stats};
    auto nb = detail::next_f_bound(ctx, Cost(10), 1, 5, 10);
    std::vector<std::pair<std::uint64_t, std::uint64_t>> want = {{11, 10}, {12, 10}, {14, 10},
                                                                 {18, 10}, {16, 10}, {17, 10}};
    pass &= !nb.solution && nb.f_new == Cost(17) && eng.calls == want;
  }
  {
    SearchStats stats;
    testing::ScriptedEngine eng;
    eng.by_f[14] = {testing::ScriptedEngine::Behavior::Complete, 7};
    detail::ProbeCtx<ExplicitSpace, testing::ScriptedEngine> ctx{g1, eng, stats};
    auto nb = detail::next_f_bound(ctx, Cost(10), 4, 5, 10);
    pass &= nb.f_new == Cost(14) && nb.certified_good && eng.calls.size() == 1;
  }
  {
    SearchStats stats;
    testing::ScriptedEngine eng;
    eng.by_f[11] = {testing::ScriptedEngine::Behavior::Incomplete};
    detail::ProbeCtx<ExplicitSpace, testing::ScriptedEngine> ctx{g1, eng, stats};
    auto nb = detail::next_f_bound(ctx, Cost(10), 1, 5, 10);
    pass &= nb.f_new == Cost(11) && !nb.certified_good && eng.calls.size() == 1;
  }
  report(8, "NextFBound unit traces (three scripted oracles)", pass,
         "probe sequences 11,12,14,18,16,17 -> 17; 14 -> 14; 11 -> 11", t.seconds());
}

// ---------------------------------------------------------------------------
// Desk-scale weighted domains

struct StpSubset {
  std::vector<TilePuzzleState> instances;
  std::vector<int> indices;           // 1-based korf ids
  std::vector<Cost> astar_costs;      // at resolution 1e6
  std::uint64_t astar_total = 0;
};

// Deterministic selection: candidates in increasing order of the initial
// heuristic, kept iff A* solves them under a fixed expansion cap. Candidate
// batches are sized up front and evaluated on a couple of worker threads (the
// accepted set only depends on the cap, not on scheduling).
StpSubset select_easiest_korf(std::size_t want, std::uint64_t cap) {
  auto all = load_korf_instances(std::string(EBS_DATA_DIR) + "/korf100.txt");
  std::vector<std::pair<std::uint64_t, int>> order;  // (h(s0), index)
  for (int i = 0; i < static_cast<int>(all.size()); ++i) {
    StpSpace sp(all[i], 1'000'000);
    order.emplace_back(sp.h(all[i]).value(), i);
  }
  std::sort(order.begin(), order.end());

  struct Outcome {
    bool solved = false;
    Cost cost{};
    std::uint64_t expansions = 0;
  };
  std::vector<Outcome> outcomes(order.size());
  std::size_t evaluated = 0;

  auto evaluate_through = [&](std::size_t end) {
    end = std::min(end, order.size());
    std::atomic<std::size_t> next{evaluated};
    auto work = [&] {
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= end) return;
        StpSpace sp(all[order[i].second], 1'000'000);
        auto r = astar(sp, AstarOptions{cap});
        if (r.solution) {
          outcomes[i] = {true, r.solution->cost, r.stats.expansions};
        }
      }
    };
    unsigned workers = std::min(4u, std::max(1u, std::thread::hardware_concurrency()));
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& th : pool) th.join();
    evaluated = end;
  };

  StpSubset out;
  for (std::size_t horizon = 64; out.instances.size() < want && evaluated < order.size();
       horizon += 16) {
    evaluate_through(horizon);
    out = StpSubset{};
    for (std::size_t i = 0; i < evaluated && out.instances.size() < want; ++i) {
      if (!outcomes[i].solved) continue;
      int idx = order[i].second;
      out.instances.push_back(all[idx]);
      out.indices.push_back(idx + 1);
      out.astar_costs.push_back(outcomes[i].cost);
      out.astar_total += outcomes[i].expansions;
    }
  }
  return out;
}

struct EbtsTotals {
  std::uint64_t expansions = 0;
  bool all_match_costs = true;
  std::vector<std::uint64_t> raw_nums;  // exact rational numerators per instance
};

template <StateSpace S>
std::uint64_t raw_num_of_solution(const S&, const Solution<S>& sol,
                                  const std::function<std::uint64_t(const typename S::Action&)>& f) {
  std::uint64_t num = 0;
  for (const auto& st : sol.path.steps) num += f(st.action);
  return num;
}

EbtsTotals run_ebts_stp(const StpSubset& subset, std::uint64_t resolution, std::uint64_t delta,
                        const std::vector<Cost>* expect_costs) {
  EbtsTotals out;
  EbParams params{Ratio{10, 1}, Ratio{20, 1}, delta};
  for (std::size_t i = 0; i < subset.instances.size(); ++i) {
    StpSpace sp(subset.instances[i], resolution);
    DfbnbEngine e;
    auto r = ebsss_search(sp, e, params);
    out.expansions += r.stats.expansions;
    if (!r.solution) {
      out.all_match_costs = false;
      continue;
    }
    if (expect_costs && r.solution->cost != (*expect_costs)[i]) out.all_match_costs = false;
    std::uint64_t num = 0;
    for (const auto& st : r.solution->path.steps) num += StpSpace::raw_cost_num(st.action.tile);
    out.raw_nums.push_back(num);
  }
  return out;
}

void criteria_9_and_11_stp(StpSubset& subset, bool* res_robust_stp, std::string* res_detail) {
  Timer t;
  std::ostringstream detail;
  bool pass = true;

  if (subset.instances.size() < 20) {
    report(9, "STP desk-scale", false, "fewer than 20 instances under the selection cap",
           t.seconds());
    *res_robust_stp = false;
    return;
  }

  // (a) EBTS costs equal A* costs exactly
  auto ebts_1e6 = run_ebts_stp(subset, 1'000'000, 1'000'000, &subset.astar_costs);
  pass &= ebts_1e6.all_match_costs;

  // (b) EBTS total expansions <= 6x oracle total on the subset
  std::uint64_t oracle_total = 0;
  for (std::size_t i = 0; i < subset.instances.size(); ++i) {
    StpSpace sp(subset.instances[i], 1'000'000);
    DfbnbEngine e;
    auto r = oracle(sp, e, subset.astar_costs[i]);
    oracle_total += r.stats.expansions;
  }
  pass &= ebts_1e6.expansions <= 6 * oracle_total;

  // (c) delta = resolution beats delta = 1
  auto ebts_d1 = run_ebts_stp(subset, 1'000'000, 1, nullptr);
  pass &= ebts_1e6.expansions < ebts_d1.expansions;

  detail << subset.instances.size() << " easiest instances; EBTS(10,20,1e6,1e6) "
         << ebts_1e6.expansions << " vs oracle " << oracle_total << " ("
         << (oracle_total ? static_cast<double>(ebts_1e6.expansions) / oracle_total : 0.0)
         << "x, cap 6x), delta=1 total " << ebts_d1.expansions;
  report(9, "STP desk-scale (cost parity, oracle ratio, delta trend)", pass, detail.str(),
         t.seconds());

  // criterion 11, STP half: resolution 1e9 changes little and raw costs not at all
  Timer t11;
  auto ebts_1e9 = run_ebts_stp(subset, 1'000'000'000, 1'000'000'000, nullptr);
  double rel = std::abs(static_cast<double>(ebts_1e9.expansions) -
                        static_cast<double>(ebts_1e6.expansions)) /
               static_cast<double>(ebts_1e6.expansions);
  bool raws_equal = ebts_1e6.raw_nums == ebts_1e9.raw_nums;
  *res_robust_stp = rel < 0.05 && raws_equal;
  std::ostringstream os;
  os.precision(3);
  os << "stp: totals " << ebts_1e6.expansions << " vs " << ebts_1e9.expansions << " (" << std::fixed
     << rel * 100 << "%), raw costs " << (raws_equal ? "identical" : "CHANGED") << " ["
     << t11.seconds() << "s]";
  *res_detail = os.str();
}

void criteria_10_and_11_pancake(bool* res_robust_pan, std::string* res_detail) {
  Timer t;
  bool pass = true;
  std::ostringstream detail;

  auto instances = random_pancake_instances(100, 14, 1);
  std::vector<Cost> astar_costs;
  std::uint64_t oracle_total = 0;
  for (const auto& inst : instances) {
    PancakeSpace sp(inst, 1'000'000);
    auto r = astar(sp);
    if (!r.solution) {
      pass = false;
      break;
    }
    astar_costs.push_back(r.solution->cost);
  }

  EbParams params{Ratio{10, 1}, Ratio{20, 1}, 1'000'000};
  std::uint64_t ebts_total = 0, ebts_d1_total = 0, ebts_1e9_total = 0;
  std::vector<std::uint64_t> raw_1e6, raw_1e9;
  bool costs_match = true, raws_equal = true;
  for (std::size_t i = 0; i < instances.size() && pass; ++i) {
    PancakeSpace sp(instances[i], 1'000'000);
    DfbnbEngine e;
    auto r = ebsss_search(sp, e, params);
    if (!r.solution || r.solution->cost != astar_costs[i]) costs_match = false;
    ebts_total += r.stats.expansions;
    if (r.solution) {
      std::uint64_t num = 0;
      for (const auto& st : r.solution->path.steps) num += sp.raw_cost_num(st.action);
      raw_1e6.push_back(num);
    }

    DfbnbEngine eo;
    auto ro = oracle(sp, eo, astar_costs[i]);
    oracle_total += ro.stats.expansions;

    EbParams pd1{Ratio{10, 1}, Ratio{20, 1}, 1};
    DfbnbEngine e1;
    auto rd1 = ebsss_search(sp, e1, pd1);
    ebts_d1_total += rd1.stats.expansions;

    PancakeSpace sp9(instances[i], 1'000'000'000);
    EbParams p9{Ratio{10, 1}, Ratio{20, 1}, 1'000'000'000};
    DfbnbEngine e9;
    auto r9 = ebsss_search(sp9, e9, p9);
    ebts_1e9_total += r9.stats.expansions;
    if (r9.solution) {
      std::uint64_t num = 0;
      for (const auto& st : r9.solution->path.steps) num += sp9.raw_cost_num(st.action);
      raw_1e9.push_back(num);
    }
  }
  raws_equal = raw_1e6 == raw_1e9;

  pass &= costs_match;
  pass &= ebts_total <= 5 * oracle_total;
  pass &= ebts_total < ebts_d1_total;
  detail << "100 random 14-pancake instances; EBTS " << ebts_total << " vs oracle " << oracle_total
         << " (" << (oracle_total ? static_cast<double>(ebts_total) / oracle_total : 0.0)
         << "x, cap 5x), delta=1 total " << ebts_d1_total;
  report(10, "Pancake desk-scale (cost parity, oracle ratio, delta trend)", pass, detail.str(),
         t.seconds());

  double rel = std::abs(static_cast<double>(ebts_1e9_total) - static_cast<double>(ebts_total)) /
               static_cast<double>(ebts_total);
  *res_robust_pan = rel < 0.05 && raws_equal;
  std::ostringstream os;
  os.precision(3);
  os << "pancake: totals " << ebts_total << " vs " << ebts_1e9_total << " (" << std::fixed
     << rel * 100 << "%), raw costs " << (raws_equal ? "identical" : "CHANGED");
  *res_detail = os.str();
}

void criterion_12_cache(const std::vector<PoolEntry>& pool) {
  Timer t;
  bool pass = true;
  std::string why;
  std::mt19937_64 rng(777);

  std::uint64_t sequences = 0;
  for (std::size_t i = 0; sequences < 10'000; i = (i + 1) % pool.size()) {
    const auto& e = pool[i];
    std::uint64_t cv = e.cstar.value();
    if (sequences % 2 == 0) {
      DfbnbEngine raw, ref;
      CachedEngine<ExplicitSpace, DfbnbEngine> cached(raw);
      for (int q = 0; q < 6; ++q) {
        Cost f{rng() % (cv + 4)};
        std::uint64_t n = (rng() % 4 == 0) ? kNoLimit : 1 + rng() % (e.counts.p_plus + 2);
        auto a = cached.run(e.space, f, n);
        auto b = ref.run(e.space, f, n);
        if (!testing::results_equal(a, b)) {
          pass = false;
          why = "dfbnb cache mismatch";
        }
      }
    } else {
      BoundedDijkstraEngine raw, ref;
      CachedEngine<ExplicitSpace, BoundedDijkstraEngine> cached(raw);
      for (int q = 0; q < 6; ++q) {
        Cost f{rng() % (cv + 4)};
        std::uint64_t n = (rng() % 4 == 0) ? kNoLimit : 1 + rng() % (e.space.n_states() + 2);
        auto a = cached.run(e.space, f, n);
        auto b = ref.run(e.space, f, n);
        if (!testing::results_equal(a, b)) {
          pass = false;
          why = "dijkstra cache mismatch";
        }
      }
    }
    ++sequences;
    if (!pass) break;
  }

  // On the Mero family the driver's main loop must reuse a GOOD-certified
  // probe straight from the cache.
  auto g = mero_graph(1000);
  BoundedDijkstraEngine dij;
  auto r = ebsss_search(g.space, dij, EbParams{Ratio{2, 1}, Ratio{5, 1}, 1});
  bool saw_certified_hit = false;
  for (const auto& it : r.stats.iterations) {
    if (it.phase == Phase::Main && it.cache_hit && it.certified_good) saw_certified_hit = true;
  }
  pass &= saw_certified_hit;

  std::ostringstream detail;
  detail << sequences << " randomized query sequences, field-identical results"
         << (saw_certified_hit ? "; certified main-loop cache hit observed on Mero k=1000"
                               : "; NO certified main-loop cache hit");
  if (!why.empty()) detail << "; " << why;
  report(12, "Cache equivalence (differential + main-loop reuse)", pass, detail.str(),
         t.seconds());
}

}  // namespace

int main() {
  std::cout << "acceptance suite\n----------------" << std::endl;
  Timer total;

  criterion_1_mero_exact();
  criterion_2_mero_closed_form();
  criterion_3_ebgs_growth();

  Timer pool_timer;
  auto pool = build_pool(1000);
  std::cout << "(pool: " << pool.size() << " random spaces in " << std::fixed
            << std::setprecision(1) << pool_timer.seconds() << "s)" << std::endl;

  criterion_4_contract(pool);
  criterion_5_expansion_bounds(pool);
  criterion_6_optimality(pool);
  criterion_7_driver_contract(pool);
  criterion_8_next_f_bound_traces();

  bool robust_stp = false, robust_pan = false;
  std::string detail_stp, detail_pan;
  Timer sel_timer;
  auto subset = select_easiest_korf(20, 1'600'000);
  std::cout << "(stp selection: " << subset.instances.size()
            << " instances under the 1.6e6-expansion A* cap, " << std::fixed << std::setprecision(1)
            << sel_timer.seconds() << "s)" << std::endl;
  criteria_9_and_11_stp(subset, &robust_stp, &detail_stp);
  criteria_10_and_11_pancake(&robust_pan, &detail_pan);
  {
    Timer t;
    report(11, "Resolution robustness 1e6 -> 1e9", robust_stp && robust_pan,
           detail_stp + "; " + detail_pan, t.seconds());
  }
  criterion_12_cache(pool);

  std::cout << "----------------\n"
            << (g_failures == 0 ? "all criteria passed" : "FAILURES: " + std::to_string(g_failures))
            << " (total " << std::fixed << std::setprecision(1) << total.seconds() << "s)"
            << std::endl;
  return g_failures;
}
