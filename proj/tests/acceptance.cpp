// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
// criterion fails. Tolerances and runtime budgets are fixed here.

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "umetric/cli.hpp"
#include "umetric/metrics.hpp"
#include "umetric/routing.hpp"
#include "umetric/scenario_io.hpp"

using namespace umetric;
using oracle::rel_close;

namespace {

constexpr double kRelTol = 1e-12;

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

struct Chain {
  Topology topo;
  Route route;
};

Chain make_chain(const std::vector<LinkParams>& hops) {
  Topology t = oracle::chain(hops);
  const auto ids = oracle::chain_link_ids(hops.size());
  Route r = route_between(t, ids);
  return {std::move(t), std::move(r)};
}

std::vector<LinkParams> random_hops(oracle::Rng& rng, std::size_t max_hops) {
  std::vector<LinkParams> hops;
  const std::size_t n = 1 + rng.index(max_hops);
  for (std::size_t k = 0; k < n; ++k) hops.push_back(oracle::random_params(rng));
  return hops;
}

std::string num(double v) {
  std::ostringstream s;
  s << std::setprecision(17) << v;
  return s.str();
}

// 1. Deadline form and buffer form of the loss-corrected metric agree.
Outcome deadline_identity() {
  Outcome o;
  oracle::Rng rng(1);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const auto hops = random_hops(rng, 10);
    double max_d = 0.0;
    for (const auto& h : hops) max_d = std::max(max_d, h.delay);
    const double dmax = max_d + rng.uniform(0.0, 0.5);
    const auto c = make_chain(hops);
    const double a = universal_metric_dmax(c.route, c.topo, dmax).value;
    const double b = universal_metric(c.route, c.topo, DejitterPolicy::explicit_deadline(dmax)).value;
    if (a != b) worst = std::max(worst, std::abs(a - b) / std::max(std::abs(a), std::abs(b)));
    if (!rel_close(a, b, kRelTol)) o.fail("route " + std::to_string(i) + ": " + num(a) + " vs " + num(b));
  }
  o.detail += (o.detail.empty() ? "" : "; ") + std::string("max rel err ") + num(worst);
  return o;
}

// 2. -ln(0.001) ~ 6.9078 reproduces the rounded factor 7; round trip.
Outcome seven_j() {
  Outcome o;
  for (double j : {1e-4, 0.001, 0.010, 0.05}) {
    const double ratio = dejitter_buffer(j, 0.001) / j;
    if (std::abs(ratio - 6.9078) > 1e-4) o.fail("ratio " + num(ratio) + " for j=" + num(j));
    if (std::abs(ratio - 7.0) / 7.0 > 0.014) o.fail("ratio " + num(ratio) + " more than 1.4% from 7");
  }
  for (double j : {1e-4, 0.010, 0.3}) {
    for (double p : {0.5, 0.1, 0.01, 0.001, 1e-6}) {
      const double back = loss_from_buffer(j, dejitter_buffer(j, p));
      if (!rel_close(back, p, kRelTol)) o.fail("round trip p=" + num(p) + " gave " + num(back));
    }
  }
  if (o.ok) o.detail = "D^buf/j = " + num(dejitter_buffer(0.01, 0.001) / 0.01);
  return o;
}

// 3. Homogeneous lossless routes reduce to (C - B) D N.
Outcome homogeneous_reduction() {
  Outcome o;
  oracle::Rng rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    LinkParams h = oracle::random_params(rng);
    h.loss = 0.0;
    for (std::size_t n = 1; n <= 10; ++n) {
      const auto c = make_chain(std::vector<LinkParams>(n, h));
      const double closed = (h.capacity - h.available) * h.delay * static_cast<double>(n);
      const double w = universal_metric(c.route, c.topo, DejitterPolicy{}).value;
      if (!rel_close(w, closed, kRelTol)) o.fail("N=" + std::to_string(n) + ": " + num(w) + " vs " + num(closed));
      if (!rel_close(rip_reduction_check(c.route, c.topo).value, closed, kRelTol)) {
        o.fail("rip_reduction_check disagrees at N=" + std::to_string(n));
      }
    }
  }
  return o;
}

// 4. Default EIGRP coefficients give bandwidth + delay.
Outcome eigrp_default_collapse() {
  Outcome o;
  oracle::Rng rng(4);
  for (int i = 0; i < 200; ++i) {
    const auto hops = random_hops(rng, 10);
    const auto c = make_chain(hops);
    double min_b = hops[0].available;
    double sum_d = 0.0;
    for (const auto& h : hops) {
      min_b = std::min(min_b, h.available);
      sum_d += h.delay;
    }
    const double bandwidth = 1e6 / (min_b / 1e3) * 256.0;
    const double delay = sum_d * 1e5 * 256.0;
    const double w = eigrp_metric(c.route, c.topo, EigrpCoefficients{}).value;
    if (!rel_close(w, bandwidth + delay, kRelTol)) o.fail("route " + std::to_string(i) + ": " + num(w));
    const EigrpTerms t = eigrp_terms(c.route, c.topo);
    if (w != t.bandwidth + t.delay) o.fail("not bitwise bandwidth + delay on route " + std::to_string(i));
  }
  return o;
}

// 5. Hop count picks the short slow route; OSPF and the universal metric
//    pick the four-hop backbone.
Outcome fig3_reproduction() {
  Outcome o;
  const Topology t = build_fig3_scenario();
  auto query = [](MetricKind m) {
    PathQuery q;
    q.source = "S";
    q.destination = "T";
    q.metric = m;
    return q;
  };
  const auto rip = best_route(t, query(MetricKind::rip));
  const auto ospf = best_route(t, query(MetricKind::ospf));
  const auto uni = best_route(t, query(MetricKind::universal));
  const std::vector<std::string> direct{"S", "M", "T"};
  const std::vector<std::string> backbone{"S", "R1", "R2", "R3", "T"};
  if (rip.front().route.nodes() != direct) o.fail("RIP did not choose the direct route");
  if (ospf.front().route.nodes() != backbone) o.fail("OSPF did not choose the backbone");
  if (uni.front().route.nodes() != backbone) o.fail("universal did not choose the backbone");
  if (!(uni.front().value.value < uni.back().value.value)) o.fail("backbone W not strictly lower");
  if (o.ok) {
    o.detail = "W backbone " + num(uni.front().value.value) + " < direct " + num(uni.back().value.value);
  }
  return o;
}

// 6. Dijkstra equals exhaustive minimum; distance vector equals unit Dijkstra.
Outcome oracle_equivalence() {
  Outcome o;
  oracle::Rng rng(6);
  MetricParams params;
  int compared = 0;
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = 2 + rng.index(7);
    const Topology t = oracle::random_topology(rng, n, rng.uniform(0.2, 0.7));
    const std::string src = t.nodes()[0];
    const std::string dst = t.nodes()[n - 1];
    for (MetricKind m : {MetricKind::rip, MetricKind::ospf, MetricKind::universal}) {
      PathQuery q;
      q.source = src;
      q.destination = dst;
      q.metric = m;
      q.params = params;
      bool reachable = true;
      RankedRoutes ranked;
      try {
        ranked = best_route(t, q);
      } catch (const UnreachableError&) {
        reachable = false;
      }
      try {
        const auto sp = dijkstra_additive(t, src, dst, m, params);
        if (!reachable) {
          o.fail("dijkstra found a route enumeration missed");
        } else if (!rel_close(sp.total, ranked.front().value.value, kRelTol)) {
          o.fail("topology " + std::to_string(i) + " " + std::string(to_string(m)) + ": " + num(sp.total) +
                 " vs " + num(ranked.front().value.value));
        }
        ++compared;
      } catch (const UnreachableError&) {
        if (reachable) o.fail("dijkstra missed a reachable destination");
      }
    }
    const auto dv = distance_vector_converge(t, dst);
    for (const auto& node : t.nodes()) {
      unsigned want = 0;
      if (node != dst) {
        try {
          want = static_cast<unsigned>(dijkstra_additive(t, node, dst, MetricKind::rip).total);
        } catch (const UnreachableError&) {
          want = kRipInfinity;
        }
      }
      if (dv.entries.at(node).hop_count != want) o.fail("distance vector differs at " + node);
    }
  }
  if (o.ok) o.detail = std::to_string(compared) + " metric/topology pairs compared";
  return o;
}

// 7. W never decreases with loss on a hop and never increases with B.
Outcome monotonicity() {
  Outcome o;
  oracle::Rng rng(7);
  for (int i = 0; i < 50; ++i) {
    const auto hops = random_hops(rng, 8);
    double max_d = 0.0;
    for (const auto& h : hops) max_d = std::max(max_d, h.delay);
    const std::vector<DejitterPolicy> policies{DejitterPolicy::jitter_derived(0.001),
                                               DejitterPolicy::fixed_factor(7.0),
                                               DejitterPolicy::explicit_deadline(max_d + 0.05)};
    for (const auto& policy : policies) {
      for (std::size_t at = 0; at < hops.size(); ++at) {
        double prev = -1.0;
        for (int g = 0; g <= 10; ++g) {
          auto hs = hops;
          hs[at].loss = g / 10.0;
          const auto c = make_chain(hs);
          const double w = universal_metric(c.route, c.topo, policy).value;
          if (w < prev) o.fail("W decreased as loss rose on route " + std::to_string(i));
          prev = w;
        }
        prev = std::numeric_limits<double>::infinity();
        for (int g = 0; g <= 10; ++g) {
          auto hs = hops;
          hs[at].available = hs[at].capacity * (g / 10.0);
          const auto c = make_chain(hs);
          const double w = universal_metric(c.route, c.topo, policy).value;
          if (w > prev) o.fail("W increased as B rose on route " + std::to_string(i));
          prev = w;
        }
      }
    }
  }
  return o;
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::string run_cli(const std::vector<std::string>& args, const std::string& input, int* code) {
  std::ostringstream out, err;
  std::istringstream in(input);
  *code = cli::run(args, out, err, in);
  return out.str();
}

// 8. Parse/serialize round trip, stable generator output, golden reports.
Outcome io_round_trip() {
  Outcome o;
  for (std::uint64_t seed = 100; seed < 200; ++seed) {
    RandomSpec spec;
    spec.node_count = 2 + seed % 9;
    spec.edge_probability = 0.2 + 0.8 * static_cast<double>(seed % 5) / 5.0;
    spec.seed = seed;
    const Topology t = generate_random(spec);
    if (!(parse_topology(serialize_topology(t)) == t)) o.fail("round trip failed for seed " + std::to_string(seed));
  }

  const std::filesystem::path golden(UMETRIC_GOLDEN_DIR);
  int code = 0;
  const std::vector<std::string> gen{"gen", "--nodes", "6", "--edge-prob", "0.5", "--seed", "42"};
  const std::string g1 = run_cli(gen, "", &code);
  const std::string g2 = run_cli(gen, "", &code);
  if (code != 0 || g1 != g2) o.fail("gen output not byte-stable");
  if (g1 != read_file(golden / "gen_seed42.topo")) o.fail("gen output differs from golden file");

  const std::string fig3 = run_cli({"fig3"}, "", &code);
  for (const auto& [format, file] : std::vector<std::pair<std::string, std::string>>{
           {"table", "compare_fig3.txt"}, {"csv", "compare_fig3.csv"}, {"json", "compare_fig3.json"}}) {
    const std::string got =
        run_cli({"compare", "--topology", "-", "--from", "S", "--to", "T", "--format", format}, fig3, &code);
    if (code != 0 || got != read_file(golden / file)) o.fail(format + " report differs from golden file");
  }
  return o;
}

struct Criterion {
  int id;
  std::string name;
  std::function<Outcome()> check;
  double budget_seconds;  // 0 = no runtime bound
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "deadline form == buffer form (1000 routes, 1e-12 rel)", deadline_identity, 1.0},
      {2, "-7j reconstruction and buffer/loss round trip", seven_j, 0.0},
      {3, "homogeneous reduction (C-B)DN, N=1..10", homogeneous_reduction, 0.0},
      {4, "EIGRP default collapse (200 routes)", eigrp_default_collapse, 0.0},
      {5, "hop count vs backbone scenario route choices", fig3_reproduction, 0.1},
      {6, "Dijkstra/distance-vector vs enumeration (100 topologies)", oracle_equivalence, 30.0},
      {7, "monotonicity in loss and available bandwidth (50 routes)", monotonicity, 0.0},
      {8, "I/O round trip, stable gen, golden reports", io_round_trip, 0.0},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_seconds > 0.0 && secs >= c.budget_seconds) {
      o.fail("took " + num(secs) + " s, budget " + num(c.budget_seconds) + " s");
    }
    if (!o.ok) ++failures;
    std::cout << (o.ok ? "PASS" : "FAIL") << "  [" << c.id << "] " << c.name << "  (" << std::fixed
              << std::setprecision(3) << secs * 1e3 << " ms)" << std::defaultfloat;
    if (!o.detail.empty()) std::cout << "  " << o.detail;
    std::cout << '\n';
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << '\n';
  return failures == 0 ? 0 : 1;
}
