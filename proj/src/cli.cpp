#include "umetric/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <limits>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "umetric/metrics.hpp"
#include "umetric/report.hpp"
#include "umetric/routing.hpp"
#include "umetric/scenario_io.hpp"

namespace umetric::cli {

namespace {

struct MetricOptions {
  std::optional<std::string> dmax;
  std::optional<double> target_loss;
  std::optional<double> jitter_factor;
  double k1 = 1.0, k2 = 0.0, k3 = 1.0, k4 = 0.0, k5 = 0.0;
  std::string ref_bandwidth = "1M";

  MetricParams build() const {
    MetricParams p;
    if (dmax) {
      p.dejitter = DejitterPolicy::explicit_deadline(parse_time(*dmax));
    } else if (jitter_factor) {
      p.dejitter = DejitterPolicy::fixed_factor(*jitter_factor);
    } else {
      p.dejitter = DejitterPolicy::jitter_derived(target_loss.value_or(0.001));
    }
    p.eigrp = EigrpCoefficients{k1, k2, k3, k4, k5};
    p.eigrp.validate();
    p.reference_bandwidth = parse_rate(ref_bandwidth);
    if (!(p.reference_bandwidth > 0.0)) throw InputError("reference bandwidth must be positive");
    return p;
  }
};

void add_metric_options(CLI::App* cmd, MetricOptions& o) {
  auto* dmax = cmd->add_option("--dmax", o.dmax, "Route-wide delivery deadline, e.g. 100ms");
  auto* loss = cmd->add_option("--target-loss", o.target_loss,
                               "Jitter-derived buffer: D^buf = -j ln(P) (default 0.001)");
  auto* factor = cmd->add_option("--jitter-factor", o.jitter_factor, "Fixed buffer: D^buf = F * j");
  dmax->excludes(loss)->excludes(factor);
  loss->excludes(factor);
  cmd->add_option("--k1", o.k1, "EIGRP K1")->capture_default_str();
  cmd->add_option("--k2", o.k2, "EIGRP K2")->capture_default_str();
  cmd->add_option("--k3", o.k3, "EIGRP K3")->capture_default_str();
  cmd->add_option("--k4", o.k4, "EIGRP K4")->capture_default_str();
  cmd->add_option("--k5", o.k5, "EIGRP K5")->capture_default_str();
  cmd->add_option("--ref-bandwidth", o.ref_bandwidth, "OSPF reference bandwidth")->capture_default_str();
}

void add_format_option(CLI::App* cmd, std::string& format) {
  cmd->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"table", "csv", "json"}))
      ->capture_default_str();
}

Topology load_topology(const std::string& path, std::istream& in) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(in), {});
  } else {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw InputError("cannot read topology file " + path);
    text.assign(std::istreambuf_iterator<char>(f), {});
  }
  return parse_topology(text);
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');) out.push_back(item);
  if (!s.empty() && s.back() == ',') out.emplace_back();
  return out;
}

}  // namespace

Route resolve_node_route(const Topology& topology, const std::vector<std::string>& nodes,
                         const DejitterPolicy& policy) {
  if (nodes.size() < 2) throw InputError("route needs at least two nodes");
  std::vector<std::size_t> links;
  for (std::size_t k = 0; k + 1 < nodes.size(); ++k) {
    const std::size_t from = topology.node_index(nodes[k]);
    topology.node_index(nodes[k + 1]);
    std::optional<std::size_t> best;
    double best_term = std::numeric_limits<double>::infinity();
    for (std::size_t li : topology.out_links(from)) {
      const Link& l = topology.link(li);
      if (l.to != nodes[k + 1]) continue;
      const double term = universal_hop_term(l.params, policy);
      if (!best || term < best_term) {
        best = li;
        best_term = term;
      }
    }
    if (!best) {
      throw UnreachableError("no such route in topology: no link " + nodes[k] + " -> " + nodes[k + 1]);
    }
    links.push_back(*best);
  }
  return route_from_indices(topology, links);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        std::istream& in) {
  CLI::App app{"Route metric calculator and comparison tool", "umetric"};
  app.require_subcommand(1);

  std::string topology_path;
  std::string format = "table";
  std::string metric_name = "universal";
  MetricOptions mopts;

  auto* metric = app.add_subcommand("metric", "Evaluate one metric on an explicit route");
  std::string route_nodes;
  metric->add_option("--topology", topology_path, "Topology file ('-' for stdin)")->required();
  metric->add_option("--route", route_nodes, "Comma-separated node sequence")->required();
  metric->add_option("--metric", metric_name, "universal|universal_dmax|rip|ospf|eigrp")
      ->capture_default_str();
  add_metric_options(metric, mopts);
  add_format_option(metric, format);

  std::string from, to;
  std::size_t max_paths = kDefaultMaxPaths;
  std::optional<std::size_t> max_hops;
  std::size_t limit = 5;

  auto* route = app.add_subcommand("route", "Rank candidate routes under one metric");
  route->add_option("--topology", topology_path, "Topology file ('-' for stdin)")->required();
  route->add_option("--from", from, "Source node")->required();
  route->add_option("--to", to, "Destination node")->required();
  route->add_option("--metric", metric_name, "universal|universal_dmax|rip|ospf|eigrp")
      ->capture_default_str();
  route->add_option("--max-paths", max_paths, "Cap on enumerated candidates")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  route->add_option("--max-hops", max_hops, "Cap on route length")->check(CLI::PositiveNumber);
  route->add_option("--limit", limit, "How many ranked routes to print")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_metric_options(route, mopts);
  add_format_option(route, format);

  auto* compare = app.add_subcommand("compare", "Every candidate route under every metric");
  compare->add_option("--topology", topology_path, "Topology file ('-' for stdin)")->required();
  compare->add_option("--from", from, "Source node")->required();
  compare->add_option("--to", to, "Destination node")->required();
  compare->add_option("--max-paths", max_paths, "Cap on enumerated candidates")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  compare->add_option("--max-hops", max_hops, "Cap on route length")->check(CLI::PositiveNumber);
  add_metric_options(compare, mopts);
  add_format_option(compare, format);

  RandomSpec spec;
  std::string cap_min = "1M", cap_max = "1G";
  std::string delay_min = "100us", delay_max = "50ms";
  std::string jitter_min = "0", jitter_max = "10ms";
  auto* gen = app.add_subcommand("gen", "Generate a random topology");
  gen->add_option("--nodes", spec.node_count, "Node count")->required();
  gen->add_option("--edge-prob", spec.edge_probability, "Probability of each directed link")
      ->required();
  gen->add_option("--seed", spec.seed, "PRNG seed")->required();
  gen->add_option("--cap-min", cap_min)->capture_default_str();
  gen->add_option("--cap-max", cap_max)->capture_default_str();
  gen->add_option("--bw-ratio-min", spec.available_ratio.lo, "Min B/C")->capture_default_str();
  gen->add_option("--bw-ratio-max", spec.available_ratio.hi, "Max B/C")->capture_default_str();
  gen->add_option("--delay-min", delay_min)->capture_default_str();
  gen->add_option("--delay-max", delay_max)->capture_default_str();
  gen->add_option("--loss-min", spec.loss.lo)->capture_default_str();
  gen->add_option("--loss-max", spec.loss.hi)->capture_default_str();
  gen->add_option("--jitter-min", jitter_min)->capture_default_str();
  gen->add_option("--jitter-max", jitter_max)->capture_default_str();

  auto* fig3 = app.add_subcommand("fig3", "Print the two-route hop-count vs. backbone scenario");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*fig3) {
      out << serialize_topology(build_fig3_scenario());
      return kOk;
    }
    if (*gen) {
      spec.capacity = {parse_rate(cap_min), parse_rate(cap_max)};
      spec.delay = {parse_time(delay_min), parse_time(delay_max)};
      spec.jitter = {parse_time(jitter_min), parse_time(jitter_max)};
      out << serialize_topology(generate_random(spec));
      return kOk;
    }

    const MetricParams params = mopts.build();
    const ReportFormat fmt = parse_report_format(format);
    const Topology topo = load_topology(topology_path, in);

    if (*metric) {
      const MetricKind kind = parse_metric_kind(metric_name);
      const Route r = resolve_node_route(topo, split_commas(route_nodes), params.dejitter);
      out << render_single(r, kind, evaluate(kind, r, topo, params), fmt);
      return kOk;
    }
    if (*route) {
      PathQuery q;
      q.source = from;
      q.destination = to;
      q.metric = parse_metric_kind(metric_name);
      q.params = params;
      q.max_paths = max_paths;
      q.max_hops = max_hops;
      topo.node_index(from);
      topo.node_index(to);
      out << render(report_from_ranking(best_route(topo, q), q.metric, limit), fmt);
      return kOk;
    }
    if (*compare) {
      topo.node_index(from);
      topo.node_index(to);
      if (from == to) throw InputError("source and destination must differ");
      auto paths = enumerate_simple_paths(topo, from, to, max_hops, max_paths);
      if (paths.empty()) throw UnreachableError("unreachable destination " + to + " from " + from);
      out << render(build_report(topo, std::move(paths), compare_metrics(), params), fmt);
      return kOk;
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const UnreachableError& e) {
    err << "error: " << e.what() << '\n';
    return kUnreachable;
  } catch (const PathCapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kCapExceeded;
  }
  return kInputError;
}

}  // namespace umetric::cli
