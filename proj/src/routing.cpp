#include "umetric/routing.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <queue>
#include <stdexcept>
#include <tuple>

namespace umetric {

void PathQuery::validate() const {
  if (source == destination) throw InputError("source and destination must differ");
  if (max_paths < 1) throw InputError("max paths must be at least 1");
  if (max_hops && *max_hops < 1) throw InputError("max hops must be at least 1");
  params.dejitter.validate();
  params.eigrp.validate();
}

bool ranks_before(const RankedRoute& a, const RankedRoute& b) {
  const auto ha = a.route.hop_count();
  const auto hb = b.route.hop_count();
  return std::tie(a.value.value, ha, a.route.nodes(), a.route.link_ids()) <
         std::tie(b.value.value, hb, b.route.nodes(), b.route.link_ids());
}

std::vector<Route> enumerate_simple_paths(const Topology& topology, const std::string& source,
                                          const std::string& destination,
                                          std::optional<std::size_t> max_hops,
                                          std::size_t max_paths) {
  const std::size_t src = topology.node_index(source);
  const std::size_t dst = topology.node_index(destination);
  std::vector<Route> out;
  if (src == dst) return out;

  std::vector<bool> on_path(topology.nodes().size(), false);
  std::vector<std::size_t> stack;
  const std::size_t hop_cap = max_hops.value_or(topology.nodes().size());

  std::function<void(std::size_t)> dfs = [&](std::size_t node) {
    if (node == dst) {
      if (out.size() == max_paths) throw PathCapExceeded(out.size(), max_paths);
      out.push_back(route_from_indices(topology, stack));
      return;
    }
    if (stack.size() >= hop_cap) return;
    on_path[node] = true;
    for (std::size_t li : topology.out_links(node)) {
      const std::size_t next = topology.node_index(topology.link(li).to);
      if (on_path[next]) continue;
      stack.push_back(li);
      dfs(next);
      stack.pop_back();
    }
    on_path[node] = false;
  };
  dfs(src);
  return out;
}

RankedRoutes best_route(const Topology& topology, const PathQuery& query) {
  query.validate();
  auto paths = enumerate_simple_paths(topology, query.source, query.destination,
                                      query.max_hops, query.max_paths);
  if (paths.empty()) {
    throw UnreachableError("unreachable destination " + query.destination + " from " +
                           query.source);
  }
  RankedRoutes ranked;
  ranked.reserve(paths.size());
  for (auto& p : paths) {
    MetricValue v = evaluate(query.metric, p, topology, query.params);
    ranked.push_back({std::move(p), v});
  }
  std::sort(ranked.begin(), ranked.end(), ranks_before);
  return ranked;
}

double additive_link_weight(MetricKind kind, const LinkParams& hop, const MetricParams& params) {
  switch (kind) {
    case MetricKind::universal:
      return universal_hop_term(hop, params.dejitter);
    case MetricKind::universal_dmax:
      if (params.dejitter.mode != DejitterMode::explicit_dmax) {
        throw InputError("universal_dmax needs an explicit deadline (dmax)");
      }
      if (params.dejitter.dmax < hop.delay) throw DomainError("deadline below hop delay");
      return hop.served_rate() *
             ((1.0 - hop.loss) * hop.delay + hop.loss * params.dejitter.dmax);
    case MetricKind::rip:
      return 1.0;
    case MetricKind::ospf:
      if (hop.available <= 0.0) throw DomainError("zero available bandwidth");
      return params.reference_bandwidth / hop.available;
    case MetricKind::eigrp:
      throw InputError("eigrp is not link-additive; use best_route");
  }
  throw std::logic_error("unhandled metric kind");
}

ShortestPath dijkstra_additive(const Topology& topology, const std::string& source,
                               const std::string& destination, MetricKind kind,
                               const MetricParams& params) {
  const std::size_t src = topology.node_index(source);
  const std::size_t dst = topology.node_index(destination);
  if (src == dst) throw InputError("source and destination must differ");

  constexpr double inf = std::numeric_limits<double>::infinity();
  constexpr std::size_t none = std::numeric_limits<std::size_t>::max();
  const std::size_t n = topology.nodes().size();
  std::vector<double> dist(n, inf);
  std::vector<std::size_t> via(n, none);
  std::vector<bool> done(n, false);

  using Item = std::pair<double, std::size_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  dist[src] = 0.0;
  pq.push({0.0, src});
  while (!pq.empty()) {
    auto [d, u] = pq.top();
    pq.pop();
    if (done[u]) continue;
    done[u] = true;
    if (u == dst) break;
    for (std::size_t li : topology.out_links(u)) {
      const Link& l = topology.link(li);
      const std::size_t v = topology.node_index(l.to);
      if (done[v]) continue;
      const double nd = d + additive_link_weight(kind, l.params, params);
      if (nd < dist[v]) {
        dist[v] = nd;
        via[v] = li;
        pq.push({nd, v});
      }
    }
  }
  if (via[dst] == none) {
    throw UnreachableError("unreachable destination " + destination + " from " + source);
  }

  std::vector<std::size_t> links;
  for (std::size_t v = dst; v != src;) {
    links.push_back(via[v]);
    v = topology.node_index(topology.link(via[v]).from);
  }
  std::reverse(links.begin(), links.end());
  return {route_from_indices(topology, links), dist[dst]};
}

DistanceVectorTable distance_vector_converge(const Topology& topology,
                                             const std::string& destination,
                                             unsigned infinity) {
  const std::size_t dst = topology.node_index(destination);
  const std::size_t n = topology.nodes().size();
  constexpr std::size_t none = std::numeric_limits<std::size_t>::max();

  std::vector<unsigned> hops(n, infinity);
  std::vector<std::size_t> next(n, none);
  hops[dst] = 0;

  DistanceVectorTable table;
  for (bool changed = true; changed;) {
    changed = false;
    // Every node reads its neighbours' vectors from the previous round.
    const std::vector<unsigned> prev = hops;
    for (std::size_t u = 0; u < n; ++u) {
      if (u == dst) continue;
      unsigned best = infinity;
      std::size_t best_next = none;
      for (std::size_t li : topology.out_links(u)) {
        const std::size_t v = topology.node_index(topology.link(li).to);
        if (prev[v] >= infinity) continue;
        const unsigned cand = std::min(prev[v] + 1, infinity);
        // out_links are sorted by head node, so the first minimum found
        // is the smallest neighbour id.
        if (cand < best) {
          best = cand;
          best_next = v;
        }
      }
      if (best >= infinity) best_next = none;
      if (best != hops[u] || best_next != next[u]) {
        hops[u] = best;
        next[u] = best_next;
        changed = true;
      }
    }
    if (changed) ++table.rounds;
  }

  for (std::size_t u = 0; u < n; ++u) {
    DistanceVectorEntry e;
    e.hop_count = hops[u];
    if (next[u] != none) e.next_hop = topology.nodes()[next[u]];
    table.entries.emplace(topology.nodes()[u], std::move(e));
  }
  return table;
}

}  // namespace umetric
