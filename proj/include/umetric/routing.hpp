#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "umetric/metrics.hpp"
#include "umetric/netmodel.hpp"

namespace umetric {

inline constexpr std::size_t kDefaultMaxPaths = 10000;
inline constexpr unsigned kRipInfinity = 16;

struct PathQuery {
  std::string source;
  std::string destination;
  MetricKind metric = MetricKind::universal;
  MetricParams params;
  std::size_t max_paths = kDefaultMaxPaths;
  std::optional<std::size_t> max_hops;

  void validate() const;
};

struct RankedRoute {
  Route route;
  MetricValue value;
};

/// Ascending by value; ties go to fewer hops, then the lexicographically
/// smaller node sequence, then the smaller link-id sequence.
using RankedRoutes = std::vector<RankedRoute>;

/// Strict weak order used for every ranking in the library.
bool ranks_before(const RankedRoute& a, const RankedRoute& b);

/// All simple paths source -> destination, depth-first with out-links taken
/// in (head node, link id) order. Parallel links give distinct paths.
/// Throws PathCapExceeded when more than max_paths paths exist.
std::vector<Route> enumerate_simple_paths(const Topology& topology, const std::string& source,
                                          const std::string& destination,
                                          std::optional<std::size_t> max_hops = std::nullopt,
                                          std::size_t max_paths = kDefaultMaxPaths);

/// Evaluates the query metric on every enumerated path and sorts.
/// Throws UnreachableError when there is no path.
RankedRoutes best_route(const Topology& topology, const PathQuery& query);

struct ShortestPath {
  Route route;
  double total = 0.0;
};

/// Per-link weight a link-additive metric induces. Defined for universal,
/// universal_dmax, ospf and rip; throws InputError for eigrp.
double additive_link_weight(MetricKind kind, const LinkParams& hop, const MetricParams& params);

/// Dijkstra over additive_link_weight. Throws UnreachableError.
ShortestPath dijkstra_additive(const Topology& topology, const std::string& source,
                               const std::string& destination, MetricKind kind,
                               const MetricParams& params = {});

struct DistanceVectorEntry {
  std::optional<std::string> next_hop;
  unsigned hop_count = kRipInfinity;

  bool operator==(const DistanceVectorEntry&) const = default;
};

struct DistanceVectorTable {
  std::map<std::string, DistanceVectorEntry> entries;
  std::size_t rounds = 0;  // synchronous rounds until nothing changed
};

/// Synchronous Bellman-Ford toward destination with unit link cost. Nodes
/// with no path (or needing >= infinity hops) keep hop_count = infinity.
/// Among equal-cost neighbours the smallest node id is the next hop.
DistanceVectorTable distance_vector_converge(const Topology& topology,
                                             const std::string& destination,
                                             unsigned infinity = kRipInfinity);

}  // namespace umetric
