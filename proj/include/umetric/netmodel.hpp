#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "umetric/error.hpp"

namespace umetric {

/// Measured characteristics of one hop. Units are fixed: bits per second
/// for rates, seconds for times, a fraction in [0,1] for loss.
struct LinkParams {
  double capacity = 0.0;   // C: max IP-layer throughput with no cross traffic
  double available = 0.0;  // B: throughput left over given current cross traffic
  double delay = 0.0;      // D
  double loss = 0.0;       // p
  double jitter = 0.0;     // j
  std::uint32_t mtu = 1500;

  /// C - B, the rate currently consumed by cross traffic.
  double served_rate() const noexcept { return capacity - available; }

  bool operator==(const LinkParams&) const = default;
};

/// A directed link. An undirected channel is two of these.
struct Link {
  std::string id;
  std::string from;
  std::string to;
  LinkParams params;

  bool operator==(const Link&) const = default;
};

/// Unvalidated topology description, as produced by a parser or generator.
struct RawTopology {
  std::vector<std::string> nodes;
  std::vector<Link> links;
};

/// Checks one link's parameters; throws ValidationError naming the link.
void validate_link_params(const std::string& link_id, const LinkParams& params);

/// Immutable directed multigraph. Nodes are kept sorted, links sorted by id,
/// so two topologies with the same content compare equal regardless of the
/// order they were declared in.
class Topology {
 public:
  const std::vector<std::string>& nodes() const noexcept { return nodes_; }
  const std::vector<Link>& links() const noexcept { return links_; }

  bool has_node(std::string_view id) const noexcept;
  /// Index into nodes(); throws InputError for an unknown node.
  std::size_t node_index(std::string_view id) const;

  /// Index into links(), or links().size() when absent.
  std::size_t find_link(std::string_view id) const noexcept;
  const Link& link(std::size_t index) const { return links_.at(index); }

  /// Outgoing link indices of a node, ordered by (head node, link id).
  std::span<const std::size_t> out_links(std::size_t node) const {
    return out_links_.at(node);
  }

  RawTopology to_raw() const { return RawTopology{nodes_, links_}; }

  bool operator==(const Topology& other) const {
    return nodes_ == other.nodes_ && links_ == other.links_;
  }

 private:
  friend Topology validate_topology(RawTopology raw);

  std::vector<std::string> nodes_;
  std::vector<Link> links_;
  std::vector<std::vector<std::size_t>> out_links_;
};

/// Builds a Topology, enforcing: non-empty unique node ids, known link
/// endpoints, unique link ids, no self-loops, and valid LinkParams.
Topology validate_topology(RawTopology raw);

/// A loop-free chain of links. Holds link indices into the topology it was
/// built against, the link ids, and the visited node sequence.
class Route {
 public:
  const std::vector<std::size_t>& link_indices() const noexcept { return links_; }
  const std::vector<std::string>& link_ids() const noexcept { return link_ids_; }
  const std::vector<std::string>& nodes() const noexcept { return nodes_; }
  std::size_t hop_count() const noexcept { return links_.size(); }

  const std::string& source() const { return nodes_.front(); }
  const std::string& destination() const { return nodes_.back(); }

  bool operator==(const Route& other) const {
    return link_ids_ == other.link_ids_ && nodes_ == other.nodes_;
  }

 private:
  friend Route route_between(const Topology& topology,
                             std::span<const std::string> link_ids);
  friend Route route_from_indices(const Topology& topology,
                                  std::span<const std::size_t> link_indices);

  std::vector<std::size_t> links_;
  std::vector<std::string> link_ids_;
  std::vector<std::string> nodes_;
};

/// Resolves link ids into a Route. Errors: empty list, unknown link id,
/// links that do not chain head-to-tail, or a repeated node.
Route route_between(const Topology& topology, std::span<const std::string> link_ids);

/// Same checks as route_between, starting from link indices.
Route route_from_indices(const Topology& topology,
                         std::span<const std::size_t> link_indices);

/// How the dejitter buffer D^buf of each hop is obtained.
enum class DejitterMode { explicit_dmax, jitter_derived, fixed_factor };

struct DejitterPolicy {
  DejitterMode mode = DejitterMode::jitter_derived;
  double dmax = 0.0;             // route-wide delivery deadline, explicit_dmax
  double target_loss_p = 0.001;  // jitter_derived: D^buf = -j ln(p)
  double factor = 7.0;           // fixed_factor: D^buf = factor * j

  static DejitterPolicy explicit_deadline(double dmax);
  static DejitterPolicy jitter_derived(double target_loss_p = 0.001);
  static DejitterPolicy fixed_factor(double factor = 7.0);

  /// Checks the mode-specific parameter ranges. The dmax-vs-hop-delay
  /// condition is checked per route at evaluation time.
  void validate() const;
};

}  // namespace umetric
