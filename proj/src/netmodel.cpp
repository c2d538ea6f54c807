#include "umetric/netmodel.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <tuple>

namespace umetric {

void validate_link_params(const std::string& link_id, const LinkParams& p) {
  auto fail = [&](const std::string& msg) {
    throw ValidationError("link " + link_id + ": " + msg, link_id);
  };
  if (!std::isfinite(p.capacity) || !std::isfinite(p.available) ||
      !std::isfinite(p.delay) || !std::isfinite(p.loss) || !std::isfinite(p.jitter)) {
    fail("non-finite parameter");
  }
  if (p.capacity <= 0.0) fail("capacity must be positive");
  if (p.available < 0.0) fail("available bandwidth must be non-negative");
  if (p.available > p.capacity) fail("available bandwidth exceeds capacity");
  if (p.delay < 0.0) fail("negative delay");
  if (p.jitter < 0.0) fail("negative jitter");
  if (p.loss < 0.0 || p.loss > 1.0) fail("loss outside [0,1]");
  if (p.mtu == 0) fail("mtu must be positive");
}

Topology validate_topology(RawTopology raw) {
  Topology t;
  t.nodes_ = std::move(raw.nodes);
  for (const auto& n : t.nodes_) {
    if (n.empty()) throw ValidationError("empty node id");
  }
  std::sort(t.nodes_.begin(), t.nodes_.end());
  if (auto dup = std::adjacent_find(t.nodes_.begin(), t.nodes_.end()); dup != t.nodes_.end()) {
    throw ValidationError("duplicate node " + *dup);
  }

  t.links_ = std::move(raw.links);
  std::sort(t.links_.begin(), t.links_.end(),
            [](const Link& a, const Link& b) { return a.id < b.id; });
  for (std::size_t i = 0; i < t.links_.size(); ++i) {
    const Link& l = t.links_[i];
    if (l.id.empty()) throw ValidationError("empty link id");
    if (i > 0 && t.links_[i - 1].id == l.id) {
      throw ValidationError("duplicate link id " + l.id, l.id);
    }
    if (!t.has_node(l.from)) throw ValidationError("unknown node " + l.from, l.id);
    if (!t.has_node(l.to)) throw ValidationError("unknown node " + l.to, l.id);
    if (l.from == l.to) throw ValidationError("self-loop on node " + l.from, l.id);
    validate_link_params(l.id, l.params);
  }

  t.out_links_.assign(t.nodes_.size(), {});
  for (std::size_t i = 0; i < t.links_.size(); ++i) {
    t.out_links_[t.node_index(t.links_[i].from)].push_back(i);
  }
  for (auto& out : t.out_links_) {
    std::sort(out.begin(), out.end(), [&](std::size_t a, std::size_t b) {
      const Link& la = t.links_[a];
      const Link& lb = t.links_[b];
      return std::tie(la.to, la.id) < std::tie(lb.to, lb.id);
    });
  }
  return t;
}

bool Topology::has_node(std::string_view id) const noexcept {
  return std::binary_search(nodes_.begin(), nodes_.end(), id);
}

std::size_t Topology::node_index(std::string_view id) const {
  auto it = std::lower_bound(nodes_.begin(), nodes_.end(), id);
  if (it == nodes_.end() || *it != id) {
    throw InputError("unknown node " + std::string(id));
  }
  return static_cast<std::size_t>(it - nodes_.begin());
}

std::size_t Topology::find_link(std::string_view id) const noexcept {
  auto it = std::lower_bound(links_.begin(), links_.end(), id,
                             [](const Link& l, std::string_view v) { return l.id < v; });
  if (it == links_.end() || it->id != id) return links_.size();
  return static_cast<std::size_t>(it - links_.begin());
}

Route route_from_indices(const Topology& topology,
                         std::span<const std::size_t> link_indices) {
  if (link_indices.empty()) throw InputError("route must contain at least one link");
  Route r;
  r.links_.assign(link_indices.begin(), link_indices.end());
  std::set<std::string_view> seen;
  for (std::size_t k = 0; k < link_indices.size(); ++k) {
    if (link_indices[k] >= topology.links().size()) {
      throw InputError("unknown link index " + std::to_string(link_indices[k]));
    }
    const Link& l = topology.link(link_indices[k]);
    if (k == 0) {
      r.nodes_.push_back(l.from);
      seen.insert(l.from);
    } else if (r.nodes_.back() != l.from) {
      throw InputError("links do not chain: " + r.link_ids_.back() + " ends at " +
                       r.nodes_.back() + " but " + l.id + " starts at " + l.from);
    }
    if (!seen.insert(l.to).second) {
      throw InputError("route revisits node " + l.to);
    }
    r.nodes_.push_back(l.to);
    r.link_ids_.push_back(l.id);
  }
  return r;
}

Route route_between(const Topology& topology, std::span<const std::string> link_ids) {
  std::vector<std::size_t> idx;
  idx.reserve(link_ids.size());
  for (const auto& id : link_ids) {
    std::size_t i = topology.find_link(id);
    if (i == topology.links().size()) throw InputError("unknown link " + id);
    idx.push_back(i);
  }
  return route_from_indices(topology, idx);
}

DejitterPolicy DejitterPolicy::explicit_deadline(double dmax) {
  DejitterPolicy p;
  p.mode = DejitterMode::explicit_dmax;
  p.dmax = dmax;
  p.validate();
  return p;
}

DejitterPolicy DejitterPolicy::jitter_derived(double target_loss_p) {
  DejitterPolicy p;
  p.mode = DejitterMode::jitter_derived;
  p.target_loss_p = target_loss_p;
  p.validate();
  return p;
}

DejitterPolicy DejitterPolicy::fixed_factor(double factor) {
  DejitterPolicy p;
  p.mode = DejitterMode::fixed_factor;
  p.factor = factor;
  p.validate();
  return p;
}

void DejitterPolicy::validate() const {
  switch (mode) {
    case DejitterMode::explicit_dmax:
      if (!std::isfinite(dmax) || dmax < 0.0) throw InputError("dmax must be a non-negative time");
      break;
    case DejitterMode::jitter_derived:
      if (!(target_loss_p > 0.0 && target_loss_p < 1.0)) {
        throw InputError("target loss must lie strictly between 0 and 1");
      }
      break;
    case DejitterMode::fixed_factor:
      if (!std::isfinite(factor) || factor <= 0.0) throw InputError("jitter factor must be positive");
      break;
  }
}

}  // namespace umetric
