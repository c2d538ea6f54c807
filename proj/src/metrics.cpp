#include "umetric/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace umetric {

namespace {

constexpr double kEigrpScale = 256.0;
constexpr double kBitsPerKbit = 1e3;
constexpr double kTensOfMicrosPerSecond = 1e5;

void check_finite(double v, const char* what) {
  if (!std::isfinite(v) || v < 0.0) {
    throw DomainError(std::string(what) + " is not a finite non-negative value");
  }
}

}  // namespace

std::string_view to_string(MetricKind kind) noexcept {
  switch (kind) {
    case MetricKind::universal: return "universal";
    case MetricKind::universal_dmax: return "universal_dmax";
    case MetricKind::rip: return "rip";
    case MetricKind::ospf: return "ospf";
    case MetricKind::eigrp: return "eigrp";
  }
  return "?";
}

MetricKind parse_metric_kind(std::string_view name) {
  for (auto k : {MetricKind::universal, MetricKind::universal_dmax, MetricKind::rip,
                 MetricKind::ospf, MetricKind::eigrp}) {
    if (to_string(k) == name) return k;
  }
  throw InputError("unknown metric '" + std::string(name) + "'");
}

std::string_view to_string(MetricUnit unit) noexcept {
  switch (unit) {
    case MetricUnit::bits: return "bits";
    case MetricUnit::hops: return "hops";
    case MetricUnit::dimensionless: return "";
  }
  return "";
}

void EigrpCoefficients::validate() const {
  for (double k : {k1, k2, k3, k4, k5}) {
    if (!std::isfinite(k) || k < 0.0) throw InputError("EIGRP coefficients must be non-negative");
  }
}

double little_traffic(const LittleQuery& q) { return q.arrival_rate * q.residence_time; }

double dejitter_buffer(double jitter, double target_loss_p) {
  if (!(target_loss_p > 0.0 && target_loss_p < 1.0)) {
    throw DomainError("dejitter buffer needs 0 < p < 1");
  }
  if (!(jitter >= 0.0)) throw DomainError("jitter must be non-negative");
  if (jitter == 0.0) return 0.0;
  return -jitter * std::log(target_loss_p);
}

double loss_from_buffer(double jitter, double buffer) {
  if (!(jitter > 0.0)) throw DomainError("loss from buffer needs positive jitter");
  if (!(buffer >= 0.0)) throw DomainError("buffer must be non-negative");
  return std::exp(-buffer / jitter);
}

double hop_dejitter_buffer(const LinkParams& hop, const DejitterPolicy& policy) {
  switch (policy.mode) {
    case DejitterMode::explicit_dmax:
      if (policy.dmax < hop.delay) {
        throw DomainError("deadline below hop delay");
      }
      return policy.dmax - hop.delay;
    case DejitterMode::jitter_derived:
      return dejitter_buffer(hop.jitter, policy.target_loss_p);
    case DejitterMode::fixed_factor:
      return policy.factor * hop.jitter;
  }
  throw std::logic_error("unhandled dejitter mode");
}

double universal_hop_term(const LinkParams& hop, const DejitterPolicy& policy) {
  return hop.served_rate() * (hop.delay + hop.loss * hop_dejitter_buffer(hop, policy));
}

MetricValue universal_metric(const Route& route, const Topology& topology,
                             const DejitterPolicy& policy) {
  policy.validate();
  double w = 0.0;
  for (std::size_t i : route.link_indices()) {
    w += universal_hop_term(topology.link(i).params, policy);
  }
  check_finite(w, "universal metric");
  return {w, MetricUnit::bits};
}

MetricValue universal_metric_dmax(const Route& route, const Topology& topology, double dmax) {
  double w = 0.0;
  for (std::size_t i : route.link_indices()) {
    const LinkParams& h = topology.link(i).params;
    if (dmax < h.delay) throw DomainError("deadline below hop delay");
    w += h.served_rate() * ((1.0 - h.loss) * h.delay + h.loss * dmax);
  }
  check_finite(w, "universal metric");
  return {w, MetricUnit::bits};
}

MetricValue rip_metric(const Route& route) {
  return {static_cast<double>(route.hop_count()), MetricUnit::hops};
}

MetricValue ospf_metric(const Route& route, const Topology& topology,
                        double reference_bandwidth) {
  if (!(reference_bandwidth > 0.0) || !std::isfinite(reference_bandwidth)) {
    throw InputError("reference bandwidth must be positive");
  }
  double w = 0.0;
  for (std::size_t i : route.link_indices()) {
    const Link& l = topology.link(i);
    if (l.params.available <= 0.0) {
      throw DomainError("zero available bandwidth on link " + l.id);
    }
    w += reference_bandwidth / l.params.available;
  }
  return {w, MetricUnit::dimensionless};
}

EigrpTerms eigrp_terms(const Route& route, const Topology& topology) {
  double min_bw = 0.0;
  double total_delay = 0.0;
  double max_loss = 0.0;
  double max_util = 0.0;
  bool first = true;
  for (std::size_t i : route.link_indices()) {
    const LinkParams& h = topology.link(i).params;
    min_bw = first ? h.available : std::min(min_bw, h.available);
    first = false;
    total_delay += h.delay;
    max_loss = std::max(max_loss, h.loss);
    max_util = std::max(max_util, h.served_rate() / h.capacity);
  }
  if (min_bw <= 0.0) throw DomainError("zero available bandwidth on route");

  EigrpTerms t;
  t.bandwidth = (1e6 / (min_bw / kBitsPerKbit)) * kEigrpScale;
  t.delay = (total_delay * kTensOfMicrosPerSecond) * kEigrpScale;
  t.reliability = kEigrpScale * max_loss;
  t.loading = kEigrpScale * max_util;
  return t;
}

MetricValue eigrp_metric(const Route& route, const Topology& topology,
                         const EigrpCoefficients& k) {
  k.validate();
  const EigrpTerms t = eigrp_terms(route, topology);

  double w = k.k1 * t.bandwidth;
  if (k.k2 != 0.0) {
    if (t.loading >= kEigrpScale) throw DomainError("EIGRP loading saturated (256)");
    w += k.k2 * t.bandwidth / (kEigrpScale - t.loading);
  }
  w += k.k3 * t.delay;

  if (k.k5 != 0.0) {
    // Reliability here grows with loss, so a lossier route gets a smaller
    // metric. Kept as written in the source formula.
    const double denom = t.reliability + k.k4;
    if (denom == 0.0) throw DomainError("EIGRP reliability + K4 is zero");
    w = w * k.k5 / denom;
  }
  check_finite(w, "EIGRP metric");
  return {w, MetricUnit::dimensionless};
}

MetricValue rip_reduction_check(const Route& route, const Topology& topology) {
  const LinkParams& first = topology.link(route.link_indices().front()).params;
  for (std::size_t i : route.link_indices()) {
    const LinkParams& h = topology.link(i).params;
    if (h.capacity != first.capacity || h.available != first.available ||
        h.delay != first.delay || h.loss != 0.0) {
      throw InputError("reduction preconditions violated");
    }
  }
  const double closed = first.served_rate() * first.delay * static_cast<double>(route.hop_count());
  const double summed = universal_metric(route, topology, DejitterPolicy{}).value;
  if (std::abs(closed - summed) > 1e-12 * std::max(std::abs(closed), std::abs(summed))) {
    throw std::logic_error("closed-form reduction disagrees with the hop sum");
  }
  return {closed, MetricUnit::bits};
}

MetricValue evaluate(MetricKind kind, const Route& route, const Topology& topology,
                     const MetricParams& params) {
  switch (kind) {
    case MetricKind::universal:
      return universal_metric(route, topology, params.dejitter);
    case MetricKind::universal_dmax:
      if (params.dejitter.mode != DejitterMode::explicit_dmax) {
        throw InputError("universal_dmax needs an explicit deadline (dmax)");
      }
      return universal_metric_dmax(route, topology, params.dejitter.dmax);
    case MetricKind::rip:
      return rip_metric(route);
    case MetricKind::ospf:
      return ospf_metric(route, topology, params.reference_bandwidth);
    case MetricKind::eigrp:
      return eigrp_metric(route, topology, params.eigrp);
  }
  throw std::logic_error("unhandled metric kind");
}

}  // namespace umetric
