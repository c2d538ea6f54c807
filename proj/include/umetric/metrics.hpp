#pragma once

#include <string>
#include <string_view>

#include "umetric/netmodel.hpp"

namespace umetric {

enum class MetricKind { universal, universal_dmax, rip, ospf, eigrp };

std::string_view to_string(MetricKind kind) noexcept;
/// Accepts the names produced by to_string; throws InputError otherwise.
MetricKind parse_metric_kind(std::string_view name);

enum class MetricUnit { bits, hops, dimensionless };

std::string_view to_string(MetricUnit unit) noexcept;

struct MetricValue {
  double value = 0.0;
  MetricUnit unit = MetricUnit::dimensionless;

  bool operator==(const MetricValue&) const = default;
};

/// EIGRP weights. Defaults: K1 = K3 = 1, K2 = K4 = K5 = 0.
struct EigrpCoefficients {
  double k1 = 1.0;
  double k2 = 0.0;
  double k3 = 1.0;
  double k4 = 0.0;
  double k5 = 0.0;

  void validate() const;
  bool operator==(const EigrpCoefficients&) const = default;
};

/// Scaled EIGRP route variables, before weighting.
struct EigrpTerms {
  double bandwidth = 0.0;    // (10^6 / min B in kbit/s) * 256
  double delay = 0.0;        // (sum D in tens of microseconds) * 256
  double reliability = 0.0;  // 256 * max p
  double loading = 0.0;      // 256 * max (C-B)/C
};

/// Everything a metric evaluation may need besides the route itself.
struct MetricParams {
  DejitterPolicy dejitter;
  EigrpCoefficients eigrp;
  double reference_bandwidth = 1e6;  // OSPF numerator, bits/s
};

struct LittleQuery {
  double arrival_rate = 0.0;   // customers per second
  double residence_time = 0.0; // seconds
};

/// Little's law: mean number in system = arrival rate * mean residence time.
double little_traffic(const LittleQuery& q);

/// D^buf = -j ln(p): the buffer that holds jitter-induced loss at p when
/// late arrivals are exponentially distributed with mean j.
/// Throws DomainError unless 0 < p < 1 and j >= 0.
double dejitter_buffer(double jitter, double target_loss_p);

/// p = exp(-D^buf / j), the inverse of dejitter_buffer. Throws DomainError
/// for j <= 0 or negative buffer.
double loss_from_buffer(double jitter, double buffer);

/// Dejitter buffer of one hop under a policy. For explicit_dmax this is
/// dmax - D and throws DomainError when the deadline is below the hop delay.
double hop_dejitter_buffer(const LinkParams& hop, const DejitterPolicy& policy);

/// One hop's share of the universal metric: (C - B)(D + p D^buf), in bits.
double universal_hop_term(const LinkParams& hop, const DejitterPolicy& policy);

/// Loss-corrected in-flight traffic along a route, sum of universal_hop_term.
MetricValue universal_metric(const Route& route, const Topology& topology,
                             const DejitterPolicy& policy);

/// The same quantity written with a route-wide deadline:
/// sum (C - B)((1 - p) D + p dmax).
MetricValue universal_metric_dmax(const Route& route, const Topology& topology, double dmax);

/// Hop count.
MetricValue rip_metric(const Route& route);

/// OSPF edge weights reference_bandwidth / B summed along the route.
MetricValue ospf_metric(const Route& route, const Topology& topology,
                        double reference_bandwidth = 1e6);

EigrpTerms eigrp_terms(const Route& route, const Topology& topology);

/// EIGRP composite metric. With K5 = 0 returns
///   K1*bw + K2*bw/(256 - load) + K3*delay,
/// otherwise that value times K5/(reliability + K4). Terms are kept
/// real-valued, no integer truncation.
MetricValue eigrp_metric(const Route& route, const Topology& topology,
                         const EigrpCoefficients& k = {});

/// Closed form (C - B) D N for a route whose hops share C, B, D and have
/// zero loss. Cross-checks the result against universal_metric and throws
/// InputError if the route is not homogeneous.
MetricValue rip_reduction_check(const Route& route, const Topology& topology);

/// Dispatches on kind. universal_dmax requires an explicit_dmax policy.
MetricValue evaluate(MetricKind kind, const Route& route, const Topology& topology,
                     const MetricParams& params);

}  // namespace umetric
