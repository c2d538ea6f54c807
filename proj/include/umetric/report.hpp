#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "umetric/metrics.hpp"
#include "umetric/routing.hpp"

namespace umetric {

enum class ReportFormat { table, csv, json };

ReportFormat parse_report_format(std::string_view name);

/// Candidate routes evaluated under several metrics.
/// values[m][r] is metric m on route r; winners[m] indexes routes.
struct RouteReport {
  std::vector<Route> routes;
  std::vector<MetricKind> metrics;
  std::vector<std::vector<MetricValue>> values;
  std::vector<std::size_t> winners;
};

/// The metrics a comparison report covers, in column order.
inline const std::vector<MetricKind>& compare_metrics() {
  static const std::vector<MetricKind> kinds{MetricKind::universal, MetricKind::rip,
                                             MetricKind::ospf, MetricKind::eigrp};
  return kinds;
}

/// Evaluates every candidate under every metric and marks each metric's
/// winner with the same ordering best_route uses.
RouteReport build_report(const Topology& topology, std::vector<Route> routes,
                         const std::vector<MetricKind>& metrics, const MetricParams& params);

/// Report over the ranked head of best_route, one metric.
RouteReport report_from_ranking(const RankedRoutes& ranked, MetricKind metric, std::size_t limit);

std::string render(const RouteReport& report, ReportFormat format);

/// Single-value output for one route and one metric.
std::string render_single(const Route& route, MetricKind metric, const MetricValue& value,
                          ReportFormat format);

}  // namespace umetric
