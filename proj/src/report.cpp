#include "umetric/report.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"
#include "umetric/scenario_io.hpp"

namespace umetric {

namespace {

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

// RFC 4180: quote when the field holds a comma, quote or line break.
std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

std::string column_title(MetricKind kind, MetricUnit unit) {
  std::string t(to_string(kind));
  if (unit != MetricUnit::dimensionless) t += "[" + std::string(to_string(unit)) + "]";
  return t;
}

}  // namespace

ReportFormat parse_report_format(std::string_view name) {
  if (name == "table") return ReportFormat::table;
  if (name == "csv") return ReportFormat::csv;
  if (name == "json") return ReportFormat::json;
  throw InputError("unknown format '" + std::string(name) + "'");
}

RouteReport build_report(const Topology& topology, std::vector<Route> routes,
                         const std::vector<MetricKind>& metrics, const MetricParams& params) {
  RouteReport rep;
  rep.routes = std::move(routes);
  rep.metrics = metrics;
  for (MetricKind m : metrics) {
    std::vector<MetricValue> col;
    col.reserve(rep.routes.size());
    for (const Route& r : rep.routes) col.push_back(evaluate(m, r, topology, params));

    std::size_t win = 0;
    for (std::size_t i = 1; i < rep.routes.size(); ++i) {
      if (ranks_before({rep.routes[i], col[i]}, {rep.routes[win], col[win]})) win = i;
    }
    rep.values.push_back(std::move(col));
    rep.winners.push_back(win);
  }
  return rep;
}

RouteReport report_from_ranking(const RankedRoutes& ranked, MetricKind metric, std::size_t limit) {
  RouteReport rep;
  rep.metrics = {metric};
  rep.values.emplace_back();
  for (std::size_t i = 0; i < ranked.size() && i < limit; ++i) {
    rep.routes.push_back(ranked[i].route);
    rep.values[0].push_back(ranked[i].value);
  }
  rep.winners = {0};
  return rep;
}

std::string render(const RouteReport& rep, ReportFormat format) {
  std::ostringstream out;
  const std::size_t n_routes = rep.routes.size();
  const std::size_t n_metrics = rep.metrics.size();

  auto unit_of = [&](std::size_t m) {
    return rep.values[m].empty() ? MetricUnit::dimensionless : rep.values[m].front().unit;
  };

  switch (format) {
    case ReportFormat::table: {
      std::vector<std::vector<std::string>> rows;
      std::vector<std::string> header{"#", "route", "hops"};
      for (std::size_t m = 0; m < n_metrics; ++m) header.push_back(column_title(rep.metrics[m], unit_of(m)));
      rows.push_back(header);
      for (std::size_t r = 0; r < n_routes; ++r) {
        std::vector<std::string> row{std::to_string(r + 1), join(rep.routes[r].nodes(), ">"),
                                     std::to_string(rep.routes[r].hop_count())};
        for (std::size_t m = 0; m < n_metrics; ++m) {
          std::string cell = format_number(rep.values[m][r].value);
          if (rep.winners[m] == r) cell += " *";
          row.push_back(std::move(cell));
        }
        rows.push_back(std::move(row));
      }
      std::vector<std::size_t> width(header.size(), 0);
      for (const auto& row : rows) {
        for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
      }
      for (const auto& row : rows) {
        std::string line;
        for (std::size_t c = 0; c < row.size(); ++c) {
          if (c) line += "  ";
          line += row[c];
          if (c + 1 < row.size()) line += std::string(width[c] - row[c].size(), ' ');
        }
        out << line << '\n';
      }
      out << "* = best route for that metric\n";
      break;
    }
    case ReportFormat::csv: {
      std::vector<std::string> header{"index", "nodes", "links", "hops"};
      for (MetricKind m : rep.metrics) header.emplace_back(to_string(m));
      for (MetricKind m : rep.metrics) header.push_back("winner_" + std::string(to_string(m)));
      out << join(header, ",") << "\r\n";
      for (std::size_t r = 0; r < n_routes; ++r) {
        std::vector<std::string> row{std::to_string(r), csv_field(join(rep.routes[r].nodes(), " ")),
                                     csv_field(join(rep.routes[r].link_ids(), " ")),
                                     std::to_string(rep.routes[r].hop_count())};
        for (std::size_t m = 0; m < n_metrics; ++m) row.push_back(format_number(rep.values[m][r].value));
        for (std::size_t m = 0; m < n_metrics; ++m) row.push_back(rep.winners[m] == r ? "1" : "0");
        out << join(row, ",") << "\r\n";
      }
      break;
    }
    case ReportFormat::json: {
      using nlohmann::ordered_json;
      ordered_json doc;
      doc["routes"] = ordered_json::array();
      for (std::size_t r = 0; r < n_routes; ++r) {
        doc["routes"].push_back({{"index", r},
                                 {"nodes", rep.routes[r].nodes()},
                                 {"links", rep.routes[r].link_ids()},
                                 {"hops", rep.routes[r].hop_count()}});
      }
      doc["metrics"] = ordered_json::object();
      doc["winners"] = ordered_json::object();
      for (std::size_t m = 0; m < n_metrics; ++m) {
        const std::string name(to_string(rep.metrics[m]));
        ordered_json vals = ordered_json::array();
        for (const auto& v : rep.values[m]) vals.push_back(v.value);
        doc["metrics"][name] = {{"unit", std::string(to_string(unit_of(m)))}, {"values", vals}};
        doc["winners"][name] = rep.winners[m];
      }
      out << doc.dump(2) << '\n';
      break;
    }
  }
  return out.str();
}

std::string render_single(const Route& route, MetricKind metric, const MetricValue& value,
                          ReportFormat format) {
  const std::string unit(to_string(value.unit));
  switch (format) {
    case ReportFormat::table: {
      std::string s = format_number(value.value);
      if (!unit.empty()) s += " " + unit;
      return s + "\n";
    }
    case ReportFormat::csv:
      return "metric,value,unit,nodes,links\r\n" + std::string(to_string(metric)) + "," +
             format_number(value.value) + "," + unit + "," + csv_field(join(route.nodes(), " ")) +
             "," + csv_field(join(route.link_ids(), " ")) + "\r\n";
    case ReportFormat::json: {
      nlohmann::ordered_json doc{{"metric", std::string(to_string(metric))},
                                 {"value", value.value},
                                 {"unit", unit},
                                 {"nodes", route.nodes()},
                                 {"links", route.link_ids()}};
      return doc.dump(2) + "\n";
    }
  }
  return {};
}

}  // namespace umetric
