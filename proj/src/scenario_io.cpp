#include "umetric/scenario_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <map>
#include <random>
#include <set>
#include <span>
#include <sstream>
#include <vector>

namespace umetric {

namespace {

struct Unit {
  std::string_view suffix;
  double scale;
  bool divide;  // value = mantissa / scale instead of mantissa * scale
};

constexpr Unit kRateUnits[] = {{"G", 1e9, false}, {"M", 1e6, false}, {"k", 1e3, false}, {"", 1.0, false}};
constexpr Unit kTimeUnits[] = {{"s", 1.0, false}, {"ms", 1e3, true}, {"us", 1e6, true}, {"", 1.0, false}};

double parse_number(std::string_view text, std::string_view* rest) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr == text.data()) {
    throw InputError("invalid number '" + std::string(text) + "'");
  }
  if (!std::isfinite(v)) throw InputError("non-finite number '" + std::string(text) + "'");
  *rest = text.substr(static_cast<std::size_t>(ptr - text.data()));
  return v;
}

template <std::size_t N>
double parse_with_units(std::string_view text, const Unit (&units)[N]) {
  std::string_view suffix;
  const double mantissa = parse_number(text, &suffix);
  for (const Unit& u : units) {
    if (u.suffix == suffix) return u.divide ? mantissa / u.scale : mantissa * u.scale;
  }
  throw InputError("unknown unit suffix '" + std::string(suffix) + "' in '" + std::string(text) + "'");
}

std::string shortest_with_precision(double v, int precision) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", precision, v);
  return buf;
}

// Among the units whose mantissa is >= 1, the shortest decimal text that
// parses back to exactly v wins; ties go to the larger unit.
template <std::size_t N, typename Parse>
std::string format_with_units(double v, const Unit (&units)[N], Parse parse, std::string_view bare_suffix) {
  if (v == 0.0) return "0";
  std::string best = format_number(v) + std::string(bare_suffix);
  for (const Unit& u : units) {
    if (u.suffix.empty()) break;
    const double mantissa = u.divide ? v * u.scale : v / u.scale;
    if (mantissa < 1.0) continue;
    for (int prec = 1; prec <= 17; ++prec) {
      std::string s = shortest_with_precision(mantissa, prec);
      if (s.find_first_of("eE") != std::string::npos) continue;
      s += u.suffix;
      if (parse(s) == v) {
        if (s.size() < best.size()) best = std::move(s);
        break;
      }
    }
  }
  return best;
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

LinkParams parse_link_fields(std::span<const std::string_view> fields, bool* duplex) {
  LinkParams p;
  std::set<std::string_view> seen;
  *duplex = false;
  for (std::string_view f : fields) {
    if (f == "duplex") {
      if (*duplex) throw InputError("duplicate 'duplex'");
      *duplex = true;
      continue;
    }
    const auto eq = f.find('=');
    if (eq == std::string_view::npos) throw InputError("expected key=value, got '" + std::string(f) + "'");
    const std::string_view key = f.substr(0, eq);
    const std::string_view val = f.substr(eq + 1);
    if (!seen.insert(key).second) throw InputError("duplicate key '" + std::string(key) + "'");
    if (key == "cap") {
      p.capacity = parse_rate(val);
    } else if (key == "bw") {
      p.available = parse_rate(val);
    } else if (key == "delay") {
      p.delay = parse_time(val);
    } else if (key == "jitter") {
      p.jitter = parse_time(val);
    } else if (key == "loss") {
      std::string_view rest;
      p.loss = parse_number(val, &rest);
      if (!rest.empty()) throw InputError("loss takes no unit suffix");
    } else if (key == "mtu") {
      std::uint32_t mtu = 0;
      auto [ptr, ec] = std::from_chars(val.data(), val.data() + val.size(), mtu);
      if (ec != std::errc() || ptr != val.data() + val.size() || mtu == 0) {
        throw InputError("mtu must be a positive integer");
      }
      p.mtu = mtu;
    } else {
      throw InputError("unknown key '" + std::string(key) + "'");
    }
  }
  if (!seen.count("cap")) throw InputError("missing cap=");
  if (!seen.count("bw")) throw InputError("missing bw=");
  return p;
}

}  // namespace

std::string format_number(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, ptr);
}

double parse_rate(std::string_view text) { return parse_with_units(text, kRateUnits); }

double parse_time(std::string_view text) { return parse_with_units(text, kTimeUnits); }

std::string format_rate(double v) {
  return format_with_units(v, kRateUnits, [](const std::string& s) { return parse_rate(s); }, "");
}

std::string format_time(double v) {
  return format_with_units(v, kTimeUnits, [](const std::string& s) { return parse_time(s); }, "s");
}

Topology parse_topology(std::string_view text) {
  RawTopology raw;
  std::map<std::string, std::size_t> node_line;
  std::map<std::string, std::size_t> link_line;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto tok = split_ws(line);
    if (tok.empty()) continue;

    try {
      if (tok[0] == "node") {
        if (tok.size() != 2) throw InputError("expected 'node <id>'");
        std::string id(tok[1]);
        if (!node_line.emplace(id, line_no).second) throw InputError("duplicate node " + id);
        raw.nodes.push_back(std::move(id));
      } else if (tok[0] == "link") {
        if (tok.size() < 4) throw InputError("expected 'link <id> <from> <to> key=value...'");
        bool duplex = false;
        const LinkParams params =
            parse_link_fields(std::span(tok).subspan(4), &duplex);
        std::string id(tok[1]);
        std::string from(tok[2]);
        std::string to(tok[3]);
        auto add = [&](std::string lid, std::string a, std::string b) {
          if (!link_line.emplace(lid, line_no).second) throw InputError("duplicate link id " + lid);
          raw.links.push_back(Link{std::move(lid), std::move(a), std::move(b), params});
        };
        if (duplex) {
          add(id + "_fwd", from, to);
          add(id + "_rev", to, from);
        } else {
          add(id, from, to);
        }
      } else {
        throw InputError("unknown record '" + std::string(tok[0]) + "'");
      }
    } catch (const ParseError&) {
      throw;
    } catch (const InputError& e) {
      throw ParseError(line_no, e.what());
    }
    if (end == text.size()) break;
  }

  try {
    return validate_topology(std::move(raw));
  } catch (const ValidationError& e) {
    std::size_t line = 0;
    if (e.link_id()) {
      if (auto it = link_line.find(*e.link_id()); it != link_line.end()) line = it->second;
    }
    throw ParseError(line, e.what());
  }
}

std::string serialize_topology(const Topology& topology) {
  std::ostringstream out;
  for (const auto& n : topology.nodes()) out << "node " << n << '\n';
  for (const auto& l : topology.links()) {
    const LinkParams& p = l.params;
    out << "link " << l.id << ' ' << l.from << ' ' << l.to
        << " cap=" << format_rate(p.capacity)
        << " bw=" << format_rate(p.available)
        << " delay=" << format_time(p.delay)
        << " loss=" << format_number(p.loss)
        << " jitter=" << format_time(p.jitter)
        << " mtu=" << p.mtu << '\n';
  }
  return out.str();
}

void RandomSpec::validate() const {
  auto check = [](const Range& r, double min, double max, const char* name) {
    if (!std::isfinite(r.lo) || !std::isfinite(r.hi) || r.lo > r.hi || r.lo < min || r.hi > max) {
      throw InputError(std::string("invalid ") + name + " range");
    }
  };
  if (node_count < 2) throw InputError("need at least 2 nodes");
  if (!(edge_probability > 0.0 && edge_probability <= 1.0)) {
    throw InputError("edge probability must lie in (0,1]");
  }
  check(capacity, 0.0, HUGE_VAL, "capacity");
  if (capacity.lo < 1e3) throw InputError("capacity range must start at 1k or more");
  check(available_ratio, 0.0, 1.0, "available bandwidth ratio");
  check(delay, 0.0, HUGE_VAL, "delay");
  check(loss, 0.0, 1.0, "loss");
  check(jitter, 0.0, HUGE_VAL, "jitter");
}

Topology generate_random(const RandomSpec& spec) {
  spec.validate();
  std::mt19937_64 rng(spec.seed);
  auto unit = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  auto draw = [&](const Range& r) { return r.lo + (r.hi - r.lo) * unit(); };
  // Quantized so the serialized form stays readable.
  auto quantize = [](double v, double per_unit) { return std::round(v * per_unit) / per_unit; };

  std::size_t width = 2;
  for (std::size_t n = spec.node_count - 1; n >= 100; n /= 10) ++width;
  RawTopology raw;
  for (std::size_t i = 0; i < spec.node_count; ++i) {
    std::string digits = std::to_string(i);
    raw.nodes.push_back("n" + std::string(width - std::min(width, digits.size()), '0') + digits);
  }

  for (std::size_t u = 0; u < spec.node_count; ++u) {
    for (std::size_t v = 0; v < spec.node_count; ++v) {
      if (u == v) continue;
      if (!(unit() < spec.edge_probability)) continue;
      LinkParams p;
      p.capacity = std::max(1e3, quantize(draw(spec.capacity), 1e-3));
      p.available = std::clamp(std::round(draw(spec.available_ratio) * p.capacity), 0.0, p.capacity);
      p.delay = std::max(0.0, quantize(draw(spec.delay), 1e6));
      p.loss = std::clamp(quantize(draw(spec.loss), 1e6), 0.0, 1.0);
      p.jitter = std::max(0.0, quantize(draw(spec.jitter), 1e6));
      const auto& a = raw.nodes[u];
      const auto& b = raw.nodes[v];
      raw.links.push_back(Link{a + "_" + b, a, b, p});
    }
  }
  return validate_topology(std::move(raw));
}

Topology build_fig3_scenario() {
  LinkParams slow;
  slow.capacity = 1.5e5;
  slow.available = 1e5;
  slow.delay = 0.05;
  slow.jitter = 0.001;

  LinkParams fast;
  fast.capacity = 1.05e7;
  fast.available = 1e7;
  fast.delay = 0.002;
  fast.jitter = 0.001;

  RawTopology raw;
  raw.nodes = {"S", "M", "T", "R1", "R2", "R3"};
  raw.links = {
      {"d1", "S", "M", slow},   {"d2", "M", "T", slow},
      {"b1", "S", "R1", fast},  {"b2", "R1", "R2", fast},
      {"b3", "R2", "R3", fast}, {"b4", "R3", "T", fast},
  };
  return validate_topology(std::move(raw));
}

}  // namespace umetric
