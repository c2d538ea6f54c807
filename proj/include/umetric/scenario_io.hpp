#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "umetric/netmodel.hpp"

namespace umetric {

// Topology text format, one record per line, '#' starts a comment:
//
//   node <id>
//   link <id> <from> <to> cap=<rate> bw=<rate> [delay=<time>] [loss=<p>]
//        [jitter=<time>] [mtu=<bytes>] [duplex]
//
// Rates take an optional k/M/G suffix (bits per second); times take
// s/ms/us (a bare number is seconds). delay, loss and jitter default to 0,
// mtu to 1500. `duplex` expands to <id>_fwd and <id>_rev with equal params.

/// Throws ParseError (with line number) on syntax and semantic errors.
Topology parse_topology(std::string_view text);

/// Canonical text: nodes sorted, links sorted by id, SI-suffixed values
/// that parse back to the identical doubles.
std::string serialize_topology(const Topology& topology);

/// Parses "10M", "2.5k", "1500" into bits per second.
double parse_rate(std::string_view text);
/// Parses "2ms", "50us", "0.1s", "0" into seconds.
double parse_time(std::string_view text);

std::string format_rate(double bits_per_second);
std::string format_time(double seconds);

/// Shortest decimal string that round-trips to the same double.
std::string format_number(double value);

struct Range {
  double lo = 0.0;
  double hi = 0.0;
};

struct RandomSpec {
  std::size_t node_count = 6;
  double edge_probability = 0.5;
  Range capacity{1e6, 1e9};         // bits/s
  Range available_ratio{0.05, 1.0};  // B / C
  Range delay{1e-4, 5e-2};          // seconds
  Range loss{0.0, 0.05};
  Range jitter{0.0, 1e-2};          // seconds
  std::uint64_t seed = 1;

  void validate() const;
};

/// Reproducible random topology. Nodes are n00, n01, ...; each ordered
/// pair (u, v), u != v, gets link u_v with probability edge_probability.
/// Uses std::mt19937_64 with its raw 64-bit output mapped to [0,1) by the
/// top 53 bits, so output is identical across standard libraries.
Topology generate_random(const RandomSpec& spec);

/// Two routes S -> T: a two-hop low-speed path through M, and a four-hop
/// high-speed backbone through R1, R2, R3. Hop-count routing prefers the
/// former; OSPF and the universal metric prefer the latter.
Topology build_fig3_scenario();

}  // namespace umetric
