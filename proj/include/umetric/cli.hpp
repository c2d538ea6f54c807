#pragma once

#include <iostream>
#include <string>
#include <vector>

#include "umetric/netmodel.hpp"

namespace umetric::cli {

enum ExitCode : int {
  kOk = 0,
  kInputError = 2,
  kUnreachable = 3,
  kCapExceeded = 4,
};

/// Runs one command line (program name excluded). Subcommands: metric,
/// route, compare, gen, fig3. `--topology -` reads the topology from in.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        std::istream& in = std::cin);

/// Turns a node sequence into a Route. Among parallel links the one with
/// the smallest universal-metric hop term under policy is taken, ties to
/// the smaller link id. Throws UnreachableError if two consecutive nodes
/// have no link between them.
Route resolve_node_route(const Topology& topology, const std::vector<std::string>& nodes,
                         const DejitterPolicy& policy);

}  // namespace umetric::cli
