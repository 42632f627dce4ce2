#pragma once

#include <string>

#include "kgraph/graph.hpp"

namespace kgraph {

// parses the JSON graph format; syntax errors carry line and column
KGraphSpec parse_kgraph(const std::string& text);

KGraphSpec load_kgraph_file(const std::string& path);

// canonical serialization; parse(serialize(s)) == s field for field
std::string serialize(const KGraphSpec& spec);

}  // namespace kgraph
