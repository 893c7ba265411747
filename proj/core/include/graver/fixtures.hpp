#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "graver/graph.hpp"

namespace graver {

/// Names of the built-in graphs, in listing order.
std::vector<std::string> fixture_names();

/// Throws std::invalid_argument for an unknown name.
Graph builtin_fixture(std::string_view name);

/// One-line description of a built-in graph.
std::string fixture_summary(std::string_view name);

}  // namespace graver
