#pragma once

#include <optional>
#include <string>
#include <vector>

#include "berge/types.hpp"

namespace berge {

// Built-in pattern names: k2 k3 k4 k5 k4e p3 p4 c4 c5 2k2
std::optional<Graph> builtin_pattern(const std::string& name);
std::vector<std::string> builtin_pattern_names();

} // namespace berge
