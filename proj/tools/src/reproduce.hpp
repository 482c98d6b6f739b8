#pragma once

#include <string>
#include <vector>

#include "stablegenus/stable_bounds.hpp"

namespace sgenus {

struct Check {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct Artifact {
  std::string filename;
  std::string content;
};

struct Reproduction {
  std::string target;
  std::vector<Check> checks;
  std::vector<Artifact> artifacts;
  bool ok() const;
};

/// figure1, figure3, figure4, table-4d.
std::vector<std::string> reproduce_targets();

/// Recomputes a target and compares it with the expected data compiled in below.
/// Throws stablegenus::InputError for an unknown target.
Reproduction reproduce(const std::string& target, const stablegenus::Registry& registry);

}  // namespace sgenus
