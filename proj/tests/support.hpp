#pragma once

#include "prism/snapshot.hpp"

#include <string>

namespace prism::testing {

/// Snapshots are expensive for T^3; build each (group, bound) once.
const Snapshot& snapshot(const GroupId& g, unsigned bound);

std::string source_path(const std::string& rel);
std::string slurp(const std::string& path);

/// Heights keyed by point name / family id.
Height point_height(const FlaggedPriestley& p, const HeightAssignment& h, const std::string& name);
Height family_height(const FlaggedPriestley& p, const HeightAssignment& h, const std::string& id);

}  // namespace prism::testing
