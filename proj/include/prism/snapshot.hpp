#pragma once

// Finite flagged presentations of the subgroup space of a catalog group.

#include "prism/dispersion.hpp"
#include "prism/liegroups.hpp"

#include <vector>

namespace prism {

struct SnapshotFamily {
  unsigned member_dim = 0;
  unsigned member_rank = 0;
  std::vector<SubgroupKey> sample_keys;
};

struct Snapshot {
  GroupId group;
  unsigned bound = 0;
  FlaggedPriestley space;
  std::vector<SubgroupKey> keys;          // indexed like space.points()
  std::vector<SnapshotFamily> families;   // indexed like space.families()
};

/// Throws NotEnumerable for groups whose subgroup classes are not listed
/// (semidirect products).
Snapshot flagged_snapshot(const GroupId& g, unsigned bound);

DispersionCandidate dimension_candidate(const Snapshot& s);
DispersionCandidate rank_candidate(const Snapshot& s);

}  // namespace prism
