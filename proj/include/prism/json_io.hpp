#pragma once

// On-disk formats. Every loader rejects unknown fields with SchemaError.

#include "prism/dispersion.hpp"
#include "prism/liegroups.hpp"
#include "prism/priestley.hpp"

#include <string>

namespace prism {

std::string read_file(const std::string& path);

/// flagged-priestley/v1
FlaggedPriestley flagged_from_json(const std::string& text);
/// Order written as cover pairs, family bounds as their generators.
std::string flagged_to_json(const FlaggedPriestley& p);

/// { "points": {name: n}, "families": {id: n} }
DispersionCandidate candidate_from_json(const std::string& text);
std::string candidate_to_json(const DispersionCandidate& c);

/// { "name"?, "classes": [{ "name", "order", "weylOrder" }] }
FiniteGroup finite_group_from_json(const std::string& text);
/// { "name"?, "rank", "generators": [[[..]]], "relations": [string] }
ToralSemidirect semidirect_from_json(const std::string& text);

/// circle | torus:<r> | o2 | so3 | nsu3t | finite:<path> | semidirect:<path>
GroupId parse_group(const std::string& spec);
bool looks_like_group(const std::string& spec);

}  // namespace prism
