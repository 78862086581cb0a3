#pragma once

// Text / JSON / DOT renderings of library results. Collections are emitted in
// canonical order so that equal inputs give equal bytes.

#include "prism/cube.hpp"
#include "prism/dispersion.hpp"
#include "prism/liegroups.hpp"
#include "prism/priestley.hpp"

#include <string>
#include <vector>

namespace prism {

enum class Format { text, json, dot };

struct NoetherianReport {
  std::string group;
  bool noetherian = false;
  bool phi_finite = false;
  Height burnside_rank;
  std::optional<bool> generically_noetherian;  // needs an enumerable snapshot
};

NoetherianReport noetherian_report(const GroupId& g, unsigned bound);

struct IsomaxRow {
  Subset phi;
  unsigned dim = 0;
  std::vector<Subset> members;
};
std::vector<IsomaxRow> isomax_table(unsigned n);

/// Throws std::invalid_argument for formats the report does not support.
std::string render_space(const FlaggedPriestley& p, Format f);
std::string render_heights(const FlaggedPriestley& p, const HeightAssignment& h, Format f);
std::string render_verdict(const DispersionVerdict& v, Format f);
std::string render_clopen(const FlaggedPriestley& p, const std::vector<ClopenClass>& classes, Format f);
std::string render_noetherian(const NoetherianReport& r, Format f);
std::string render_isomax(unsigned n, const std::vector<IsomaxRow>& rows, Format f);
std::string render_cube(const CubeDiagram& d, Format f);

}  // namespace prism
