#pragma once

// Thomason filtration, dispersions and the visibility / Noetherian checks
// built on top of them.

#include "prism/height.hpp"
#include "prism/priestley.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace prism {

struct HeightAssignment {
  std::vector<Height> points;    // indexed like P.points()
  std::vector<Height> families;  // indexed like P.families()

  friend bool operator==(const HeightAssignment&, const HeightAssignment&) = default;

  Height max() const;
  bool all_finite() const;
};

/// Candidate dispersion keyed by point names and family ids.
struct DispersionCandidate {
  std::map<std::string, unsigned> points;
  std::map<std::string, unsigned> families;
};

struct DispersionVerdict {
  bool ok = true;
  std::string witness;  // first violation, empty when ok
};

FlaggedPriestley thomason_derivative(const FlaggedPriestley& p);
FinitePriestley thomason_derivative(const FinitePriestley& p);

/// Least fixed point over N ∪ {∞}. Throws InconsistentHint when a declared
/// member height is below what the members' lower neighbours force.
HeightAssignment thomason_heights(const FlaggedPriestley& p);
HeightAssignment thomason_heights(const FinitePriestley& p);
/// Thomason heights of the same space with the order forgotten.
HeightAssignment cb_heights(const FlaggedPriestley& p);

bool is_dispersible(const FlaggedPriestley& p);
Height height_of_space(const FlaggedPriestley& p);

/// Throws IncompleteCandidate if some point or family has no value.
DispersionVerdict is_dispersion(const FlaggedPriestley& p, const DispersionCandidate& chi);
/// Requires all heights finite.
DispersionCandidate candidate_from_heights(const FlaggedPriestley& p, const HeightAssignment& h);

struct Strata {
  unsigned level = 0;
  SymbolicSet stratum;   // χ = λ
  SymbolicSet below;     // χ < λ
  SymbolicSet at_least;  // χ ≥ λ
};

/// Throws ChecksFailed naming the failing clause.
Strata strata(const FlaggedPriestley& p, const DispersionCandidate& chi, unsigned level);

/// Least open down-set U with up(p) ∩ U = {p}, if any.
std::optional<SymbolicSet> weakly_visible(const FlaggedPriestley& p, PointIndex point);

/// Points ≥ `point` with the families whose members and limit lie above it.
FlaggedPriestley gen_closure(const FlaggedPriestley& p, PointIndex point);
bool is_generically_noetherian(const FlaggedPriestley& p);

/// The subspace on `keep` together with the families whose limit it holds.
/// Throws InvalidSpace unless no order relation or family crosses the
/// boundary of `keep`, i.e. unless the piece is clopen.
FlaggedPriestley clopen_piece(const FlaggedPriestley& p, const Bits& keep);

/// Pieces of P that no order relation or family connects, each clopen. Sorted
/// by their first point.
std::vector<FlaggedPriestley> connected_components(const FlaggedPriestley& p);

}  // namespace prism
