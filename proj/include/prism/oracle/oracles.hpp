#pragma once

// Brute-force reference computations, independent of the fast paths they
// are compared against.

#include "prism/cube.hpp"
#include "prism/dispersion.hpp"
#include "prism/lattice.hpp"
#include "prism/priestley.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace prism::oracle {

/// |{ψ ⊆ [n] : φ ⊆ ψ, max ψ = max φ}| by scanning every subset of [n].
std::size_t isomax_count(const Subset& phi, unsigned n);

/// Order of the torsion part of super/sub, by enumerating the candidate
/// cosets (Σ a_i h_i)/m with m the product of sub's pivots. Nothing if
/// sub ⊄ super.
std::optional<std::size_t> torsion_order(const Lattice& sub, const Lattice& super);

/// Heights read off from repeated Thomason derivatives: a point removed at
/// step s has height s. Points still present after `steps` derivatives are
/// absent from the maps.
struct DerivedHeights {
  std::map<std::string, unsigned> points;
  std::map<std::string, unsigned> families;
};
DerivedHeights heights_by_derivative(const FlaggedPriestley& p, unsigned steps);

/// Every subset of P (|P| ≤ 20) that is down-closed, sorted by index list.
std::vector<Bits> down_sets(const FinitePriestley& p);

/// Length of the longest chain ending at each point.
std::vector<unsigned> longest_chain_below(const FinitePriestley& p);

/// Random partial order on n points; deterministic in `seed`.
FinitePriestley random_poset(unsigned n, unsigned seed, double density = 0.3);

struct SuiteResult {
  std::string name;
  std::size_t checks = 0;
  std::vector<std::string> mismatches;
};

/// "isomax", "snf", "derivative" or "downsets".
SuiteResult run_suite(const std::string& name);
std::vector<std::string> suite_names();

}  // namespace prism::oracle
