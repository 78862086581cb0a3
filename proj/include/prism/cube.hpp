#pragma once

// Punctured cubes over [n] = {0..n}, their isomax undercategories, edge
// kinds and labelled decomposition diagrams.

#include "prism/liegroups.hpp"
#include "prism/priestley.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace prism {

/// Nonempty subset of {0..n}, n < 32, as a bit mask.
struct Subset {
  std::uint32_t mask = 0;

  static Subset of(std::initializer_list<unsigned> elems);
  unsigned max() const;
  unsigned size() const;
  bool contains(unsigned j) const { return (mask >> j) & 1u; }
  Subset with(unsigned j) const { return {mask | (1u << j)}; }
  std::vector<unsigned> elements() const;
  /// Digits in increasing order, e.g. "02".
  std::string str() const;

  friend bool operator==(const Subset&, const Subset&) = default;
};

/// Canonical subset order: by size, then by the printed form.
bool subset_less(const Subset& a, const Subset& b);

enum class EdgeKindTag { projection, diagonal, laxness };

struct EdgeKind {
  EdgeKindTag tag = EdgeKindTag::projection;
  unsigned j = 0;
  unsigned zeta = 0;

  friend bool operator==(const EdgeKind&, const EdgeKind&) = default;
};

unsigned isomax_dim(const Subset& phi);
/// "[0]", "[1]", "[1] × [1]", ...
std::string cube_shape(unsigned dim);
/// Supersets ψ ⊆ [n] of φ with max ψ = max φ, ordered by size then text.
std::vector<Subset> isomax_members(const Subset& phi);
EdgeKind classify_edge(const Subset& phi, unsigned j, unsigned n);

/// All nonempty subsets of [n] in canonical order.
std::vector<Subset> punctured_cube(unsigned n);
/// Cover relations φ ⊂ φ ∪ {j}.
std::vector<std::pair<Subset, Subset>> cube_covers(unsigned n);

struct ScheduleStep {
  unsigned stratum = 0;
  std::vector<unsigned> residual;
  std::string transition;  // "t_k"
  std::string label;       // "Γ_{P_{k+1}} ∘ t_k : T_k → T_{k+1}"
};

std::vector<ScheduleStep> recollement_schedule(unsigned n);

struct CubeNode {
  Subset subset;
  unsigned cube_dim = 0;
  unsigned stratum = 0;
  std::vector<std::string> labels;
};

struct CubeEdge {
  Subset from;
  Subset to;
  EdgeKind kind;
};

struct CubeDiagram {
  unsigned n = 0;
  std::vector<CubeNode> nodes;  // canonical subset order
  std::vector<CubeEdge> edges;  // by (from, j)
  /// Labels per stratum, each point once.
  std::vector<std::vector<std::string>> stratum_labels;
};

/// Skeleton with the given labels per stratum (n = labels.size() - 1).
CubeDiagram make_diagram(const std::vector<std::vector<std::string>>& stratum_labels);
/// Labels "Λ_<point>". Throws NotDispersible.
CubeDiagram build_decomposition(const FlaggedPriestley& p);
/// Labels "Λ_<key> D(H^*(B <identity>)[<component>])". Throws NotDispersible.
CubeDiagram build_decomposition(const GroupId& g, unsigned bound);

std::string edge_kind_name(EdgeKindTag t);
std::string to_dot(const CubeDiagram& d);
std::string to_json(const CubeDiagram& d);

}  // namespace prism
