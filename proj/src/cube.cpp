#include "prism/cube.hpp"

#include "prism/dispersion.hpp"
#include "prism/error.hpp"
#include "prism/snapshot.hpp"

#include <json.hpp>

#include <algorithm>
#include <bit>
#include <sstream>

namespace prism {

Subset Subset::of(std::initializer_list<unsigned> elems) {
  Subset s;
  for (auto e : elems) s.mask |= 1u << e;
  return s;
}

unsigned Subset::max() const { return 31u - static_cast<unsigned>(std::countl_zero(mask)); }

unsigned Subset::size() const { return static_cast<unsigned>(std::popcount(mask)); }

std::vector<unsigned> Subset::elements() const {
  std::vector<unsigned> out;
  for (unsigned j = 0; j < 32; ++j)
    if (contains(j)) out.push_back(j);
  return out;
}

std::string Subset::str() const {
  std::string s;
  for (auto e : elements()) s += std::to_string(e);
  return s;
}

bool subset_less(const Subset& a, const Subset& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.str() < b.str();
}

unsigned isomax_dim(const Subset& phi) { return phi.max() - phi.size() + 1; }

std::string cube_shape(unsigned dim) {
  if (dim == 0) return "[0]";
  std::string s = "[1]";
  for (unsigned i = 1; i < dim; ++i) s += " × [1]";
  return s;
}

std::vector<Subset> isomax_members(const Subset& phi) {
  std::vector<unsigned> free;
  for (unsigned j = 0; j < phi.max(); ++j)
    if (!phi.contains(j)) free.push_back(j);
  std::vector<Subset> out;
  for (std::uint32_t pick = 0; pick < (1u << free.size()); ++pick) {
    Subset s = phi;
    for (std::size_t i = 0; i < free.size(); ++i)
      if ((pick >> i) & 1u) s = s.with(free[i]);
    out.push_back(s);
  }
  std::sort(out.begin(), out.end(), subset_less);
  return out;
}

EdgeKind classify_edge(const Subset& phi, unsigned j, unsigned n) {
  if (j > n || phi.contains(j)) throw std::invalid_argument("edge index must lie in [n] outside the subset");
  const unsigned top = phi.max();
  if (j < top) return {EdgeKindTag::projection, j, 0};
  if (j == top + 1) return {EdgeKindTag::diagonal, j, 0};
  return {EdgeKindTag::laxness, j, j - top - 1};
}

std::vector<Subset> punctured_cube(unsigned n) {
  if (n >= 31) throw std::invalid_argument("punctured_cube: n too large");
  std::vector<Subset> out;
  for (std::uint32_t m = 1; m < (1u << (n + 1)); ++m) out.push_back({m});
  std::sort(out.begin(), out.end(), subset_less);
  return out;
}

std::vector<std::pair<Subset, Subset>> cube_covers(unsigned n) {
  std::vector<std::pair<Subset, Subset>> out;
  for (const auto& phi : punctured_cube(n))
    for (unsigned j = 0; j <= n; ++j)
      if (!phi.contains(j)) out.emplace_back(phi, phi.with(j));
  return out;
}

std::vector<ScheduleStep> recollement_schedule(unsigned n) {
  std::vector<ScheduleStep> out;
  for (unsigned k = 0; k < n; ++k) {
    ScheduleStep s;
    s.stratum = k;
    for (unsigned r = k + 1; r <= n; ++r) s.residual.push_back(r);
    s.transition = "t_" + std::to_string(k);
    s.label = "Γ_{P_" + std::to_string(k + 1) + "} ∘ t_" + std::to_string(k) + " : T_" + std::to_string(k) + " → T_" +
              std::to_string(k + 1);
    out.push_back(std::move(s));
  }
  return out;
}

CubeDiagram make_diagram(const std::vector<std::vector<std::string>>& stratum_labels) {
  CubeDiagram d;
  d.n = stratum_labels.empty() ? 0 : static_cast<unsigned>(stratum_labels.size() - 1);
  d.stratum_labels = stratum_labels;
  if (d.stratum_labels.empty()) d.stratum_labels.emplace_back();
  for (const auto& phi : punctured_cube(d.n)) {
    d.nodes.push_back({phi, isomax_dim(phi), phi.max(), d.stratum_labels[phi.max()]});
    for (unsigned j = 0; j <= d.n; ++j)
      if (!phi.contains(j)) d.edges.push_back({phi, phi.with(j), classify_edge(phi, j, d.n)});
  }
  return d;
}

namespace {

template <class PointLabel>
CubeDiagram decomposition(const FlaggedPriestley& p, PointLabel&& label) {
  const auto h = thomason_heights(p);
  if (!h.all_finite()) fail(errors::kNotDispersible, "the space has points of infinite height");
  std::vector<std::vector<std::string>> labels(h.max().value() + 1);
  for (std::size_t x = 0; x < p.size(); ++x) labels[h.points[x].value()].push_back(label(x));
  for (std::size_t f = 0; f < p.families().size(); ++f)
    labels[h.families[f].value()].push_back("⋯ (family " + p.families()[f].id + ")");
  return make_diagram(labels);
}

}  // namespace

CubeDiagram build_decomposition(const FlaggedPriestley& p) {
  return decomposition(p, [&](std::size_t x) { return "Λ_" + p.name(x); });
}

CubeDiagram build_decomposition(const GroupId& g, unsigned bound) {
  const auto snap = flagged_snapshot(g, bound);
  return decomposition(snap.space, [&](std::size_t x) {
    const auto w = weyl_data(g, snap.keys[x]);
    return "Λ_" + snap.space.name(x) + " D(H^*(B " + identity_name(w) + ")[" + w.component + "])";
  });
}

std::string edge_kind_name(EdgeKindTag t) {
  switch (t) {
    case EdgeKindTag::projection: return "projection";
    case EdgeKindTag::diagonal: return "diagonal";
    case EdgeKindTag::laxness: return "laxness";
  }
  return "?";
}

namespace {

std::string edge_label(const CubeEdge& e) {
  switch (e.kind.tag) {
    case EdgeKindTag::projection: return "π_" + std::to_string(e.kind.j);
    case EdgeKindTag::diagonal: return "F(i↦i+1)^Δ";
    case EdgeKindTag::laxness:
      return "η_{" + std::to_string(e.from.max()) + "," + std::to_string(e.kind.j) + "}";
  }
  return "";
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string to_dot(const CubeDiagram& d) {
  std::ostringstream os;
  os << "digraph cube {\n  node [shape=box];\n";
  for (const auto& node : d.nodes) {
    os << "  \"φ=" << node.subset.str() << "\" [label=\"φ=" << node.subset.str() << "\\ndim " << node.cube_dim
       << "\\nstratum " << node.stratum;
    for (const auto& l : node.labels) os << "\\n" << dot_escape(l);
    os << "\"];\n";
  }
  for (const auto& e : d.edges)
    os << "  \"φ=" << e.from.str() << "\" -> \"φ=" << e.to.str() << "\" [kind=" << edge_kind_name(e.kind.tag)
       << ", zeta=" << e.kind.zeta << ", label=\"" << dot_escape(edge_label(e)) << "\"];\n";
  os << "}\n";
  return os.str();
}

std::string to_json(const CubeDiagram& d) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["schema"] = "cube/v1";
  j["n"] = d.n;
  j["strata"] = d.stratum_labels;
  j["nodes"] = ordered_json::array();
  for (const auto& node : d.nodes)
    j["nodes"].push_back({{"subset", node.subset.str()},
                          {"cubeDim", node.cube_dim},
                          {"stratum", node.stratum},
                          {"labels", node.labels}});
  j["edges"] = ordered_json::array();
  for (const auto& e : d.edges) {
    ordered_json edge{{"from", e.from.str()}, {"to", e.to.str()}, {"j", e.kind.j}, {"kind", edge_kind_name(e.kind.tag)}};
    if (e.kind.tag == EdgeKindTag::laxness) edge["zeta"] = e.kind.zeta;
    edge["label"] = edge_label(e);
    j["edges"].push_back(std::move(edge));
  }
  return j.dump(2) + "\n";
}

}  // namespace prism
