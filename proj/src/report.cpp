#include "prism/report.hpp"

#include "prism/json_io.hpp"
#include "prism/snapshot.hpp"

#include <json.hpp>

#include <sstream>
#include <stdexcept>

namespace prism {

using nlohmann::ordered_json;

namespace {

[[noreturn]] void unsupported(const char* what, Format f) {
  static const char* names[] = {"text", "json", "dot"};
  throw std::invalid_argument(std::string(what) + " has no " + names[static_cast<int>(f)] + " output");
}

ordered_json height_json(Height h) { return h.is_finite() ? ordered_json(h.value()) : ordered_json("inf"); }

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

std::string brace_list(const std::vector<Subset>& members) {
  std::string s = "{";
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i) s += ", ";
    s += members[i].str();
  }
  return s + "}";
}

}  // namespace

NoetherianReport noetherian_report(const GroupId& g, unsigned bound) {
  NoetherianReport r;
  r.group = g.str();
  r.noetherian = spectrum_is_noetherian(g);
  r.phi_finite = phi_is_finite(g);
  r.burnside_rank = burnside_rank(g);
  if (g.kind() != GroupKind::semidirect)
    r.generically_noetherian = is_generically_noetherian(flagged_snapshot(g, bound).space);
  return r;
}

std::vector<IsomaxRow> isomax_table(unsigned n) {
  std::vector<IsomaxRow> rows;
  for (const auto& phi : punctured_cube(n)) rows.push_back({phi, isomax_dim(phi), isomax_members(phi)});
  return rows;
}

std::string render_space(const FlaggedPriestley& p, Format f) {
  if (f == Format::json) return flagged_to_json(p);
  std::ostringstream os;
  if (f == Format::dot) {
    os << "digraph hasse {\n  rankdir=BT;\n";
    for (const auto& name : p.points()) os << "  \"" << name << "\";\n";
    for (const auto& fam : p.families())
      os << "  \"" << fam.id << "\" [shape=box, style=dashed, label=\"" << fam.id << " → " << p.name(fam.limit) << "\"];\n";
    for (std::size_t a = 0; a < p.size(); ++a)
      for (std::size_t b = 0; b < p.size(); ++b)
        if (p.lt(a, b) && (p.up(a) & p.down(b)).count() == 2)
          os << "  \"" << p.name(a) << "\" -> \"" << p.name(b) << "\";\n";
    for (const auto& fam : p.families()) {
      Bits lt_min = fam.member_lt;
      for_each_bit(fam.member_lt, [&](std::size_t x) {
        Bits above = p.up(x);
        above.reset(x);
        lt_min -= above;
      });
      Bits gt_max = fam.member_gt;
      for_each_bit(fam.member_gt, [&](std::size_t x) {
        Bits below = p.down(x);
        below.reset(x);
        gt_max -= below;
      });
      for_each_bit(gt_max, [&](std::size_t x) { os << "  \"" << p.name(x) << "\" -> \"" << fam.id << "\";\n"; });
      for_each_bit(lt_min, [&](std::size_t x) { os << "  \"" << fam.id << "\" -> \"" << p.name(x) << "\";\n"; });
    }
    os << "}\n";
    return os.str();
  }
  os << "points " << p.size() << "\n";
  for (const auto& name : p.points()) os << "  " << name << "\n";
  os << "covers\n";
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = 0; b < p.size(); ++b)
      if (p.lt(a, b) && (p.up(a) & p.down(b)).count() == 2) os << "  " << p.name(a) << " < " << p.name(b) << "\n";
  os << "families " << p.families().size() << "\n";
  for (const auto& fam : p.families()) {
    os << "  " << fam.id << " -> " << p.name(fam.limit) << " [" << to_string(fam.member_order) << "]";
    os << " below " << fam.member_lt.count() << ", above " << fam.member_gt.count();
    if (fam.height_hint) os << ", hint " << *fam.height_hint;
    os << "\n";
  }
  return os.str();
}

std::string render_heights(const FlaggedPriestley& p, const HeightAssignment& h, Format f) {
  if (f == Format::json) {
    ordered_json j;
    j["schema"] = "heights/v1";
    j["points"] = ordered_json::object();
    for (std::size_t x = 0; x < p.size(); ++x) j["points"][p.name(x)] = height_json(h.points[x]);
    j["families"] = ordered_json::object();
    for (std::size_t i = 0; i < p.families().size(); ++i) j["families"][p.families()[i].id] = height_json(h.families[i]);
    j["dispersible"] = h.all_finite();
    j["height"] = height_json(h.max());
    return dump(j);
  }
  if (f != Format::text) unsupported("heights", f);
  std::ostringstream os;
  for (std::size_t x = 0; x < p.size(); ++x) os << p.name(x) << "\t" << h.points[x] << "\n";
  for (std::size_t i = 0; i < p.families().size(); ++i) os << "family " << p.families()[i].id << "\t" << h.families[i] << "\n";
  os << "dispersible\t" << (h.all_finite() ? "true" : "false") << "\n";
  os << "height\t" << h.max() << "\n";
  return os.str();
}

std::string render_verdict(const DispersionVerdict& v, Format f) {
  if (f == Format::json) {
    ordered_json j{{"dispersion", v.ok}};
    if (!v.ok) j["witness"] = v.witness;
    return dump(j);
  }
  if (f != Format::text) unsupported("check-dispersion", f);
  return v.ok ? "true\n" : "false\t" + v.witness + "\n";
}

std::string render_clopen(const FlaggedPriestley& p, const std::vector<ClopenClass>& classes, Format f) {
  if (f == Format::json) {
    ordered_json j = ordered_json::array();
    for (const auto& c : classes) {
      ordered_json cj;
      std::vector<std::string> req, allowed;
      for_each_bit(c.required, [&](std::size_t i) { req.push_back(p.name(i)); });
      for_each_bit(c.allowed, [&](std::size_t i) { allowed.push_back(p.name(i)); });
      cj["required"] = req;
      cj["allowed"] = allowed;
      cj["families"] = ordered_json::object();
      for (std::size_t i = 0; i < c.tags.size(); ++i)
        cj["families"][p.families()[i].id] = c.tags[i] == FamilyTag::finite ? "finite" : "cofinite";
      j.push_back(std::move(cj));
    }
    return dump(j);
  }
  if (f != Format::text) unsupported("closed-sets", f);
  std::ostringstream os;
  os << classes.size() << " classes\n";
  for (const auto& c : classes) os << describe(p, c) << "\n";
  return os.str();
}

std::string render_noetherian(const NoetherianReport& r, Format f) {
  if (f == Format::json) {
    ordered_json j{{"group", r.group},
                   {"noetherian", r.noetherian},
                   {"phiFinite", r.phi_finite},
                   {"burnsideRank", height_json(r.burnside_rank)},
                   {"genericallyNoetherian", r.generically_noetherian ? ordered_json(*r.generically_noetherian)
                                                                      : ordered_json(nullptr)}};
    return dump(j);
  }
  if (f != Format::text) unsupported("noetherian", f);
  return r.noetherian ? "true\n" : "false\n";
}

std::string render_isomax(unsigned n, const std::vector<IsomaxRow>& rows, Format f) {
  if (f == Format::json) {
    ordered_json j;
    j["n"] = n;
    j["rows"] = ordered_json::array();
    for (const auto& r : rows) {
      std::vector<std::string> members;
      for (const auto& m : r.members) members.push_back(m.str());
      j["rows"].push_back({{"subset", r.phi.str()}, {"dim", r.dim}, {"members", members}});
    }
    return dump(j);
  }
  if (f != Format::text) unsupported("isomax", f);
  std::ostringstream os;
  for (const auto& r : rows) os << r.phi.str() << ": " << brace_list(r.members) << " ≅ " << cube_shape(r.dim) << "\n";
  return os.str();
}

std::string render_cube(const CubeDiagram& d, Format f) {
  if (f == Format::json) return to_json(d);
  if (f == Format::dot) return to_dot(d);
  std::ostringstream os;
  os << "n " << d.n << ", nodes " << d.nodes.size() << ", edges " << d.edges.size() << "\n";
  for (std::size_t k = 0; k < d.stratum_labels.size(); ++k) {
    os << "stratum " << k << "\n";
    for (const auto& l : d.stratum_labels[k]) os << "  " << l << "\n";
  }
  for (const auto& node : d.nodes) os << "node " << node.subset.str() << " dim " << node.cube_dim << "\n";
  for (const auto& e : d.edges) {
    os << "edge " << e.from.str() << " -> " << e.to.str() << " " << edge_kind_name(e.kind.tag);
    if (e.kind.tag == EdgeKindTag::laxness) os << " " << e.kind.zeta;
    os << "\n";
  }
  return os.str();
}

}  // namespace prism
