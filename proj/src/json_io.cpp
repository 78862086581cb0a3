#include "prism/json_io.hpp"

#include "prism/error.hpp"

#include <json.hpp>

#include <fstream>
#include <set>
#include <sstream>

namespace prism {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    fail(errors::kSchema, std::string("malformed JSON: ") + e.what());
  }
}

void only_fields(const json& j, std::initializer_list<const char*> allowed, const std::string& where) {
  if (!j.is_object()) fail(errors::kSchema, where + " must be an object");
  std::set<std::string> ok(allowed.begin(), allowed.end());
  for (const auto& [k, v] : j.items())
    if (!ok.count(k)) fail(errors::kSchema, "unknown field '" + k + "' in " + where);
}

void check_schema(const json& j, const std::string& expected) {
  if (j.contains("schema") && j["schema"] != expected)
    fail(errors::kSchema, "expected schema '" + expected + "'");
}

template <class T>
T get(const json& j, const char* key, const std::string& where) {
  if (!j.contains(key)) fail(errors::kSchema, std::string("missing field '") + key + "' in " + where);
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    fail(errors::kSchema, std::string("field '") + key + "' in " + where + " has the wrong type");
  }
}

template <class T>
T get_or(const json& j, const char* key, T fallback, const std::string& where) {
  if (!j.contains(key)) return fallback;
  return get<T>(j, key, where);
}

std::vector<std::string> names_of(const FlaggedPriestley& p, const Bits& b) {
  std::vector<std::string> out;
  for_each_bit(b, [&](std::size_t i) { out.push_back(p.name(i)); });
  return out;
}

// Minimal elements of an up-set, maximal elements of a down-set.
Bits generators(const FlaggedPriestley& p, const Bits& s, bool upward) {
  Bits out = s;
  for_each_bit(s, [&](std::size_t x) {
    Bits strict = (upward ? p.up(x) : p.down(x)) & s;
    strict.reset(x);
    out -= strict;
  });
  return out;
}

std::map<std::string, unsigned> value_map(const json& j, const char* key) {
  std::map<std::string, unsigned> out;
  if (!j.contains(key)) return out;
  if (!j[key].is_object()) fail(errors::kSchema, std::string("'") + key + "' must be an object");
  for (const auto& [k, v] : j[key].items()) {
    if (!v.is_number_unsigned()) fail(errors::kSchema, "value for '" + k + "' must be a natural number");
    out[k] = v.get<unsigned>();
  }
  return out;
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errors::kSchema, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

FlaggedPriestley flagged_from_json(const std::string& text) {
  const json j = parse(text);
  only_fields(j, {"schema", "points", "order", "families"}, "flagged space");
  check_schema(j, "flagged-priestley/v1");
  auto points = get<std::vector<std::string>>(j, "points", "flagged space");
  std::vector<OrderPair> order;
  for (const auto& pair : get_or<json>(j, "order", json::array(), "flagged space")) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() || !pair[1].is_string())
      fail(errors::kSchema, "order entries must be [lower, upper] name pairs");
    order.emplace_back(pair[0].get<std::string>(), pair[1].get<std::string>());
  }
  std::vector<FamilySpec> fams;
  for (const auto& f : get_or<json>(j, "families", json::array(), "flagged space")) {
    only_fields(f, {"id", "limit", "memberOrder", "memberLt", "memberGt", "samples", "heightHint"}, "family");
    FamilySpec spec;
    spec.id = get<std::string>(f, "id", "family");
    const std::string where = "family '" + spec.id + "'";
    spec.limit = get<std::string>(f, "limit", where);
    spec.member_order = member_order_from_string(get_or<std::string>(f, "memberOrder", "antichain", where));
    spec.member_lt = get_or<std::vector<std::string>>(f, "memberLt", {}, where);
    spec.member_gt = get_or<std::vector<std::string>>(f, "memberGt", {}, where);
    spec.samples = get_or<std::vector<std::string>>(f, "samples", {}, where);
    if (f.contains("heightHint") && !f["heightHint"].is_null()) {
      if (!f["heightHint"].is_number_unsigned()) fail(errors::kSchema, where + ": heightHint must be a natural number");
      spec.height_hint = f["heightHint"].get<unsigned>();
    }
    fams.push_back(std::move(spec));
  }
  return FlaggedPriestley::create(std::move(points), order, fams);
}

std::string flagged_to_json(const FlaggedPriestley& p) {
  ordered_json j;
  j["schema"] = "flagged-priestley/v1";
  j["points"] = p.points();
  j["order"] = ordered_json::array();
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = 0; b < p.size(); ++b) {
      if (!p.lt(a, b)) continue;
      Bits between = p.up(a) & p.down(b);
      if (between.count() == 2) j["order"].push_back({p.name(a), p.name(b)});
    }
  j["families"] = ordered_json::array();
  for (const auto& f : p.families()) {
    ordered_json fj;
    fj["id"] = f.id;
    fj["limit"] = p.name(f.limit);
    fj["memberOrder"] = to_string(f.member_order);
    fj["memberLt"] = names_of(p, generators(p, f.member_lt, true));
    fj["memberGt"] = names_of(p, generators(p, f.member_gt, false));
    fj["samples"] = f.samples;
    fj["heightHint"] = f.height_hint ? ordered_json(*f.height_hint) : ordered_json(nullptr);
    j["families"].push_back(std::move(fj));
  }
  return j.dump(2) + "\n";
}

DispersionCandidate candidate_from_json(const std::string& text) {
  const json j = parse(text);
  only_fields(j, {"schema", "points", "families"}, "candidate");
  check_schema(j, "dispersion-candidate/v1");
  return {value_map(j, "points"), value_map(j, "families")};
}

std::string candidate_to_json(const DispersionCandidate& c) {
  ordered_json j;
  j["schema"] = "dispersion-candidate/v1";
  j["points"] = c.points;
  j["families"] = c.families;
  return j.dump(2) + "\n";
}

FiniteGroup finite_group_from_json(const std::string& text) {
  const json j = parse(text);
  only_fields(j, {"schema", "name", "classes"}, "finite group");
  FiniteGroup g;
  g.name = get_or<std::string>(j, "name", "finite", "finite group");
  for (const auto& c : get<json>(j, "classes", "finite group")) {
    only_fields(c, {"name", "order", "weylOrder"}, "subgroup class");
    g.classes.push_back({get<std::string>(c, "name", "subgroup class"), get_or<unsigned>(c, "order", 1, "subgroup class"),
                         get_or<unsigned>(c, "weylOrder", 1, "subgroup class")});
  }
  return g;
}

ToralSemidirect semidirect_from_json(const std::string& text) {
  const json j = parse(text);
  only_fields(j, {"schema", "name", "rank", "generators", "relations"}, "semidirect group");
  ToralSemidirect s;
  s.name = get_or<std::string>(j, "name", "semidirect", "semidirect group");
  s.rank = get<unsigned>(j, "rank", "semidirect group");
  s.generators = get<std::vector<IntMatrix>>(j, "generators", "semidirect group");
  s.relations = get_or<std::vector<std::string>>(j, "relations", {}, "semidirect group");
  return s;
}

bool looks_like_group(const std::string& spec) {
  return spec == "circle" || spec == "o2" || spec == "so3" || spec == "nsu3t" || spec.rfind("torus:", 0) == 0 ||
         spec.rfind("finite:", 0) == 0 || spec.rfind("semidirect:", 0) == 0;
}

GroupId parse_group(const std::string& spec) {
  if (spec == "circle") return GroupId::circle();
  if (spec == "o2") return GroupId::o2();
  if (spec == "so3") return GroupId::so3();
  if (spec == "nsu3t") return GroupId::nsu3t();
  if (spec.rfind("torus:", 0) == 0) {
    const auto r = spec.substr(6);
    if (r.size() != 1 || r[0] < '1' || r[0] > '3') fail(errors::kInvalidGroup, "torus rank must be 1, 2 or 3");
    return GroupId::torus(static_cast<unsigned>(r[0] - '0'));
  }
  if (spec.rfind("finite:", 0) == 0) return GroupId(finite_group_from_json(read_file(spec.substr(7))));
  if (spec.rfind("semidirect:", 0) == 0) return GroupId(semidirect_from_json(read_file(spec.substr(11))));
  fail(errors::kInvalidGroup, "unknown group '" + spec + "'");
}

}  // namespace prism
