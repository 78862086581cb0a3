#include "prism/snapshot.hpp"

#include "prism/error.hpp"
#include "prism/kernels.hpp"

#include <algorithm>
#include <numeric>

namespace prism {

namespace {

struct FamilyPlan {
  std::string id;
  SubgroupKey limit;
  bool below_limit = false;  // members ⪯ limit and everything above it
  bool above_identity = false;
  std::optional<unsigned> hint;
  SnapshotFamily info;
};

std::vector<SubgroupKey> concrete_keys(const GroupId& g, unsigned bound) {
  std::vector<SubgroupKey> out;
  const auto kind = g.kind();
  switch (kind) {
    case GroupKind::finite:
      for (std::size_t i = 0; i < std::get<FiniteGroup>(g.variant()).classes.size(); ++i) out.push_back(keys::finite_class(i));
      break;
    case GroupKind::circle:
      for (unsigned n = 1; n <= bound; ++n) out.push_back(keys::cyclic(kind, n));
      out.push_back(keys::full(kind));
      break;
    case GroupKind::o2:
      for (unsigned n = 1; n <= bound; ++n) out.push_back(keys::cyclic(kind, n));
      for (unsigned n = 1; n <= bound; ++n) out.push_back(keys::dihedral(kind, n));
      out.push_back(keys::so2(kind));
      out.push_back(keys::full(kind));
      break;
    case GroupKind::so3:
      for (unsigned n = 1; n <= bound; ++n) out.push_back(keys::cyclic(kind, n));
      for (unsigned n = 3; n <= bound; ++n) out.push_back(keys::dihedral(kind, n));
      out.push_back(keys::so2(kind));
      out.push_back(keys::o2_in_so3());
      for (auto t : {KeyTag::a4, KeyTag::s4, KeyTag::a5, KeyTag::klein}) out.push_back(keys::exceptional(t));
      out.push_back(keys::full(kind));
      break;
    case GroupKind::torus:
      for (const auto& l : bounded_lattices(g.torus_rank(), bound)) out.push_back(keys::lattice(l));
      break;
    case GroupKind::semidirect:
      fail(errors::kNotEnumerable, "subgroup classes of " + g.str() + " are not enumerated");
  }
  return out;
}

std::vector<FamilyPlan> family_plans(const GroupId& g, unsigned bound, const std::vector<SubgroupKey>& concrete) {
  std::vector<FamilyPlan> out;
  const auto kind = g.kind();
  auto cyc = [&](unsigned n) { return keys::cyclic(kind, n); };
  auto dih = [&](unsigned n) { return keys::dihedral(kind, n); };
  // The first two members beyond the concrete range.
  auto samples = [&](auto make, unsigned first = 1) {
    const unsigned start = std::max(bound + 1, first);
    return std::vector<SubgroupKey>{make(start), make(start + 1)};
  };
  switch (kind) {
    case GroupKind::circle:
      out.push_back({"C(*)", keys::full(kind), true, false, std::nullopt, {0, 0, samples(cyc)}});
      break;
    case GroupKind::o2:
      out.push_back({"C(*)", keys::so2(kind), true, false, std::nullopt, {0, 0, samples(cyc)}});
      out.push_back({"D(*)", keys::full(kind), false, false, std::nullopt, {0, 0, samples(dih)}});
      break;
    case GroupKind::so3:
      out.push_back({"C(*)", keys::so2(kind), true, false, std::nullopt, {0, 0, samples(cyc)}});
      out.push_back({"D(*)", keys::o2_in_so3(), false, false, std::nullopt, {0, 0, samples(dih, 3)}});
      break;
    case GroupKind::torus:
      // Subgroups of each dimension k accumulate at every closed subgroup of
      // larger dimension; those of positive dimension contain the identity
      // cotorally (their identity components are tori).
      for (const auto& h : concrete) {
        const unsigned d = subgroup_dim(g, h);
        for (unsigned k = 0; k < d; ++k) {
          std::optional<unsigned> hint;
          if (k > 0) hint = k;
          out.push_back({"dim" + std::to_string(k) + "@" + key_name(g, h), h, true, k > 0, hint, {k, k, {}}});
        }
      }
      break;
    case GroupKind::finite:
    case GroupKind::semidirect: break;
  }
  return out;
}

}  // namespace

Snapshot flagged_snapshot(const GroupId& g, unsigned bound) {
  if (bound < 1) fail(errors::kInvalidSpace, "snapshot bound must be at least 1");
  auto keys_in = concrete_keys(g, bound);

  std::vector<std::pair<std::string, SubgroupKey>> named;
  for (const auto& k : keys_in) named.emplace_back(key_name(g, k), k);
  std::sort(named.begin(), named.end(), [](const auto& a, const auto& b) { return a.first < b.first; });

  Snapshot s{g, bound, FlaggedPriestley::from_parts({}, Relation(0), {}), {}, {}};
  std::vector<std::string> names;
  for (auto& [name, key] : named) {
    names.push_back(name);
    s.keys.push_back(key);
  }

  Relation leq;
  if (g.kind() == GroupKind::torus) {
    // Same predicate as cotoral_le, minus the per-call key validation.
    leq = kernels::build_relation(s.keys.size(), [&](std::size_t a, std::size_t b) {
      return a == b || is_saturated_in(s.keys[b].lattice, s.keys[a].lattice);
    });
  } else {
    leq = kernels::build_relation(s.keys.size(), [&](std::size_t a, std::size_t b) { return cotoral_le(g, s.keys[a], s.keys[b]); });
  }

  auto index_of = [&](const SubgroupKey& k) {
    return static_cast<PointIndex>(std::find(s.keys.begin(), s.keys.end(), k) - s.keys.begin());
  };
  std::size_t identity = s.keys.size();
  if (g.kind() == GroupKind::torus) identity = index_of(keys::lattice(Lattice::standard(g.torus_rank())));

  std::vector<AccumulationFamily> fams;
  std::vector<std::pair<std::string, SnapshotFamily>> infos;
  for (auto& plan : family_plans(g, bound, s.keys)) {
    AccumulationFamily f;
    f.id = plan.id;
    f.limit = index_of(plan.limit);
    f.member_lt = plan.below_limit ? leq.rows[f.limit] : Bits(s.keys.size());
    f.member_gt = Bits(s.keys.size());
    if (plan.above_identity) f.member_gt.set(identity);
    for (const auto& k : plan.info.sample_keys) f.samples.push_back(key_name(g, k));
    f.height_hint = plan.hint;
    fams.push_back(std::move(f));
    infos.emplace_back(plan.id, std::move(plan.info));
  }
  std::sort(infos.begin(), infos.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& [id, info] : infos) s.families.push_back(std::move(info));

  s.space = FlaggedPriestley::from_parts(std::move(names), std::move(leq), std::move(fams));
  return s;
}

DispersionCandidate dimension_candidate(const Snapshot& s) {
  DispersionCandidate c;
  for (std::size_t i = 0; i < s.keys.size(); ++i) c.points[s.space.name(i)] = subgroup_dim(s.group, s.keys[i]);
  for (std::size_t f = 0; f < s.families.size(); ++f) c.families[s.space.families()[f].id] = s.families[f].member_dim;
  return c;
}

DispersionCandidate rank_candidate(const Snapshot& s) {
  DispersionCandidate c;
  for (std::size_t i = 0; i < s.keys.size(); ++i) c.points[s.space.name(i)] = subgroup_rank(s.group, s.keys[i]);
  for (std::size_t f = 0; f < s.families.size(); ++f) c.families[s.space.families()[f].id] = s.families[f].member_rank;
  return c;
}

}  // namespace prism
