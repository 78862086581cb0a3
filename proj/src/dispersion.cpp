#include "prism/dispersion.hpp"

#include "prism/error.hpp"

#include <algorithm>

namespace prism {

Height HeightAssignment::max() const {
  Height m;
  for (auto h : points) m = std::max(m, h);
  for (auto h : families) m = std::max(m, h);
  return m;
}

bool HeightAssignment::all_finite() const {
  auto fin = [](Height h) { return h.is_finite(); };
  return std::all_of(points.begin(), points.end(), fin) && std::all_of(families.begin(), families.end(), fin);
}

namespace {

// Restriction of `p` to the concrete points in `keep`, with the surviving
// families rewritten by `adjust` (which may drop a family by returning false).
template <class Adjust>
FlaggedPriestley restrict_to(const FlaggedPriestley& p, const Bits& keep, Adjust&& adjust) {
  const auto idx = bit_indices(keep);
  std::vector<std::size_t> remap(p.size(), 0);
  std::vector<std::string> names;
  for (std::size_t k = 0; k < idx.size(); ++k) {
    remap[idx[k]] = k;
    names.push_back(p.name(idx[k]));
  }
  auto shrink = [&](const Bits& b) {
    Bits out(idx.size());
    for (std::size_t k = 0; k < idx.size(); ++k) out[k] = b[idx[k]];
    return out;
  };
  Relation leq(idx.size());
  for (std::size_t k = 0; k < idx.size(); ++k) leq.rows[k] = shrink(p.order().rows[idx[k]]);

  std::vector<AccumulationFamily> fams;
  for (std::size_t f = 0; f < p.families().size(); ++f) {
    AccumulationFamily fam = p.families()[f];
    if (!keep[fam.limit]) continue;
    if (!adjust(f, fam)) continue;
    fam.limit = remap[fam.limit];
    fam.member_lt = shrink(fam.member_lt);
    fam.member_gt = shrink(fam.member_gt);
    fams.push_back(std::move(fam));
  }
  return FlaggedPriestley::from_parts(std::move(names), std::move(leq), std::move(fams));
}

Height plus_one(Height h) { return h.successor(); }

// One round of the height operator applied to `cur`.
HeightAssignment height_step(const FlaggedPriestley& p, const HeightAssignment& cur) {
  HeightAssignment next = cur;
  const auto& fams = p.families();
  for (std::size_t f = 0; f < fams.size(); ++f) {
    const auto& fam = fams[f];
    if (fam.member_order != MemberOrder::antichain) {
      next.families[f] = Height::infinity();
      continue;
    }
    Height h(fam.height_hint.value_or(0));
    for_each_bit(fam.member_gt, [&](std::size_t q) { h = std::max(h, plus_one(cur.points[q])); });
    next.families[f] = h;
  }
  for (std::size_t x = 0; x < p.size(); ++x) {
    Height h;
    for_each_bit(p.down(x), [&](std::size_t q) {
      if (q != x) h = std::max(h, plus_one(cur.points[q]));
    });
    for (std::size_t f = 0; f < fams.size(); ++f)
      if (fams[f].limit == x || fams[f].member_lt[x]) h = std::max(h, plus_one(cur.families[f]));
    next.points[x] = h;
  }
  return next;
}

void check_hints(const FlaggedPriestley& p, const HeightAssignment& h) {
  for (std::size_t f = 0; f < p.families().size(); ++f) {
    const auto& fam = p.families()[f];
    if (!fam.height_hint) continue;
    Height forced;
    for_each_bit(fam.member_gt, [&](std::size_t q) { forced = std::max(forced, plus_one(h.points[q])); });
    if (fam.member_order != MemberOrder::antichain) forced = Height::infinity();
    if (forced > Height(*fam.height_hint))
      fail(errors::kInconsistentHint, "family '" + fam.id + "' declares member height " +
                                          std::to_string(*fam.height_hint) + " but its members sit above height " +
                                          forced.str());
  }
}

unsigned value_of(const std::map<std::string, unsigned>& m, const std::string& key, const char* what) {
  auto it = m.find(key);
  if (it == m.end()) fail(errors::kIncompleteCandidate, std::string("no value for ") + what + " '" + key + "'");
  return it->second;
}

SymbolicSet level_set(const FlaggedPriestley& p, const DispersionCandidate& chi, auto&& pred) {
  SymbolicSet s = empty_set(p);
  for (std::size_t x = 0; x < p.size(); ++x) s.concrete[x] = pred(chi.points.at(p.name(x)));
  for (std::size_t f = 0; f < p.families().size(); ++f)
    s.members[f] = pred(chi.families.at(p.families()[f].id)) ? MemberPart::all : MemberPart::none;
  return s;
}

}  // namespace

FlaggedPriestley thomason_derivative(const FlaggedPriestley& p) {
  const auto t = thomason_points(p);
  Bits keep = ~t.concrete;
  std::vector<bool> consumed(p.families().size(), false);
  for (auto f : t.families) consumed[f] = true;
  return restrict_to(p, keep, [&](std::size_t f, AccumulationFamily& fam) {
    if (consumed[f]) return false;
    if (fam.member_order == MemberOrder::antichain && fam.height_hint) {
      if (*fam.height_hint == 0)
        fam.height_hint.reset();
      else
        fam.height_hint = *fam.height_hint - 1;
    }
    return true;
  });
}

FinitePriestley thomason_derivative(const FinitePriestley& p) {
  const auto d = thomason_derivative(to_flagged(p));
  return FinitePriestley::from_relation(d.points(), d.order());
}

HeightAssignment thomason_heights(const FlaggedPriestley& p) {
  HeightAssignment cur{std::vector<Height>(p.size()), std::vector<Height>(p.families().size())};
  const std::size_t cutoff = p.size() + p.families().size() + 1;
  bool stable = false;
  for (std::size_t round = 0; round < cutoff && !stable; ++round) {
    auto next = height_step(p, cur);
    stable = next == cur;
    cur = std::move(next);
  }
  if (!stable) {
    // Whatever still moves has no finite bound; ∞ then propagates upward.
    auto next = height_step(p, cur);
    for (std::size_t x = 0; x < p.size(); ++x)
      if (next.points[x] != cur.points[x]) cur.points[x] = Height::infinity();
    for (std::size_t f = 0; f < p.families().size(); ++f)
      if (next.families[f] != cur.families[f]) cur.families[f] = Height::infinity();
    for (;;) {
      next = height_step(p, cur);
      if (next == cur) break;
      for (std::size_t x = 0; x < p.size(); ++x)
        if (next.points[x] != cur.points[x]) next.points[x] = Height::infinity();
      for (std::size_t f = 0; f < p.families().size(); ++f)
        if (next.families[f] != cur.families[f]) next.families[f] = Height::infinity();
      cur = std::move(next);
    }
  }
  check_hints(p, cur);
  return cur;
}

HeightAssignment thomason_heights(const FinitePriestley& p) { return thomason_heights(to_flagged(p)); }

HeightAssignment cb_heights(const FlaggedPriestley& p) {
  Relation eq(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) eq.set(i, i);
  auto fams = p.families();
  for (auto& f : fams) {
    f.member_lt = Bits(p.size());
    f.member_gt = Bits(p.size());
    f.member_order = MemberOrder::antichain;
  }
  return thomason_heights(FlaggedPriestley::from_parts(p.points(), std::move(eq), std::move(fams)));
}

bool is_dispersible(const FlaggedPriestley& p) { return thomason_heights(p).all_finite(); }

Height height_of_space(const FlaggedPriestley& p) { return thomason_heights(p).max(); }

DispersionVerdict is_dispersion(const FlaggedPriestley& p, const DispersionCandidate& chi) {
  std::vector<unsigned> pv;
  for (const auto& name : p.points()) pv.push_back(value_of(chi.points, name, "point"));
  std::vector<unsigned> fv;
  for (const auto& fam : p.families()) fv.push_back(value_of(chi.families, fam.id, "family"));

  auto member = [&](std::size_t f) { return "member(" + p.families()[f].id + ")"; };

  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = 0; b < p.size(); ++b)
      if (p.lt(a, b) && pv[a] >= pv[b]) return {false, p.name(a) + " < " + p.name(b)};

  for (std::size_t f = 0; f < p.families().size(); ++f) {
    const auto& fam = p.families()[f];
    for (auto q = fam.member_gt.find_first(); q != Bits::npos; q = fam.member_gt.find_next(q))
      if (pv[q] >= fv[f]) return {false, p.name(q) + " < " + member(f)};
    for (auto q = fam.member_lt.find_first(); q != Bits::npos; q = fam.member_lt.find_next(q))
      if (fv[f] >= pv[q]) return {false, member(f) + " < " + p.name(q)};
  }
  for (std::size_t f = 0; f < p.families().size(); ++f)
    if (p.families()[f].member_order != MemberOrder::antichain) return {false, member(f) + " < " + member(f)};

  for (std::size_t f = 0; f < p.families().size(); ++f) {
    const auto& fam = p.families()[f];
    if (pv[fam.limit] <= fv[f]) return {false, member(f) + " accumulates at " + p.name(fam.limit)};
  }
  return {};
}

DispersionCandidate candidate_from_heights(const FlaggedPriestley& p, const HeightAssignment& h) {
  if (!h.all_finite()) fail(errors::kNotDispersible, "heights are not all finite");
  DispersionCandidate c;
  for (std::size_t x = 0; x < p.size(); ++x) c.points[p.name(x)] = h.points[x].value();
  for (std::size_t f = 0; f < p.families().size(); ++f) c.families[p.families()[f].id] = h.families[f].value();
  return c;
}

Strata strata(const FlaggedPriestley& p, const DispersionCandidate& chi, unsigned level) {
  const auto verdict = is_dispersion(p, chi);
  if (!verdict.ok) fail(errors::kChecksFailed, "not a dispersion: " + verdict.witness);

  Strata s;
  s.level = level;
  s.stratum = level_set(p, chi, [&](unsigned v) { return v == level; });
  s.below = level_set(p, chi, [&](unsigned v) { return v < level; });
  s.at_least = level_set(p, chi, [&](unsigned v) { return v >= level; });

  if (!is_down_set(p, s.below)) fail(errors::kChecksFailed, "lower part is not a down-set");
  if (!is_closed(p, s.at_least)) fail(errors::kChecksFailed, "lower part is not open");
  if (!is_up_set(p, s.at_least)) fail(errors::kChecksFailed, "upper part is not an up-set");

  for_each_bit(s.stratum.concrete, [&](std::size_t x) {
    Bits below_x = p.down(x) & s.at_least.concrete;
    below_x.reset(x);
    if (below_x.any()) fail(errors::kChecksFailed, p.name(x) + " is not minimal in the upper part");
    for (std::size_t f = 0; f < p.families().size(); ++f) {
      if (s.at_least.members[f] == MemberPart::none) continue;
      const auto& fam = p.families()[f];
      if (fam.member_lt[x]) fail(errors::kChecksFailed, p.name(x) + " is not minimal in the upper part");
      if (fam.limit == x) fail(errors::kChecksFailed, p.name(x) + " is not isolated in the upper part");
    }
  });
  for (std::size_t f = 0; f < p.families().size(); ++f) {
    if (s.stratum.members[f] == MemberPart::none) continue;
    if (p.families()[f].member_gt.intersects(s.at_least.concrete))
      fail(errors::kChecksFailed, "members of " + p.families()[f].id + " are not minimal in the upper part");
  }
  return s;
}

std::optional<SymbolicSet> weakly_visible(const FlaggedPriestley& p, PointIndex point) {
  const auto& fams = p.families();
  SymbolicSet u = empty_set(p);
  u.concrete.set(point);
  for (bool changed = true; changed;) {
    changed = false;
    u.concrete = p.down_closure(u.concrete);
    for (std::size_t f = 0; f < fams.size(); ++f) {
      const auto& fam = fams[f];
      auto want = u.members[f];
      if (u.concrete.intersects(fam.member_lt)) want = MemberPart::all;
      if (u.concrete[fam.limit] && want == MemberPart::none) want = MemberPart::cofinite;
      if (want == MemberPart::cofinite && fam.member_order == MemberOrder::ascending_chain) want = MemberPart::all;
      if (want != u.members[f]) {
        u.members[f] = want;
        changed = true;
      }
      if (want != MemberPart::none && !fam.member_gt.is_subset_of(u.concrete)) {
        u.concrete |= fam.member_gt;
        changed = true;
      }
    }
  }
  Bits hit = u.concrete & p.up(point);
  hit.reset(point);
  if (hit.any()) return std::nullopt;
  for (std::size_t f = 0; f < fams.size(); ++f)
    if (fams[f].member_gt[point] && u.members[f] != MemberPart::none) return std::nullopt;
  return u;
}

FlaggedPriestley gen_closure(const FlaggedPriestley& p, PointIndex point) {
  const Bits keep = p.up(point);
  return restrict_to(p, keep, [&](std::size_t, AccumulationFamily& fam) { return fam.member_gt[point]; });
}

bool is_generically_noetherian(const FlaggedPriestley& p) {
  for (std::size_t x = 0; x < p.size(); ++x) {
    // Every family of a generalization closure of x passes through x, so
    // checking them in place avoids rebuilding the subspace.
    for (const auto& fam : p.families())
      if (fam.member_gt[x] && p.leq(x, fam.limit) && !fam.member_lt[fam.limit]) return false;
  }
  return true;
}

FlaggedPriestley clopen_piece(const FlaggedPriestley& p, const Bits& keep) {
  const Bits rest = ~keep;
  for_each_bit(keep, [&](std::size_t x) {
    if ((p.up(x) & rest).any() || (p.down(x) & rest).any())
      fail(errors::kInvalidSpace, "'" + p.name(x) + "' is related to a point outside the piece");
  });
  for (const auto& fam : p.families()) {
    const Bits& side = keep[fam.limit] ? rest : keep;
    if ((fam.member_lt & side).any() || (fam.member_gt & side).any())
      fail(errors::kInvalidSpace, "family " + fam.id + " crosses the piece boundary");
  }
  return restrict_to(p, keep, [](std::size_t, AccumulationFamily&) { return true; });
}

std::vector<FlaggedPriestley> connected_components(const FlaggedPriestley& p) {
  std::vector<std::size_t> parent(p.size());
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto join = [&](std::size_t a, std::size_t b) { parent[find(a)] = find(b); };
  for (std::size_t a = 0; a < p.size(); ++a) for_each_bit(p.up(a), [&](std::size_t b) { join(a, b); });
  for (const auto& fam : p.families()) {
    for_each_bit(fam.member_lt, [&](std::size_t x) { join(fam.limit, x); });
    for_each_bit(fam.member_gt, [&](std::size_t x) { join(fam.limit, x); });
  }
  std::vector<FlaggedPriestley> out;
  Bits seen(p.size());
  for (std::size_t a = 0; a < p.size(); ++a) {
    if (seen[a]) continue;
    Bits piece(p.size());
    for (std::size_t b = a; b < p.size(); ++b)
      if (find(b) == find(a)) piece.set(b);
    seen |= piece;
    out.push_back(clopen_piece(p, piece));
  }
  return out;
}

}  // namespace prism
