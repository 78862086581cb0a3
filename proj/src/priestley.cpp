#include "prism/priestley.hpp"

#include "prism/error.hpp"
#include "prism/kernels.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace prism {

namespace {

std::vector<std::string> sorted_unique(std::vector<std::string> points) {
  std::sort(points.begin(), points.end());
  if (std::adjacent_find(points.begin(), points.end()) != points.end())
    fail(errors::kInvalidSpace, "duplicate point name");
  return points;
}

PointIndex lookup(const std::vector<std::string>& sorted, const std::string& name) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), name);
  if (it == sorted.end() || *it != name) fail(errors::kUnknownPoint, "unknown point '" + name + "'");
  return static_cast<PointIndex>(it - sorted.begin());
}

Relation relation_from_pairs(const std::vector<std::string>& sorted, const std::vector<OrderPair>& order) {
  Relation r(sorted.size());
  for (std::size_t i = 0; i < sorted.size(); ++i) r.set(i, i);
  for (const auto& [a, b] : order) r.set(lookup(sorted, a), lookup(sorted, b));
  kernels::transitive_closure(r);
  return r;
}

void check_antisymmetric(const Relation& r) {
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (!r(i, i)) fail(errors::kInvalidSpace, "order is not reflexive");
    for (auto j = r.rows[i].find_next(i); j != Bits::npos; j = r.rows[i].find_next(j))
      if (r(j, i)) fail(errors::kInvalidSpace, "order has a cycle");
  }
}

bool index_list_less(const Bits& a, const Bits& b) {
  auto x = bit_indices(a);
  auto y = bit_indices(b);
  return x < y;
}

void enumerate_down_sets(const FinitePriestley& p, const std::vector<PointIndex>& linear, std::size_t k,
                         Bits& current, std::vector<Bits>& out) {
  if (k == linear.size()) {
    out.push_back(current);
    return;
  }
  enumerate_down_sets(p, linear, k + 1, current, out);
  const PointIndex x = linear[k];
  for (PointIndex y = 0; y < p.size(); ++y)
    if (y != x && p.leq(y, x) && !current[y]) return;
  current.set(x);
  enumerate_down_sets(p, linear, k + 1, current, out);
  current.reset(x);
}

const char* part_name(MemberPart m) {
  switch (m) {
    case MemberPart::none: return "none";
    case MemberPart::finite: return "finite";
    case MemberPart::cofinite: return "cofinite";
    case MemberPart::all: return "all";
  }
  return "?";
}

std::string name_list(const FlaggedPriestley& p, const Bits& b) {
  std::string s = "{";
  bool first = true;
  for_each_bit(b, [&](std::size_t i) {
    if (!first) s += ", ";
    s += p.name(i);
    first = false;
  });
  return s + "}";
}

}  // namespace

// -- FiniteTopSpace ----------------------------------------------------------

FiniteTopSpace FiniteTopSpace::create(std::vector<std::string> points,
                                      const std::vector<std::vector<std::string>>& opens) {
  FiniteTopSpace s;
  s.points_ = sorted_unique(std::move(points));
  const std::size_t n = s.points_.size();
  for (const auto& o : opens) {
    Bits b(n);
    for (const auto& name : o) b.set(lookup(s.points_, name));
    s.opens_.push_back(b);
  }
  std::sort(s.opens_.begin(), s.opens_.end());
  s.opens_.erase(std::unique(s.opens_.begin(), s.opens_.end()), s.opens_.end());

  auto contains = [&](const Bits& b) { return std::binary_search(s.opens_.begin(), s.opens_.end(), b); };
  Bits full(n);
  full.set();
  if (!contains(Bits(n)) || !contains(full))
    fail(errors::kInvalidSpace, "opens must contain the empty set and the whole space");
  for (std::size_t a = 0; a < s.opens_.size(); ++a)
    for (std::size_t b = a + 1; b < s.opens_.size(); ++b)
      if (!contains(s.opens_[a] | s.opens_[b]) || !contains(s.opens_[a] & s.opens_[b]))
        fail(errors::kInvalidSpace, "opens are not closed under union and intersection");
  return s;
}

Bits FiniteTopSpace::closure_of(PointIndex i) const {
  Bits avoid(size());
  for (const auto& o : opens_)
    if (!o[i]) avoid |= o;
  return ~avoid;
}

// -- FinitePriestley ---------------------------------------------------------

FinitePriestley FinitePriestley::create(std::vector<std::string> points, const std::vector<OrderPair>& order) {
  FinitePriestley p;
  p.points_ = sorted_unique(std::move(points));
  p.leq_ = relation_from_pairs(p.points_, order);
  check_antisymmetric(p.leq_);
  return p;
}

FinitePriestley FinitePriestley::from_relation(std::vector<std::string> points, Relation leq) {
  if (!std::is_sorted(points.begin(), points.end()) || leq.size() != points.size())
    fail(errors::kInvalidSpace, "points must be sorted and match the relation");
  FinitePriestley p;
  p.points_ = sorted_unique(std::move(points));
  p.leq_ = std::move(leq);
  check_antisymmetric(p.leq_);
  return p;
}

PointIndex FinitePriestley::index_of(const std::string& name) const { return lookup(points_, name); }

// -- FlaggedPriestley --------------------------------------------------------

FlaggedPriestley FlaggedPriestley::create(std::vector<std::string> points, const std::vector<OrderPair>& order,
                                          const std::vector<FamilySpec>& families) {
  auto sorted = sorted_unique(std::move(points));
  Relation leq = relation_from_pairs(sorted, order);
  std::vector<AccumulationFamily> fams;
  for (const auto& spec : families) {
    AccumulationFamily f;
    f.id = spec.id;
    f.limit = lookup(sorted, spec.limit);
    f.member_order = spec.member_order;
    f.member_lt = Bits(sorted.size());
    f.member_gt = Bits(sorted.size());
    for (const auto& n : spec.member_lt) f.member_lt.set(lookup(sorted, n));
    for (const auto& n : spec.member_gt) f.member_gt.set(lookup(sorted, n));
    f.samples = spec.samples;
    f.height_hint = spec.height_hint;
    fams.push_back(std::move(f));
  }
  return from_parts(std::move(sorted), std::move(leq), std::move(fams));
}

FlaggedPriestley FlaggedPriestley::from_parts(std::vector<std::string> points, Relation leq,
                                              std::vector<AccumulationFamily> families) {
  if (!std::is_sorted(points.begin(), points.end()) || leq.size() != points.size())
    fail(errors::kInvalidSpace, "points must be sorted and match the relation");
  FlaggedPriestley p;
  p.points_ = sorted_unique(std::move(points));
  check_antisymmetric(leq);
  p.leq_ = std::move(leq);
  p.down_ = p.leq_.transposed().rows;

  const std::size_t n = p.points_.size();
  std::sort(families.begin(), families.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  for (std::size_t i = 0; i + 1 < families.size(); ++i)
    if (families[i].id == families[i + 1].id) fail(errors::kInvalidSpace, "duplicate family id '" + families[i].id + "'");
  for (auto& f : families) {
    if (f.limit >= n) fail(errors::kInvalidSpace, "family '" + f.id + "' has no valid limit");
    if (f.member_lt.size() != n) f.member_lt.resize(n);
    if (f.member_gt.size() != n) f.member_gt.resize(n);
    f.member_lt = p.up_closure(f.member_lt);
    f.member_gt = p.down_closure(f.member_gt);
    if (f.member_lt.intersects(f.member_gt))
      fail(errors::kInvalidSpace, "family '" + f.id + "': members would sit in an order cycle");
  }
  p.families_ = std::move(families);
  return p;
}

PointIndex FlaggedPriestley::index_of(const std::string& name) const { return lookup(points_, name); }

std::optional<PointIndex> FlaggedPriestley::find(const std::string& name) const {
  auto it = std::lower_bound(points_.begin(), points_.end(), name);
  if (it == points_.end() || *it != name) return std::nullopt;
  return static_cast<PointIndex>(it - points_.begin());
}

std::optional<std::size_t> FlaggedPriestley::family_index(const std::string& id) const {
  for (std::size_t i = 0; i < families_.size(); ++i)
    if (families_[i].id == id) return i;
  return std::nullopt;
}

Bits FlaggedPriestley::up_closure(const Bits& s) const {
  Bits out(size());
  for_each_bit(s, [&](std::size_t i) { out |= leq_.rows[i]; });
  return out;
}

Bits FlaggedPriestley::down_closure(const Bits& s) const {
  Bits out(size());
  for_each_bit(s, [&](std::size_t i) { out |= down_[i]; });
  return out;
}

FlaggedPriestley to_flagged(const FinitePriestley& p) {
  return FlaggedPriestley::from_parts(p.points(), p.order(), {});
}

// -- symbolic sets -----------------------------------------------------------

SymbolicSet empty_set(const FlaggedPriestley& p) {
  return {Bits(p.size()), std::vector<MemberPart>(p.families().size(), MemberPart::none)};
}

SymbolicSet whole_space(const FlaggedPriestley& p) {
  SymbolicSet s{Bits(p.size()), std::vector<MemberPart>(p.families().size(), MemberPart::all)};
  s.concrete.set();
  return s;
}

SymbolicSet complement(const SymbolicSet& s) {
  SymbolicSet c{~s.concrete, {}};
  for (auto m : s.members) {
    switch (m) {
      case MemberPart::none: c.members.push_back(MemberPart::all); break;
      case MemberPart::finite: c.members.push_back(MemberPart::cofinite); break;
      case MemberPart::cofinite: c.members.push_back(MemberPart::finite); break;
      case MemberPart::all: c.members.push_back(MemberPart::none); break;
    }
  }
  return c;
}

bool is_closed(const FlaggedPriestley& p, const SymbolicSet& s) {
  for (std::size_t f = 0; f < p.families().size(); ++f) {
    const auto m = s.members[f];
    if ((m == MemberPart::cofinite || m == MemberPart::all) && !s.concrete[p.families()[f].limit]) return false;
  }
  return true;
}

bool is_down_set(const FlaggedPriestley& p, const SymbolicSet& s) {
  if (p.down_closure(s.concrete) != s.concrete) return false;
  for (std::size_t f = 0; f < p.families().size(); ++f) {
    const auto& fam = p.families()[f];
    const auto m = s.members[f];
    if (s.concrete.intersects(fam.member_lt) && m != MemberPart::all) return false;
    if (m != MemberPart::none && !fam.member_gt.is_subset_of(s.concrete)) return false;
    if (fam.member_order == MemberOrder::descending_chain && m == MemberPart::finite) return false;
    if (fam.member_order == MemberOrder::ascending_chain && m == MemberPart::cofinite) return false;
  }
  return true;
}

bool is_up_set(const FlaggedPriestley& p, const SymbolicSet& s) { return is_down_set(inverse(p), s); }

std::string describe(const FlaggedPriestley& p, const SymbolicSet& s) {
  std::string out = name_list(p, s.concrete);
  for (std::size_t f = 0; f < p.families().size(); ++f)
    if (s.members[f] != MemberPart::none)
      out += std::string(" + ") + part_name(s.members[f]) + "(" + p.families()[f].id + ")";
  return out;
}

std::string describe(const FlaggedPriestley& p, const ClopenClass& c) {
  std::ostringstream os;
  os << "required=" << name_list(p, c.required) << " allowed=" << name_list(p, c.allowed);
  for (std::size_t f = 0; f < c.tags.size(); ++f)
    os << ' ' << p.families()[f].id << '=' << (c.tags[f] == FamilyTag::finite ? "finite" : "cofinite");
  return os.str();
}

// -- operations --------------------------------------------------------------

Relation specialization_order(const FiniteTopSpace& space) {
  const std::size_t n = space.size();
  std::vector<Bits> closures;
  closures.reserve(n);
  for (std::size_t x = 0; x < n; ++x) closures.push_back(space.closure_of(x));
  Relation r(n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y)
      if (closures[x] == closures[y])
        fail(errors::kNotT0, "points '" + space.points()[x] + "' and '" + space.points()[y] + "' have the same closure");
    for_each_bit(closures[x], [&](std::size_t y) { r.set(y, x); });
  }
  return r;
}

FinitePriestley priestley_of_spectral(const FiniteTopSpace& space) {
  return FinitePriestley::from_relation(space.points(), specialization_order(space));
}

FiniteTopSpace spectral_of_priestley(const FinitePriestley& p) {
  std::vector<std::vector<std::string>> opens;
  for (const auto& u : up_sets(p).sets) {
    std::vector<std::string> names;
    for_each_bit(u, [&](std::size_t i) { names.push_back(p.name(i)); });
    opens.push_back(std::move(names));
  }
  return FiniteTopSpace::create(p.points(), opens);
}

FinitePriestley inverse(const FinitePriestley& p) {
  return FinitePriestley::from_relation(p.points(), p.order().transposed());
}

FlaggedPriestley inverse(const FlaggedPriestley& p) {
  std::vector<AccumulationFamily> fams = p.families();
  for (auto& f : fams) {
    std::swap(f.member_lt, f.member_gt);
    if (f.member_order == MemberOrder::descending_chain)
      f.member_order = MemberOrder::ascending_chain;
    else if (f.member_order == MemberOrder::ascending_chain)
      f.member_order = MemberOrder::descending_chain;
  }
  return FlaggedPriestley::from_parts(p.points(), p.order().transposed(), std::move(fams));
}

DownSetFamily down_sets(const FinitePriestley& p) {
  std::vector<PointIndex> linear(p.size());
  std::vector<std::size_t> below(p.size(), 0);
  for (std::size_t x = 0; x < p.size(); ++x) {
    linear[x] = x;
    for (std::size_t y = 0; y < p.size(); ++y) below[x] += p.leq(y, x) ? 1 : 0;
  }
  std::stable_sort(linear.begin(), linear.end(), [&](auto a, auto b) { return below[a] < below[b]; });
  DownSetFamily out;
  Bits current(p.size());
  enumerate_down_sets(p, linear, 0, current, out.sets);
  std::sort(out.sets.begin(), out.sets.end(), index_list_less);
  return out;
}

DownSetFamily up_sets(const FinitePriestley& p) { return down_sets(inverse(p)); }

std::vector<ClopenClass> clopen_down_sets(const FlaggedPriestley& p, std::size_t max_classes) {
  const auto& fams = p.families();
  std::vector<ClopenClass> out;
  std::vector<FamilyTag> tags(fams.size(), FamilyTag::finite);

  // required: concrete points every member of the class contains (down-closed).
  // forbidden: concrete points no member contains (up-closed).
  auto dfs = [&](auto&& self, std::size_t f, const Bits& required, const Bits& forbidden) -> void {
    if (required.intersects(forbidden)) return;
    if (f == fams.size()) {
      if (out.size() >= max_classes)
        fail(errors::kTooLarge, "more than " + std::to_string(max_classes) + " clopen down-set classes");
      out.push_back({required, ~forbidden, tags});
      return;
    }
    const auto& fam = fams[f];
    Bits limit(p.size());
    limit.set(fam.limit);

    tags[f] = FamilyTag::finite;
    self(self, f + 1, required, forbidden | p.up_closure(limit | fam.member_lt));

    tags[f] = FamilyTag::cofinite;
    self(self, f + 1, required | p.down_closure(limit | fam.member_gt), forbidden);
  };
  dfs(dfs, 0, Bits(p.size()), Bits(p.size()));
  return out;
}

Bits minimal_points(const FlaggedPriestley& p) {
  Bits min(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) min[x] = p.down(x).count() == 1;
  for (const auto& f : p.families()) min -= f.member_lt;
  return min;
}

ThomasonPoints thomason_points(const FlaggedPriestley& p) {
  ThomasonPoints t{minimal_points(p), {}};
  for (std::size_t f = 0; f < p.families().size(); ++f) {
    const auto& fam = p.families()[f];
    t.concrete.reset(fam.limit);
    if (fam.member_order == MemberOrder::antichain && fam.member_gt.none() && fam.height_hint.value_or(0) == 0)
      t.families.push_back(f);
  }
  return t;
}

Bits thomason_points(const FinitePriestley& p) { return thomason_points(to_flagged(p)).concrete; }

bool is_noetherian(const FlaggedPriestley& p) {
  return std::all_of(p.families().begin(), p.families().end(), [](const auto& f) { return f.member_lt[f.limit]; });
}

std::string to_string(MemberOrder o) {
  switch (o) {
    case MemberOrder::antichain: return "antichain";
    case MemberOrder::descending_chain: return "descendingChain";
    case MemberOrder::ascending_chain: return "ascendingChain";
  }
  return "?";
}

MemberOrder member_order_from_string(const std::string& s) {
  if (s == "antichain") return MemberOrder::antichain;
  if (s == "descendingChain") return MemberOrder::descending_chain;
  if (s == "ascendingChain") return MemberOrder::ascending_chain;
  fail(errors::kSchema, "unknown memberOrder '" + s + "'");
}

}  // namespace prism
