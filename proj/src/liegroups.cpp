#include "prism/liegroups.hpp"

#include "prism/error.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace prism {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

IntMatrix identity(unsigned n) {
  IntMatrix id(n, IntVector(n, 0));
  for (unsigned i = 0; i < n; ++i) id[i][i] = 1;
  return id;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t n = a.size();
  IntMatrix c(n, IntVector(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

// Inverse of a finite-order matrix: the last power before the identity.
IntMatrix finite_inverse(const IntMatrix& m) {
  const auto id = identity(static_cast<unsigned>(m.size()));
  IntMatrix prev = id;
  IntMatrix power = m;
  for (int k = 0; k < 12; ++k) {
    if (power == id) return prev;
    prev = power;
    power = multiply(power, m);
  }
  return prev;
}

void validate_semidirect(const ToralSemidirect& s) {
  if (s.rank < 1 || s.rank > 3) fail(errors::kInvalidGroup, "semidirect rank must be 1..3");
  validate(IntegerAction{s.rank, s.generators});
  for (const auto& word : s.relations) {
    IntMatrix acc = identity(s.rank);
    for (char ch : word) {
      const auto lower = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
      const std::size_t g = static_cast<std::size_t>(lower - 'a');
      if (lower < 'a' || g >= s.generators.size())
        fail(errors::kInvalidGroup, "relation '" + word + "' uses an unknown generator");
      acc = multiply(acc, std::isupper(static_cast<unsigned char>(ch)) ? finite_inverse(s.generators[g]) : s.generators[g]);
    }
    if (acc != identity(s.rank)) fail(errors::kInvalidGroup, "relation '" + word + "' does not hold");
  }
}

const char* kind_name(GroupKind k) {
  switch (k) {
    case GroupKind::finite: return "finite";
    case GroupKind::circle: return "circle";
    case GroupKind::torus: return "torus";
    case GroupKind::o2: return "o2";
    case GroupKind::so3: return "so3";
    case GroupKind::semidirect: return "semidirect";
  }
  return "?";
}

bool is_point_subgroup(KeyTag t) {
  return t == KeyTag::cyclic || t == KeyTag::dihedral || t == KeyTag::a4 || t == KeyTag::s4 || t == KeyTag::a5 ||
         t == KeyTag::klein || t == KeyTag::finite_class;
}

WeylData weyl(IdentityType id, unsigned rank, std::string comp, unsigned order) {
  return WeylData{id, rank, std::move(comp), order};
}

}  // namespace

GroupId::GroupId(Variant v) : v_(std::move(v)) {
  std::visit(overloaded{
                 [](const FiniteGroup& f) {
                   if (f.classes.empty()) fail(errors::kInvalidGroup, "a finite group needs at least one class");
                   std::set<std::string> names;
                   for (const auto& c : f.classes) {
                     if (!names.insert(c.name).second) fail(errors::kInvalidGroup, "duplicate class '" + c.name + "'");
                     if (c.order == 0 || c.weyl_order == 0)
                       fail(errors::kInvalidGroup, "class '" + c.name + "' has a zero order");
                   }
                 },
                 [](const Torus& t) {
                   if (t.rank < 1 || t.rank > 3) fail(errors::kInvalidGroup, "torus rank must be 1..3");
                 },
                 [](const ToralSemidirect& s) { validate_semidirect(s); },
                 [](const auto&) {},
             },
             v_);
}

GroupId GroupId::nsu3t() {
  ToralSemidirect s;
  s.name = "nsu3t";
  s.rank = 2;
  s.generators = {{{-1, 1}, {0, 1}}, {{1, 0}, {1, -1}}};
  s.relations = {"aa", "bb", "ababab"};
  return GroupId(s);
}

GroupId GroupId::trivial_group() { return GroupId(FiniteGroup{"trivial", {{"1", 1, 1}}}); }

unsigned GroupId::torus_rank() const {
  return std::visit(overloaded{
                        [](const FiniteGroup&) { return 0u; },
                        [](const Torus& t) { return t.rank; },
                        [](const ToralSemidirect& s) { return s.rank; },
                        [](const auto&) { return 1u; },
                    },
                    v_);
}

std::string GroupId::str() const {
  return std::visit(overloaded{
                        [](const FiniteGroup& f) { return "finite:" + f.name; },
                        [](const Torus& t) { return "torus:" + std::to_string(t.rank); },
                        [](const ToralSemidirect& s) { return s.name; },
                        [&](const auto&) { return std::string(kind_name(kind())); },
                    },
                    v_);
}

namespace keys {
SubgroupKey cyclic(GroupKind g, unsigned n) { return {g, KeyTag::cyclic, n, {}}; }
SubgroupKey dihedral(GroupKind g, unsigned n) { return {g, KeyTag::dihedral, n, {}}; }
SubgroupKey so2(GroupKind g) { return {g, KeyTag::so2, 0, {}}; }
SubgroupKey o2_in_so3() { return {GroupKind::so3, KeyTag::o2, 0, {}}; }
SubgroupKey exceptional(KeyTag t) { return {GroupKind::so3, t, 0, {}}; }
SubgroupKey full(GroupKind g) { return {g, KeyTag::full, 0, {}}; }
SubgroupKey lattice(const Lattice& l) { return {GroupKind::torus, KeyTag::lattice, 0, l}; }
SubgroupKey finite_class(std::size_t index) {
  return {GroupKind::finite, KeyTag::finite_class, static_cast<unsigned>(index), {}};
}
SubgroupKey identity_torus() { return {GroupKind::semidirect, KeyTag::identity_torus, 0, {}}; }
}  // namespace keys

void check_key(const GroupId& g, const SubgroupKey& k) {
  auto bad = [&](const std::string& why) {
    fail(errors::kKeyMismatch, "key is not a subgroup of " + g.str() + ": " + why);
  };
  if (k.group != g.kind()) bad(std::string("key belongs to ") + kind_name(k.group));
  switch (g.kind()) {
    case GroupKind::finite:
      if (k.tag != KeyTag::finite_class || k.n >= std::get<FiniteGroup>(g.variant()).classes.size()) bad("unknown class");
      break;
    case GroupKind::circle:
      if (!(k.tag == KeyTag::full || (k.tag == KeyTag::cyclic && k.n >= 1))) bad("expected C(n) or G");
      break;
    case GroupKind::torus:
      if (k.tag != KeyTag::lattice || k.lattice.ambient() != g.torus_rank()) bad("expected a lattice of the right rank");
      break;
    case GroupKind::o2:
      if (!(k.tag == KeyTag::full || k.tag == KeyTag::so2 || ((k.tag == KeyTag::cyclic || k.tag == KeyTag::dihedral) && k.n >= 1)))
        bad("expected C(n), D(2n), SO2 or G");
      break;
    case GroupKind::so3:
      switch (k.tag) {
        case KeyTag::cyclic: if (k.n < 1) bad("C(0)"); break;
        case KeyTag::dihedral: if (k.n < 3) bad("dihedral keys start at D(6)"); break;
        case KeyTag::so2: case KeyTag::o2: case KeyTag::a4: case KeyTag::s4: case KeyTag::a5:
        case KeyTag::klein: case KeyTag::full: break;
        default: bad("not an SO(3) key");
      }
      break;
    case GroupKind::semidirect:
      if (k.tag != KeyTag::full && k.tag != KeyTag::identity_torus) bad("expected G or T");
      break;
  }
}

std::string key_name(const GroupId& g, const SubgroupKey& k) {
  check_key(g, k);
  switch (k.tag) {
    case KeyTag::cyclic: return "C(" + std::to_string(k.n) + ")";
    case KeyTag::dihedral: return "D(" + std::to_string(2 * k.n) + ")";
    case KeyTag::so2: return "SO2";
    case KeyTag::o2: return "O2";
    case KeyTag::a4: return "A4";
    case KeyTag::s4: return "S4";
    case KeyTag::a5: return "A5";
    case KeyTag::klein: return "V4";
    case KeyTag::full: return "G";
    case KeyTag::lattice: return k.lattice.rank() == 0 ? "G" : k.lattice.str();
    case KeyTag::finite_class: return std::get<FiniteGroup>(g.variant()).classes[k.n].name;
    case KeyTag::identity_torus: return "T";
  }
  return "?";
}

bool cotoral_le(const GroupId& g, const SubgroupKey& k, const SubgroupKey& h) {
  check_key(g, k);
  check_key(g, h);
  if (k == h) return true;
  switch (g.kind()) {
    case GroupKind::circle: return k.tag == KeyTag::cyclic && h.tag == KeyTag::full;
    case GroupKind::o2:
    case GroupKind::so3: return k.tag == KeyTag::cyclic && h.tag == KeyTag::so2;
    case GroupKind::torus: return is_saturated_in(h.lattice, k.lattice);
    case GroupKind::finite:
    case GroupKind::semidirect: return false;
  }
  return false;
}

unsigned subgroup_dim(const GroupId& g, const SubgroupKey& h) {
  check_key(g, h);
  if (is_point_subgroup(h.tag)) return 0;
  switch (h.tag) {
    case KeyTag::so2:
    case KeyTag::o2: return 1;
    case KeyTag::lattice: return g.torus_rank() - h.lattice.rank();
    case KeyTag::identity_torus: return g.torus_rank();
    default: break;
  }
  return g.kind() == GroupKind::so3 ? 3 : g.torus_rank();
}

unsigned subgroup_rank(const GroupId& g, const SubgroupKey& h) {
  check_key(g, h);
  if (g.kind() == GroupKind::so3 && h.tag == KeyTag::full) return 1;
  return subgroup_dim(g, h);
}

IntegerAction central_action(const GroupId& g, const SubgroupKey& h) {
  check_key(g, h);
  if (is_point_subgroup(h.tag)) return IntegerAction{0, {}};
  switch (g.kind()) {
    case GroupKind::circle: return trivial_action(1);
    case GroupKind::torus: {
      const unsigned d = subgroup_dim(g, h);
      return d == 0 ? IntegerAction{0, {}} : trivial_action(d);
    }
    case GroupKind::o2:
    case GroupKind::so3:
      if (h.tag == KeyTag::so2) return trivial_action(1);
      if (h.tag == KeyTag::o2 || (g.kind() == GroupKind::o2 && h.tag == KeyTag::full)) return IntegerAction{1, {{{-1}}}};
      // SO(3) itself: the identity component is semisimple.
      return IntegerAction{0, {}};
    case GroupKind::semidirect: {
      const auto& s = std::get<ToralSemidirect>(g.variant());
      if (h.tag == KeyTag::full) return IntegerAction{s.rank, s.generators};
      return trivial_action(s.rank);
    }
    case GroupKind::finite: break;
  }
  return IntegerAction{0, {}};
}

unsigned height_rep(const GroupId& g, const SubgroupKey& h) {
  const auto a = central_action(g, h);
  return a.dim == 0 ? 0 : count_simple_summands(a);
}

WeylData weyl_data(const GroupId& g, const SubgroupKey& h) {
  check_key(g, h);
  switch (g.kind()) {
    case GroupKind::finite: {
      const auto order = std::get<FiniteGroup>(g.variant()).classes[h.n].weyl_order;
      return weyl(IdentityType::trivial, 0, order == 1 ? "1" : "W" + std::to_string(order), order);
    }
    case GroupKind::circle:
      if (h.tag == KeyTag::cyclic) return weyl(IdentityType::circle, 1, "1", 1);
      return {};
    case GroupKind::torus: {
      const unsigned r = h.lattice.rank();
      if (r == 0) return {};
      return weyl(r == 1 ? IdentityType::circle : IdentityType::torus, r, "1", 1);
    }
    case GroupKind::o2:
      switch (h.tag) {
        case KeyTag::cyclic: return weyl(IdentityType::circle, 1, "C2", 2);
        case KeyTag::so2:
        case KeyTag::dihedral: return weyl(IdentityType::trivial, 0, "C2", 2);
        default: return {};
      }
    case GroupKind::so3:
      switch (h.tag) {
        case KeyTag::cyclic:
          if (h.n == 1) return weyl(IdentityType::so3, 1, "1", 1);
          return weyl(IdentityType::circle, 1, "C2", 2);
        case KeyTag::so2:
        case KeyTag::dihedral:
        case KeyTag::a4: return weyl(IdentityType::trivial, 0, "C2", 2);
        case KeyTag::klein: return weyl(IdentityType::trivial, 0, "S3", 6);
        default: return {};
      }
    case GroupKind::semidirect: {
      if (h.tag == KeyTag::full) return {};
      const auto& s = std::get<ToralSemidirect>(g.variant());
      const auto order = static_cast<unsigned>(group_elements(IntegerAction{s.rank, s.generators}).size());
      return weyl(IdentityType::trivial, 0, order == 1 ? "1" : "W" + std::to_string(order), order);
    }
  }
  return {};
}

bool has_finite_weyl(const GroupId& g, const SubgroupKey& h) {
  check_key(g, h);
  if (g.kind() == GroupKind::semidirect) {
    const auto& s = std::get<ToralSemidirect>(g.variant());
    // Both keys contain the maximal torus, whose Lie algebra is all of Q^rank.
    return finite_weyl_criterion(IntegerAction{s.rank, s.generators}, Subspace::whole(s.rank));
  }
  return weyl_data(g, h).identity == IdentityType::trivial;
}

bool phi_is_finite(const GroupId& g) {
  switch (g.kind()) {
    case GroupKind::finite:
    case GroupKind::circle:
    case GroupKind::torus: return true;
    case GroupKind::o2:
    case GroupKind::so3: return false;
    case GroupKind::semidirect: {
      const auto& s = std::get<ToralSemidirect>(g.variant());
      const auto id = identity(s.rank);
      return std::all_of(s.generators.begin(), s.generators.end(), [&](const auto& m) { return m == id; });
    }
  }
  return false;
}

Height burnside_rank(const GroupId& g) {
  if (!phi_is_finite(g)) return Height::infinity();
  if (g.kind() == GroupKind::finite) return Height(static_cast<std::uint32_t>(std::get<FiniteGroup>(g.variant()).classes.size()));
  return Height(1);
}

bool spectrum_is_noetherian(const GroupId& g) { return phi_is_finite(g); }

std::string identity_name(const WeylData& w) {
  switch (w.identity) {
    case IdentityType::trivial: return "1";
    case IdentityType::circle: return "SO(2)";
    case IdentityType::torus: return "T^" + std::to_string(w.identity_rank);
    case IdentityType::so3: return "SO(3)";
  }
  return "?";
}

}  // namespace prism
