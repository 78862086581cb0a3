#pragma once

// Catalog of compact Lie groups with explicit subgroup-space models: keys for
// conjugacy classes of closed subgroups, the cotoral order, Weyl data and the
// representation-theoretic height.

#include "prism/height.hpp"
#include "prism/lattice.hpp"
#include "prism/priestley.hpp"
#include "prism/rational.hpp"

#include <string>
#include <variant>
#include <vector>

namespace prism {

struct FiniteClass {
  std::string name;
  unsigned order = 1;
  unsigned weyl_order = 1;
};

/// A finite group given by its list of conjugacy classes of subgroups.
struct FiniteGroup {
  std::string name = "finite";
  std::vector<FiniteClass> classes;
};

struct Circle {};
struct Torus {
  unsigned rank = 1;
};
struct O2 {};
struct SO3 {};

/// T^rank ⋊ F where F acts through the given integer matrices. Relations are
/// words in the generators: lowercase letter = generator, uppercase = inverse.
struct ToralSemidirect {
  std::string name = "semidirect";
  unsigned rank = 1;
  std::vector<IntMatrix> generators;
  std::vector<std::string> relations;
};

enum class GroupKind { finite, circle, torus, o2, so3, semidirect };

class GroupId {
 public:
  using Variant = std::variant<FiniteGroup, Circle, Torus, O2, SO3, ToralSemidirect>;

  GroupId(Variant v);  // validates
  static GroupId circle() { return GroupId(Circle{}); }
  static GroupId torus(unsigned r) { return GroupId(Torus{r}); }
  static GroupId o2() { return GroupId(O2{}); }
  static GroupId so3() { return GroupId(SO3{}); }
  /// Normalizer of the maximal torus in SU(3).
  static GroupId nsu3t();
  static GroupId trivial_group();

  GroupKind kind() const { return static_cast<GroupKind>(v_.index()); }
  const Variant& variant() const { return v_; }
  /// Torus rank of the maximal torus of the identity component.
  unsigned torus_rank() const;
  std::string str() const;

 private:
  Variant v_;
};

enum class KeyTag { cyclic, dihedral, so2, o2, a4, s4, a5, klein, full, lattice, finite_class, identity_torus };

/// A conjugacy class of closed subgroups of a catalog group.
struct SubgroupKey {
  GroupKind group = GroupKind::circle;
  KeyTag tag = KeyTag::full;
  unsigned n = 0;   // cyclic/dihedral parameter, or finite class index
  Lattice lattice;  // torus keys: the annihilator of the subgroup

  friend bool operator==(const SubgroupKey&, const SubgroupKey&) = default;
};

namespace keys {
SubgroupKey cyclic(GroupKind g, unsigned n);
SubgroupKey dihedral(GroupKind g, unsigned n);  // order 2n
SubgroupKey so2(GroupKind g);
SubgroupKey o2_in_so3();
SubgroupKey exceptional(KeyTag t);  // SO(3): A4, S4, A5, Klein
SubgroupKey full(GroupKind g);
SubgroupKey lattice(const Lattice& l);
SubgroupKey finite_class(std::size_t index);
SubgroupKey identity_torus();
}  // namespace keys

/// Throws KeyMismatch if the key does not describe a subgroup of G.
void check_key(const GroupId& g, const SubgroupKey& k);
/// Printed form: C(n), D(2n), SO2, O2, A4, S4, A5, V4, G, L[..], class names.
std::string key_name(const GroupId& g, const SubgroupKey& k);

/// K ⪯ H: K is normal in H with torus quotient.
bool cotoral_le(const GroupId& g, const SubgroupKey& k, const SubgroupKey& h);

unsigned subgroup_dim(const GroupId& g, const SubgroupKey& h);
/// Rank of a maximal torus of the subgroup.
unsigned subgroup_rank(const GroupId& g, const SubgroupKey& h);

/// Component group of H acting on the rational homology of the identity
/// component of the centre of H_e.
IntegerAction central_action(const GroupId& g, const SubgroupKey& h);
unsigned height_rep(const GroupId& g, const SubgroupKey& h);

enum class IdentityType { trivial, circle, torus, so3 };

struct WeylData {
  IdentityType identity = IdentityType::trivial;
  unsigned identity_rank = 0;     // torus rank when identity == torus
  std::string component = "1";   // name of the component group
  unsigned component_order = 1;

  friend bool operator==(const WeylData&, const WeylData&) = default;
};

WeylData weyl_data(const GroupId& g, const SubgroupKey& h);
bool has_finite_weyl(const GroupId& g, const SubgroupKey& h);

bool phi_is_finite(const GroupId& g);
/// Number of subgroups with finite Weyl group when that number is finite.
Height burnside_rank(const GroupId& g);
bool spectrum_is_noetherian(const GroupId& g);

/// "B 1", "B SO(2)", "B T^2", "B SO(3)" style name of the identity part.
std::string identity_name(const WeylData& w);

}  // namespace prism
