#pragma once

// Finite spectral spaces, finite Priestley spaces and the finitely presented
// "flagged" model of countable Priestley spaces.

#include "prism/bits.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace prism {

using PointIndex = std::size_t;
using OrderPair = std::pair<std::string, std::string>;  // first ≤ second

class FiniteTopSpace {
 public:
  /// Validates that `opens` contains ∅ and the whole set and is closed under
  /// binary union and intersection. Points are stored sorted.
  static FiniteTopSpace create(std::vector<std::string> points,
                               const std::vector<std::vector<std::string>>& opens);

  const std::vector<std::string>& points() const { return points_; }
  const std::vector<Bits>& opens() const { return opens_; }
  std::size_t size() const { return points_.size(); }

  /// Smallest closed set containing `i`.
  Bits closure_of(PointIndex i) const;

 private:
  FiniteTopSpace() = default;
  std::vector<std::string> points_;
  std::vector<Bits> opens_;  // sorted, unique
};

class FinitePriestley {
 public:
  /// Builds from a relation list; the list is reflexively and transitively
  /// closed. Throws InvalidSpace on a cycle or an unknown name.
  static FinitePriestley create(std::vector<std::string> points, const std::vector<OrderPair>& order);
  /// `leq` must already be a partial order on the sorted `points`.
  static FinitePriestley from_relation(std::vector<std::string> points, Relation leq);

  std::size_t size() const { return points_.size(); }
  const std::vector<std::string>& points() const { return points_; }
  const std::string& name(PointIndex i) const { return points_[i]; }
  PointIndex index_of(const std::string& name) const;
  const Relation& order() const { return leq_; }
  bool leq(PointIndex a, PointIndex b) const { return leq_(a, b); }

  friend bool operator==(const FinitePriestley&, const FinitePriestley&) = default;

 private:
  FinitePriestley() = default;
  std::vector<std::string> points_;
  Relation leq_;
};

enum class MemberOrder { antichain, descending_chain, ascending_chain };

/// A convergent sequence of points not listed individually. Every member has
/// the same relations to the concrete points: members sit strictly below every
/// point of `member_lt` and strictly above every point of `member_gt`.
struct AccumulationFamily {
  std::string id;
  PointIndex limit = 0;
  MemberOrder member_order = MemberOrder::antichain;
  Bits member_lt;
  Bits member_gt;
  std::vector<std::string> samples;
  std::optional<unsigned> height_hint;

  friend bool operator==(const AccumulationFamily&, const AccumulationFamily&) = default;
};

/// Name-based description used to construct a FlaggedPriestley.
struct FamilySpec {
  std::string id;
  std::string limit;
  MemberOrder member_order = MemberOrder::antichain;
  std::vector<std::string> member_lt;
  std::vector<std::string> member_gt;
  std::vector<std::string> samples;
  std::optional<unsigned> height_hint;
};

class FlaggedPriestley {
 public:
  static FlaggedPriestley create(std::vector<std::string> points, const std::vector<OrderPair>& order,
                                 const std::vector<FamilySpec>& families);
  /// `points` sorted and unique, `leq` a partial order on them. Family
  /// bitsets are closed (member_lt upward, member_gt downward) and checked.
  static FlaggedPriestley from_parts(std::vector<std::string> points, Relation leq,
                                     std::vector<AccumulationFamily> families);

  std::size_t size() const { return points_.size(); }
  const std::vector<std::string>& points() const { return points_; }
  const std::string& name(PointIndex i) const { return points_[i]; }
  PointIndex index_of(const std::string& name) const;
  std::optional<PointIndex> find(const std::string& name) const;
  const Relation& order() const { return leq_; }
  bool leq(PointIndex a, PointIndex b) const { return leq_(a, b); }
  bool lt(PointIndex a, PointIndex b) const { return a != b && leq_(a, b); }

  const std::vector<AccumulationFamily>& families() const { return families_; }
  std::optional<std::size_t> family_index(const std::string& id) const;

  /// Concrete points ≥ i (including i).
  Bits up(PointIndex i) const { return leq_.rows[i]; }
  /// Concrete points ≤ i (including i).
  Bits down(PointIndex i) const { return down_[i]; }
  Bits up_closure(const Bits& s) const;
  Bits down_closure(const Bits& s) const;

  friend bool operator==(const FlaggedPriestley& a, const FlaggedPriestley& b) {
    return a.points_ == b.points_ && a.leq_ == b.leq_ && a.families_ == b.families_;
  }

 private:
  FlaggedPriestley() = default;
  std::vector<std::string> points_;
  Relation leq_;
  std::vector<Bits> down_;
  std::vector<AccumulationFamily> families_;
};

FlaggedPriestley to_flagged(const FinitePriestley& p);

// -- symbolic subsets of a flagged space -----------------------------------

/// How many members of a family a symbolic set contains. For chain families
/// `cofinite` means a tail and `finite` an initial segment.
enum class MemberPart { none, finite, cofinite, all };

struct SymbolicSet {
  Bits concrete;
  std::vector<MemberPart> members;  // indexed like P.families()

  friend bool operator==(const SymbolicSet&, const SymbolicSet&) = default;
};

SymbolicSet empty_set(const FlaggedPriestley& p);
SymbolicSet whole_space(const FlaggedPriestley& p);
SymbolicSet complement(const SymbolicSet& s);
/// Flagged closure rule: a set is closed iff every family with infinitely
/// many members inside has its limit inside.
bool is_closed(const FlaggedPriestley& p, const SymbolicSet& s);
bool is_down_set(const FlaggedPriestley& p, const SymbolicSet& s);
bool is_up_set(const FlaggedPriestley& p, const SymbolicSet& s);
std::string describe(const FlaggedPriestley& p, const SymbolicSet& s);

enum class FamilyTag { finite, cofinite };

/// A shape class of clopen down-sets: the concrete part ranges over the
/// down-sets C with required ⊆ C ⊆ allowed; each family contributes finitely
/// or cofinitely many members as tagged (all members whenever C meets the
/// family's member_lt). A finite part may be empty, and is only nonempty
/// when member_gt ⊆ C and the members do not descend; a cofinite part of an
/// ascending chain is the whole family.
struct ClopenClass {
  Bits required;
  Bits allowed;
  std::vector<FamilyTag> tags;

  friend bool operator==(const ClopenClass&, const ClopenClass&) = default;
};

std::string describe(const FlaggedPriestley& p, const ClopenClass& c);

// -- operations -------------------------------------------------------------

/// y ≤ x iff y lies in the closure of {x}. Throws NotT0.
Relation specialization_order(const FiniteTopSpace& space);
FinitePriestley priestley_of_spectral(const FiniteTopSpace& space);
/// Opens are the up-sets of the order.
FiniteTopSpace spectral_of_priestley(const FinitePriestley& p);

FinitePriestley inverse(const FinitePriestley& p);
/// Reverses the order, swaps member_lt/member_gt and flips chain direction.
FlaggedPriestley inverse(const FlaggedPriestley& p);

struct DownSetFamily {
  std::vector<Bits> sets;  // ascending by index list
};
DownSetFamily down_sets(const FinitePriestley& p);
DownSetFamily up_sets(const FinitePriestley& p);

/// Throws TooLarge once more than `max_classes` classes would be produced.
std::vector<ClopenClass> clopen_down_sets(const FlaggedPriestley& p, std::size_t max_classes = 4096);

struct ThomasonPoints {
  Bits concrete;
  std::vector<std::size_t> families;  // families whose members are all isolated minimal
};
ThomasonPoints thomason_points(const FlaggedPriestley& p);
Bits thomason_points(const FinitePriestley& p);
Bits minimal_points(const FlaggedPriestley& p);

bool is_noetherian(const FlaggedPriestley& p);
inline bool is_noetherian(const FinitePriestley&) { return true; }

std::string to_string(MemberOrder o);
MemberOrder member_order_from_string(const std::string& s);

}  // namespace prism
