#pragma once

// Exact linear algebra over Q for small integer representations: fixed
// spaces, invariant subspaces and the count of simple summands.

#include "prism/lattice.hpp"

#include <boost/rational.hpp>

#include <vector>

namespace prism {

using Rational = boost::rational<std::int64_t>;
using QVector = std::vector<Rational>;
using QMatrix = std::vector<QVector>;

/// A finite group given by invertible integer matrices acting on Z^dim
/// (columns are images of basis vectors).
struct IntegerAction {
  unsigned dim = 0;
  std::vector<IntMatrix> generators;
};

/// Throws InvalidAction unless every generator is dim×dim, has determinant
/// ±1 and finite order at most 12.
void validate(const IntegerAction& a);
IntegerAction trivial_action(unsigned dim);

/// A subspace of Q^n stored by its reduced row echelon basis.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(unsigned ambient) : ambient_(ambient) {}
  static Subspace span(unsigned ambient, const QMatrix& vectors);
  static Subspace whole(unsigned ambient);

  unsigned ambient() const { return ambient_; }
  unsigned dim() const { return static_cast<unsigned>(basis_.size()); }
  const QMatrix& basis() const { return basis_; }
  bool contains(const QVector& v) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  unsigned ambient_ = 0;
  QMatrix basis_;
};

QMatrix to_rational(const IntMatrix& m);
QVector apply(const QMatrix& m, const QVector& v);
/// Reduced row echelon form with zero rows removed.
QMatrix rref(QMatrix m);
/// Basis of {v : m v = 0}.
QMatrix kernel(const QMatrix& m);

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersection(const Subspace& a, const Subspace& b);
Subspace fixed_space(const IntegerAction& a);
bool is_invariant(const IntegerAction& a, const Subspace& s);

/// All group elements generated by the action (closure under products).
std::vector<IntMatrix> group_elements(const IntegerAction& a, std::size_t limit = 4096);

/// Number of simple summands of Q^dim as a representation. Throws
/// DimTooLarge above dimension 3.
unsigned count_simple_summands(const IntegerAction& a);

/// dim(ls ∩ V^W) == dim(V^W). Throws NotInvariant.
bool finite_weyl_criterion(const IntegerAction& a, const Subspace& ls);
/// ls + V^W. Throws NotInvariant.
Subspace normalizer_directions(const IntegerAction& a, const Subspace& ls);

}  // namespace prism
