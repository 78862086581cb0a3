#pragma once

// Integer lattices L ⊆ Z^r in row Hermite normal form, and the Smith normal
// form test used for the cotoral order on closed subgroups of a torus.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace prism {

class Lattice;
std::vector<Lattice> bounded_lattices(unsigned ambient, unsigned bound);

using IntVector = std::vector<std::int64_t>;
using IntMatrix = std::vector<IntVector>;

/// A sublattice of Z^ambient, stored as the nonzero rows of its Hermite
/// normal form: pivots strictly increase and are positive, entries above a
/// pivot lie in [0, pivot), entries below a pivot vanish.
class Lattice {
 public:
  Lattice() = default;
  explicit Lattice(unsigned ambient) : ambient_(ambient) {}
  /// Canonicalises any generating set.
  static Lattice span(unsigned ambient, const IntMatrix& generators);
  /// The whole of Z^ambient.
  static Lattice standard(unsigned ambient);

  unsigned ambient() const { return ambient_; }
  unsigned rank() const { return static_cast<unsigned>(rows_.size()); }
  const IntMatrix& rows() const { return rows_; }

  bool contains(const IntVector& v) const;
  /// Coefficients of each vector in the row basis, or nothing if one of
  /// them is not in L.
  std::optional<IntMatrix> coefficients(const IntMatrix& vs) const;
  bool contains(const Lattice& other) const;
  std::size_t pivot(std::size_t row) const;

  /// "L[a b; 0 c]", padded with zero rows to a square matrix.
  std::string str() const;

  friend bool operator==(const Lattice&, const Lattice&) = default;
  friend auto operator<=>(const Lattice&, const Lattice&) = default;

 private:
  friend std::vector<Lattice> bounded_lattices(unsigned ambient, unsigned bound);
  unsigned ambient_ = 0;
  IntMatrix rows_;
};

IntMatrix hermite_normal_form(IntMatrix m);
/// Nonzero invariant factors d1 | d2 | ... of the Smith normal form.
IntVector smith_invariants(IntMatrix m);

/// sub ⊆ super with super/sub torsion-free.
bool is_saturated_in(const Lattice& sub, const Lattice& super);

/// Every lattice whose normal form has entries bounded by `bound` in absolute
/// value, in canonical order.
std::vector<Lattice> bounded_lattices(unsigned ambient, unsigned bound);

}  // namespace prism
