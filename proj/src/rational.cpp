#include "prism/rational.hpp"

#include "prism/error.hpp"

#include <algorithm>
#include <set>

namespace prism {

namespace {

// Boost 1.74's mixed int/rational == recurses forever under C++20 rewrites.
bool is_zero(const Rational& x) { return x.numerator() == 0; }

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

std::int64_t int_det(const IntMatrix& m) {
  QMatrix q = to_rational(m);
  const std::size_t n = q.size();
  Rational d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && is_zero(q[p][c])) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(q[p], q[c]);
      d = -d;
    }
    d *= q[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      const Rational f = q[r][c] / q[c][c];
      for (std::size_t k = c; k < n; ++k) q[r][k] -= f * q[c][k];
    }
  }
  return d.numerator();
}

QMatrix stack(const QMatrix& a, const QMatrix& b) {
  QMatrix out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

QMatrix shifted(const IntMatrix& g, int eigenvalue) {
  QMatrix m = to_rational(g);
  for (std::size_t i = 0; i < m.size(); ++i) m[i][i] -= eigenvalue;
  return m;
}

}  // namespace

QMatrix to_rational(const IntMatrix& m) {
  QMatrix q;
  for (const auto& row : m) q.emplace_back(row.begin(), row.end());
  return q;
}

QVector apply(const QMatrix& m, const QVector& v) {
  QVector out(m.size(), Rational(0));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
  return out;
}

QMatrix rref(QMatrix m) {
  if (m.empty()) return m;
  const std::size_t rows = m.size();
  const std::size_t cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && is_zero(m[p][c])) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    const Rational inv = Rational(1) / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || is_zero(m[i][c])) continue;
      const Rational f = m[i][c];
      for (std::size_t k = 0; k < cols; ++k) m[i][k] -= f * m[r][k];
    }
    ++r;
  }
  m.resize(r);
  return m;
}

QMatrix kernel(const QMatrix& m) {
  if (m.empty()) return {};
  const std::size_t cols = m[0].size();
  const QMatrix e = rref(m);
  std::vector<std::size_t> pivot_col;
  for (const auto& row : e)
    pivot_col.push_back(static_cast<std::size_t>(std::find_if(row.begin(), row.end(), [](const Rational& x) { return !is_zero(x); }) - row.begin()));
  QMatrix out;
  for (std::size_t free = 0; free < cols; ++free) {
    if (std::find(pivot_col.begin(), pivot_col.end(), free) != pivot_col.end()) continue;
    QVector v(cols, Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < e.size(); ++r) v[pivot_col[r]] = -e[r][free];
    out.push_back(std::move(v));
  }
  return out;
}

Subspace Subspace::span(unsigned ambient, const QMatrix& vectors) {
  Subspace s(ambient);
  s.basis_ = rref(vectors);
  return s;
}

Subspace Subspace::whole(unsigned ambient) { return span(ambient, to_rational(identity(ambient))); }

bool Subspace::contains(const QVector& v) const { return span(ambient_, stack(basis_, {v})).dim() == dim(); }

Subspace sum(const Subspace& a, const Subspace& b) { return Subspace::span(a.ambient(), stack(a.basis(), b.basis())); }

Subspace intersection(const Subspace& a, const Subspace& b) {
  // (A ∩ B)^⊥ = A^⊥ + B^⊥ for the standard pairing.
  auto perp = [](const Subspace& s) {
    if (s.dim() == 0) return to_rational(identity(s.ambient()));
    return kernel(s.basis());
  };
  const QMatrix both = stack(perp(a), perp(b));
  if (both.empty()) return Subspace::whole(a.ambient());
  return Subspace::span(a.ambient(), kernel(both));
}

void validate(const IntegerAction& a) {
  if (a.dim == 0) fail(errors::kInvalidAction, "action dimension must be positive");
  const IntMatrix id = identity(a.dim);
  for (std::size_t g = 0; g < a.generators.size(); ++g) {
    const auto& m = a.generators[g];
    const auto label = "generator " + std::to_string(g + 1);
    if (m.size() != a.dim || std::any_of(m.begin(), m.end(), [&](const auto& r) { return r.size() != a.dim; }))
      fail(errors::kInvalidAction, label + " is not " + std::to_string(a.dim) + "x" + std::to_string(a.dim));
    const auto d = int_det(m);
    if (d != 1 && d != -1) fail(errors::kInvalidAction, label + " is not invertible over the integers");
    IntMatrix power = m;
    bool finite = false;
    for (int k = 1; k <= 12 && !finite; ++k) {
      if (power == id) finite = true;
      power = multiply(power, m);
    }
    if (!finite) fail(errors::kInvalidAction, label + " has no finite order up to 12");
  }
}

IntegerAction trivial_action(unsigned dim) { return {dim, {}}; }

Subspace fixed_space(const IntegerAction& a) {
  QMatrix eqs;
  for (const auto& g : a.generators) {
    const auto m = shifted(g, 1);
    eqs.insert(eqs.end(), m.begin(), m.end());
  }
  if (eqs.empty()) return Subspace::whole(a.dim);
  return Subspace::span(a.dim, kernel(eqs));
}

bool is_invariant(const IntegerAction& a, const Subspace& s) {
  for (const auto& g : a.generators) {
    const QMatrix q = to_rational(g);
    for (const auto& v : s.basis())
      if (!s.contains(apply(q, v))) return false;
  }
  return true;
}

std::vector<IntMatrix> group_elements(const IntegerAction& a, std::size_t limit) {
  std::set<IntMatrix> seen{identity(a.dim)};
  std::vector<IntMatrix> frontier{identity(a.dim)};
  while (!frontier.empty()) {
    std::vector<IntMatrix> next;
    for (const auto& x : frontier)
      for (const auto& g : a.generators) {
        auto y = multiply(g, x);
        if (seen.insert(y).second) next.push_back(std::move(y));
      }
    if (seen.size() > limit) fail(errors::kInvalidAction, "generated group is larger than " + std::to_string(limit));
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

unsigned count_simple_summands(const IntegerAction& a) {
  if (a.dim > 3) fail(errors::kDimTooLarge, "simple summands are only counted up to dimension 3");
  validate(a);
  const std::size_t g = a.generators.size();
  unsigned summands = 0;
  Subspace lines(a.dim);
  // Every one-dimensional rational representation of a finite group is a
  // sign character, so the isotypic parts of dimension one are the common
  // eigenspaces for the sign patterns on the generators.
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g); ++mask) {
    QMatrix eqs;
    for (std::size_t i = 0; i < g; ++i) {
      const auto m = shifted(a.generators[i], (mask >> i) & 1 ? -1 : 1);
      eqs.insert(eqs.end(), m.begin(), m.end());
    }
    const Subspace eigen = eqs.empty() ? Subspace::whole(a.dim) : Subspace::span(a.dim, kernel(eqs));
    summands += eigen.dim();
    lines = sum(lines, eigen);
  }
  // The invariant complement has dimension dim - dim(lines); below
  // dimension 4 it cannot split further without producing another line.
  if (lines.dim() < a.dim) summands += 1;
  return summands;
}

bool finite_weyl_criterion(const IntegerAction& a, const Subspace& ls) {
  if (!is_invariant(a, ls)) fail(errors::kNotInvariant, "subspace is not invariant under the action");
  const Subspace fixed = fixed_space(a);
  return intersection(ls, fixed).dim() == fixed.dim();
}

Subspace normalizer_directions(const IntegerAction& a, const Subspace& ls) {
  if (!is_invariant(a, ls)) fail(errors::kNotInvariant, "subspace is not invariant under the action");
  return sum(ls, fixed_space(a));
}

}  // namespace prism
