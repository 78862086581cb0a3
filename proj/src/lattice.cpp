#include "prism/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace prism {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

void axpy(IntVector& y, std::int64_t a, const IntVector& x) {
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += a * x[i];
}

std::int64_t det(const IntMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
  std::int64_t d = 0;
  for (std::size_t c = 0; c < n; ++c) {
    IntMatrix minor;
    for (std::size_t r = 1; r < n; ++r) {
      IntVector row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(std::move(row));
    }
    d += ((c % 2) ? -1 : 1) * m[0][c] * det(minor);
  }
  return d;
}

// All k-element subsets of {0..n-1}, as index lists.
std::vector<std::vector<std::size_t>> choose(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace

IntMatrix hermite_normal_form(IntMatrix m) {
  if (m.empty()) return m;
  const std::size_t rows = m.size();
  const std::size_t cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    for (;;) {
      std::size_t best = rows;
      for (std::size_t i = r; i < rows; ++i)
        if (m[i][c] != 0 && (best == rows || std::llabs(m[i][c]) < std::llabs(m[best][c]))) best = i;
      if (best == rows) break;
      std::swap(m[r], m[best]);
      bool clean = true;
      for (std::size_t i = r + 1; i < rows; ++i) {
        if (m[i][c] == 0) continue;
        axpy(m[i], -(m[i][c] / m[r][c]), m[r]);
        if (m[i][c] != 0) clean = false;
      }
      if (clean) break;
    }
    if (m[r][c] == 0) continue;
    if (m[r][c] < 0)
      for (auto& x : m[r]) x = -x;
    for (std::size_t i = 0; i < r; ++i) axpy(m[i], -floor_div(m[i][c], m[r][c]), m[r]);
    ++r;
  }
  m.resize(r);
  return m;
}

IntVector smith_invariants(IntMatrix m) {
  // Determinantal divisors: d_k is the gcd of all k×k minors, and the k-th
  // invariant factor is d_k / d_{k-1}.
  IntVector out;
  if (m.empty() || m[0].empty()) return out;
  const std::size_t rows = m.size();
  const std::size_t cols = m[0].size();
  std::int64_t prev = 1;
  for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
    std::int64_t g = 0;
    for (const auto& rs : choose(rows, k))
      for (const auto& cs : choose(cols, k)) {
        IntMatrix sub;
        for (auto r : rs) {
          IntVector row;
          for (auto c : cs) row.push_back(m[r][c]);
          sub.push_back(std::move(row));
        }
        g = std::gcd(g, std::llabs(det(sub)));
      }
    if (g == 0) break;
    out.push_back(g / prev);
    prev = g;
  }
  return out;
}

Lattice Lattice::span(unsigned ambient, const IntMatrix& generators) {
  for (const auto& g : generators)
    if (g.size() != ambient) throw std::invalid_argument("lattice generator has the wrong length");
  Lattice l(ambient);
  l.rows_ = hermite_normal_form(generators);
  return l;
}

Lattice Lattice::standard(unsigned ambient) {
  IntMatrix id(ambient, IntVector(ambient, 0));
  for (unsigned i = 0; i < ambient; ++i) id[i][i] = 1;
  return span(ambient, id);
}

std::size_t Lattice::pivot(std::size_t row) const {
  const auto& r = rows_[row];
  return static_cast<std::size_t>(std::find_if(r.begin(), r.end(), [](auto x) { return x != 0; }) - r.begin());
}

std::optional<IntMatrix> Lattice::coefficients(const IntMatrix& vs) const {
  IntMatrix out;
  for (IntVector v : vs) {
    IntVector coeff(rows_.size(), 0);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const auto p = pivot(i);
      if (v[p] % rows_[i][p] != 0) return std::nullopt;
      coeff[i] = v[p] / rows_[i][p];
      axpy(v, -coeff[i], rows_[i]);
    }
    if (std::any_of(v.begin(), v.end(), [](auto x) { return x != 0; })) return std::nullopt;
    out.push_back(std::move(coeff));
  }
  return out;
}

bool Lattice::contains(const IntVector& v) const { return coefficients({v}).has_value(); }

bool Lattice::contains(const Lattice& other) const { return coefficients(other.rows_).has_value(); }

std::string Lattice::str() const {
  std::string s = "L[";
  for (unsigned r = 0; r < ambient_; ++r) {
    if (r) s += "; ";
    for (unsigned c = 0; c < ambient_; ++c) {
      if (c) s += ' ';
      s += std::to_string(r < rows_.size() ? rows_[r][c] : 0);
    }
  }
  return s + "]";
}

bool is_saturated_in(const Lattice& sub, const Lattice& super) {
  auto coeff = super.coefficients(sub.rows());
  if (!coeff) return false;
  if (sub.rank() == 0) return true;
  const auto inv = smith_invariants(*coeff);
  return inv.size() == sub.rank() && std::all_of(inv.begin(), inv.end(), [](auto d) { return d == 1; });
}

std::vector<Lattice> bounded_lattices(unsigned ambient, unsigned bound) {
  std::vector<Lattice> out;
  const auto b = static_cast<std::int64_t>(bound);
  for (unsigned rank = 0; rank <= ambient; ++rank) {
    for (const auto& pivots : choose(ambient, rank)) {
      // Fill the matrix row by row; entries above a pivot depend on the
      // pivot value, so pivots are chosen first.
      IntMatrix m(rank, IntVector(ambient, 0));
      std::vector<std::pair<std::size_t, std::size_t>> free_cells;
      for (std::size_t i = 0; i < rank; ++i)
        for (std::size_t c = pivots[i] + 1; c < ambient; ++c) free_cells.emplace_back(i, c);
      auto pivot_row_of = [&](std::size_t c) -> std::size_t {
        for (std::size_t i = 0; i < rank; ++i)
          if (pivots[i] == c) return i;
        return rank;
      };
      auto fill = [&](auto&& self, std::size_t k) -> void {
        if (k == free_cells.size()) {
          Lattice l(ambient);
          l.rows_ = m;
          out.push_back(std::move(l));
          return;
        }
        auto [i, c] = free_cells[k];
        const auto pr = pivot_row_of(c);
        if (pr < rank && pr > i) {
          for (std::int64_t x = 0; x < m[pr][c]; ++x) {
            m[i][c] = x;
            self(self, k + 1);
          }
        } else if (pr < rank) {
          m[i][c] = 0;
          self(self, k + 1);
        } else {
          for (std::int64_t x = -b; x <= b; ++x) {
            m[i][c] = x;
            self(self, k + 1);
          }
        }
        m[i][c] = 0;
      };
      auto choose_pivots = [&](auto&& self, std::size_t i) -> void {
        if (i == rank) {
          fill(fill, 0);
          return;
        }
        for (std::int64_t p = 1; p <= b; ++p) {
          m[i][pivots[i]] = p;
          self(self, i + 1);
        }
      };
      choose_pivots(choose_pivots, 0);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace prism
