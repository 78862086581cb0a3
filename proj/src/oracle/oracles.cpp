#include "prism/oracle/oracles.hpp"

#include "prism/fixtures.hpp"
#include "prism/kernels.hpp"
#include "prism/snapshot.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

namespace prism::oracle {

std::size_t isomax_count(const Subset& phi, unsigned n) {
  std::size_t count = 0;
  for (std::uint32_t m = 1; m < (1u << (n + 1)); ++m) {
    const Subset psi{m};
    if ((m & phi.mask) == phi.mask && psi.max() == phi.max()) ++count;
  }
  return count;
}

namespace {

bool hnf_contains(const Lattice& super, const IntMatrix& vs) {
  IntMatrix all = super.rows();
  all.insert(all.end(), vs.begin(), vs.end());
  return hermite_normal_form(all) == super.rows();
}

IntVector reduce_mod(IntVector y, const Lattice& sub) {
  for (const auto& row : sub.rows()) {
    std::size_t p = 0;
    while (row[p] == 0) ++p;
    std::int64_t q = y[p] / row[p];
    if (y[p] - q * row[p] < 0) --q;
    for (std::size_t k = 0; k < y.size(); ++k) y[k] -= q * row[k];
  }
  return y;
}

}  // namespace

std::optional<std::size_t> torsion_order(const Lattice& sub, const Lattice& super) {
  if (!hnf_contains(super, sub.rows())) return std::nullopt;
  if (sub.rank() == 0) return 1;
  std::int64_t d = 1;
  for (const auto& row : sub.rows()) d *= *std::find_if(row.begin(), row.end(), [](auto x) { return x != 0; });
  std::set<IntVector> cosets;
  std::vector<std::int64_t> a(sub.rank(), 0);
  const std::size_t r = sub.ambient();
  for (;;) {
    IntVector y(r, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t k = 0; k < r; ++k) y[k] += a[i] * sub.rows()[i][k];
    if (std::all_of(y.begin(), y.end(), [&](auto v) { return v % d == 0; })) {
      for (auto& v : y) v /= d;
      if (hnf_contains(super, {y})) cosets.insert(reduce_mod(y, sub));
    }
    std::size_t i = 0;
    while (i < a.size() && ++a[i] == d) a[i++] = 0;
    if (i == a.size()) break;
  }
  return cosets.size();
}

DerivedHeights heights_by_derivative(const FlaggedPriestley& p, unsigned steps) {
  DerivedHeights out;
  FlaggedPriestley cur = p;
  for (unsigned s = 0; s < steps; ++s) {
    const auto t = thomason_points(cur);
    for_each_bit(t.concrete, [&](std::size_t x) { out.points[cur.name(x)] = s; });
    for (auto f : t.families) out.families[cur.families()[f].id] = s;
    cur = thomason_derivative(cur);
  }
  return out;
}

std::vector<Bits> down_sets(const FinitePriestley& p) {
  const auto n = static_cast<unsigned>(p.size());
  std::vector<std::uint64_t> below(n, 0);
  for (unsigned x = 0; x < n; ++x)
    for (unsigned y = 0; y < n; ++y)
      if (p.leq(y, x)) below[x] |= std::uint64_t{1} << y;
  const auto masks = kernels::serial::filter_subsets(n, [&](std::uint64_t m) {
    for (unsigned x = 0; x < n; ++x)
      if (((m >> x) & 1) && (below[x] & ~m)) return false;
    return true;
  });
  std::vector<Bits> out;
  for (auto m : masks) {
    Bits b(n);
    for (unsigned x = 0; x < n; ++x) b[x] = (m >> x) & 1;
    out.push_back(b);
  }
  std::sort(out.begin(), out.end(), [](const Bits& a, const Bits& b) { return bit_indices(a) < bit_indices(b); });
  return out;
}

std::vector<unsigned> longest_chain_below(const FinitePriestley& p) {
  const std::size_t n = p.size();
  std::vector<std::size_t> order(n);
  std::vector<std::size_t> below(n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    order[x] = x;
    for (std::size_t y = 0; y < n; ++y) below[x] += p.leq(y, x);
  }
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return below[a] < below[b]; });
  std::vector<unsigned> len(n, 0);
  for (auto x : order)
    for (std::size_t y = 0; y < n; ++y)
      if (y != x && p.leq(y, x)) len[x] = std::max(len[x], len[y] + 1);
  return len;
}

FinitePriestley random_poset(unsigned n, unsigned seed, double density) {
  std::mt19937 rng(seed);
  std::bernoulli_distribution edge(density);
  std::vector<std::string> pts;
  for (unsigned i = 0; i < n; ++i) pts.push_back((i < 10 ? "p0" : "p") + std::to_string(i));
  std::vector<OrderPair> order;
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = i + 1; j < n; ++j)
      if (edge(rng)) order.emplace_back(pts[i], pts[j]);
  return FinitePriestley::create(pts, order);
}

namespace {

SuiteResult isomax_suite() {
  SuiteResult r{"isomax", 0, {}};
  for (unsigned n = 0; n <= 6; ++n)
    for (const auto& phi : punctured_cube(n)) {
      ++r.checks;
      const auto expected = std::size_t{1} << isomax_dim(phi);
      const auto got = isomax_count(phi, n);
      if (got != expected)
        r.mismatches.push_back("n=" + std::to_string(n) + " φ=" + phi.str() + ": " + std::to_string(got) + " supersets");
    }
  return r;
}

SuiteResult snf_suite() {
  SuiteResult r{"snf", 0, {}};
  for (auto [ambient, bound] : {std::pair{1u, 24u}, std::pair{2u, 4u}, std::pair{3u, 2u}}) {
    const auto lattices = bounded_lattices(ambient, bound);
    for (const auto& sub : lattices) {
      std::int64_t d = 1;
      for (std::size_t i = 0; i < sub.rank(); ++i) d *= sub.rows()[i][sub.pivot(i)];
      if (d > 24) continue;
      for (const auto& super : lattices) {
        ++r.checks;
        const auto cosets = torsion_order(sub, super);
        const bool fast = is_saturated_in(sub, super);
        bool ok = fast == (cosets && *cosets == 1);
        if (ok && cosets && sub.rank() > 0) {
          const auto inv = smith_invariants(*super.coefficients(sub.rows()));
          std::int64_t prod = 1;
          for (auto x : inv) prod *= x;
          ok = static_cast<std::size_t>(prod) == *cosets;
        }
        if (!ok) r.mismatches.push_back(sub.str() + " in " + super.str());
      }
    }
  }
  return r;
}

void compare_derivative(SuiteResult& r, const std::string& label, const FlaggedPriestley& p) {
  const auto h = thomason_heights(p);
  const auto d = heights_by_derivative(p, 3);
  auto check = [&](const std::string& name, Height expected, const std::map<std::string, unsigned>& got) {
    ++r.checks;
    auto it = got.find(name);
    const bool removed = it != got.end();
    const bool early = expected.is_finite() && expected.value() < 3;
    if (removed != early || (removed && it->second != expected.value()))
      r.mismatches.push_back(label + ": " + name + " has height " + expected.str());
  };
  for (std::size_t x = 0; x < p.size(); ++x) check(p.name(x), h.points[x], d.points);
  for (std::size_t f = 0; f < p.families().size(); ++f) check(p.families()[f].id, h.families[f], d.families);
}

SuiteResult derivative_suite() {
  SuiteResult r{"derivative", 0, {}};
  for (unsigned k = 1; k <= 4; ++k) compare_derivative(r, "nstar:" + std::to_string(k), fixtures::nstar(k));
  for (const auto& g : fixtures::catalog())
    for (auto b : fixtures::catalog_bounds(g))
      compare_derivative(r, g.str() + "@" + std::to_string(b), flagged_snapshot(g, b).space);
  return r;
}

SuiteResult downsets_suite() {
  SuiteResult r{"downsets", 0, {}};
  unsigned seed = 1;
  for (unsigned n = 0; n <= 12; ++n)
    for (double density : {0.1, 0.3, 0.6})
      for (int rep = 0; rep < 4; ++rep) {
        const auto p = random_poset(n, seed++, density);
        ++r.checks;
        if (prism::down_sets(p).sets != oracle::down_sets(p))
          r.mismatches.push_back("random poset n=" + std::to_string(n) + " seed=" + std::to_string(seed - 1));
      }
  return r;
}

}  // namespace

std::vector<std::string> suite_names() { return {"isomax", "snf", "derivative", "downsets"}; }

SuiteResult run_suite(const std::string& name) {
  if (name == "isomax") return isomax_suite();
  if (name == "snf") return snf_suite();
  if (name == "derivative") return derivative_suite();
  if (name == "downsets") return downsets_suite();
  throw std::invalid_argument("unknown oracle suite '" + name + "'");
}

}  // namespace prism::oracle
