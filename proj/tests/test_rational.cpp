#include <doctest.h>

#include "prism/error.hpp"
#include "prism/rational.hpp"

using namespace prism;

namespace {

IntMatrix mul(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix c(a.size(), IntVector(b[0].size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      for (std::size_t j = 0; j < b[0].size(); ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

IntegerAction conjugate(const IntegerAction& a, const IntMatrix& p, const IntMatrix& p_inv) {
  IntegerAction out{a.dim, {}};
  for (const auto& g : a.generators) out.generators.push_back(mul(mul(p, g), p_inv));
  return out;
}

IntMatrix block(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t n = a.size() + b.size();
  IntMatrix m(n, IntVector(n, 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) m[i][j] = a[i][j];
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) m[a.size() + i][a.size() + j] = b[i][j];
  return m;
}

IntegerAction direct_sum(const IntegerAction& a, const IntegerAction& b) {
  IntegerAction out{a.dim + b.dim, {}};
  for (std::size_t g = 0; g < a.generators.size(); ++g) out.generators.push_back(block(a.generators[g], b.generators[g]));
  return out;
}

IntMatrix identity(unsigned n) {
  IntMatrix m(n, IntVector(n, 0));
  for (unsigned i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

// Weyl group of type A2 acting on its root lattice.
const IntegerAction kA2{2, {{{0, -1}, {1, -1}}, {{0, 1}, {1, 0}}}};
const IntegerAction kSwap{2, {{{0, 1}, {1, 0}}}};
const IntegerAction kSign{1, {{{-1}}}};

QVector qv(std::initializer_list<long> xs) {
  QVector v;
  for (auto x : xs) v.emplace_back(x);
  return v;
}

std::string error_name(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.name();
  }
  return "";
}

}  // namespace

TEST_CASE("simple summand counts") {
  CHECK(count_simple_summands(trivial_action(2)) == 2);
  CHECK(count_simple_summands(kSign) == 1);
  CHECK(count_simple_summands(kA2) == 1);
  CHECK(count_simple_summands(kSwap) == 2);
  CHECK(count_simple_summands(IntegerAction{2, {{{0, -1}, {1, 0}}}}) == 1);  // rotation by a quarter turn
  CHECK(count_simple_summands(IntegerAction{3, {{{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}}}) == 2);
  CHECK(count_simple_summands(IntegerAction{2, {{{-1, 0}, {0, -1}}}}) == 2);
  CHECK(error_name([] { count_simple_summands(trivial_action(4)); }) == errors::kDimTooLarge);
}

TEST_CASE("summand counts are conjugation invariant and additive") {
  const std::vector<std::pair<IntMatrix, IntMatrix>> unimodular2{
      {{{1, 1}, {0, 1}}, {{1, -1}, {0, 1}}},
      {{{2, 1}, {1, 1}}, {{1, -1}, {-1, 2}}},
      {{{0, 1}, {1, 0}}, {{0, 1}, {1, 0}}},
  };
  for (const auto& a : {kA2, kSwap, IntegerAction{2, {{{0, -1}, {1, 0}}}}, trivial_action(2)})
    for (const auto& [p, q] : unimodular2) {
      REQUIRE(mul(p, q) == identity(2));
      CHECK(count_simple_summands(conjugate(a, p, q)) == count_simple_summands(a));
    }

  const IntegerAction a2_one{2, {kA2.generators[0]}};
  const IntegerAction sign_one{1, {{{-1}}}};
  const IntegerAction triv_one{1, {{{1}}}};
  CHECK(count_simple_summands(direct_sum(a2_one, sign_one)) ==
        count_simple_summands(a2_one) + count_simple_summands(sign_one));
  CHECK(count_simple_summands(direct_sum(sign_one, triv_one)) == 2);
  const IntegerAction swap_two{2, {{{0, 1}, {1, 0}}, {{1, 0}, {0, 1}}}};
  const IntegerAction sign_two{1, {{{-1}}, {{-1}}}};
  CHECK(count_simple_summands(direct_sum(swap_two, sign_two)) == 3);
  CHECK(count_simple_summands(direct_sum(kA2, IntegerAction{1, {{{1}}, {{-1}}}})) == 2);
}

TEST_CASE("invalid actions") {
  CHECK(error_name([] { validate(IntegerAction{0, {}}); }) == errors::kInvalidAction);
  CHECK(error_name([] { validate(IntegerAction{2, {{{2, 0}, {0, 1}}}}); }) == errors::kInvalidAction);
  CHECK(error_name([] { validate(IntegerAction{2, {{{1, 1}, {0, 1}}}}); }) == errors::kInvalidAction);
  CHECK(error_name([] { validate(IntegerAction{2, {{{1, 0}}}}); }) == errors::kInvalidAction);
  CHECK(group_elements(kA2).size() == 6);
  CHECK(group_elements(kSign).size() == 2);
}

TEST_CASE("subspaces") {
  const auto diag = Subspace::span(2, {qv({1, 1})});
  const auto anti = Subspace::span(2, {qv({1, -1})});
  CHECK(diag.dim() == 1);
  CHECK(diag.contains(qv({3, 3})));
  CHECK_FALSE(diag.contains(qv({1, 0})));
  CHECK(sum(diag, anti) == Subspace::whole(2));
  CHECK(intersection(diag, anti).dim() == 0);
  CHECK(intersection(diag, Subspace::whole(2)) == diag);
  CHECK(fixed_space(kSwap) == diag);
  CHECK(fixed_space(kA2).dim() == 0);
  CHECK(is_invariant(kSwap, anti));
  CHECK_FALSE(is_invariant(kSwap, Subspace::span(2, {qv({1, 0})})));
  CHECK(kernel(to_rational({{1, 1}})).size() == 1);
  CHECK(rref(to_rational({{2, 4}, {1, 2}})) == QMatrix{qv({1, 2})});
}

TEST_CASE("finite Weyl criterion and normalizer directions") {
  const auto anti = Subspace::span(2, {qv({1, -1})});
  CHECK_FALSE(finite_weyl_criterion(kSwap, anti));
  CHECK(finite_weyl_criterion(kSwap, Subspace::whole(2)));
  CHECK(finite_weyl_criterion(kA2, Subspace(2)));
  CHECK(normalizer_directions(kSwap, anti) == Subspace::whole(2));
  CHECK(normalizer_directions(trivial_action(2), Subspace(2)) == Subspace::whole(2));
  const auto fixed = fixed_space(kSwap);
  CHECK(normalizer_directions(kSwap, fixed) == fixed);
  CHECK(error_name([] { finite_weyl_criterion(kSwap, Subspace::span(2, {qv({1, 0})})); }) == errors::kNotInvariant);
  CHECK(error_name([] { normalizer_directions(kSwap, Subspace::span(2, {qv({0, 1})})); }) == errors::kNotInvariant);
}
