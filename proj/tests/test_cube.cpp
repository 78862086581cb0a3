#include <doctest.h>

#include "prism/cube.hpp"
#include "prism/dispersion.hpp"
#include "prism/error.hpp"
#include "prism/fixtures.hpp"
#include "prism/oracle/oracles.hpp"
#include "prism/report.hpp"
#include "support.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>

using namespace prism;

TEST_CASE("isomax dimensions") {
  CHECK(isomax_dim(Subset::of({2})) == 2);
  CHECK(isomax_dim(Subset::of({0, 1, 2})) == 0);
  CHECK(isomax_dim(Subset::of({0, 2})) == 1);
  CHECK(isomax_dim(Subset::of({0})) == 0);
  CHECK(cube_shape(0) == "[0]");
  CHECK(cube_shape(2) == "[1] × [1]");
  std::vector<std::string> members;
  for (const auto& m : isomax_members(Subset::of({2}))) members.push_back(m.str());
  CHECK(members == std::vector<std::string>{"2", "02", "12", "012"});
  const auto r = oracle::run_suite("isomax");
  CHECK(r.checks == 247);
  CHECK(r.mismatches.empty());
}

TEST_CASE("edge kinds") {
  CHECK(classify_edge(Subset::of({0, 2}), 1, 2) == EdgeKind{EdgeKindTag::projection, 1, 0});
  CHECK(classify_edge(Subset::of({0}), 1, 2) == EdgeKind{EdgeKindTag::diagonal, 1, 0});
  CHECK(classify_edge(Subset::of({0}), 2, 2) == EdgeKind{EdgeKindTag::laxness, 2, 1});
  CHECK_THROWS_AS(classify_edge(Subset::of({0}), 0, 2), std::invalid_argument);
  CHECK_THROWS_AS(classify_edge(Subset::of({0}), 3, 2), std::invalid_argument);

  for (unsigned n = 0; n <= 5; ++n)
    for (const auto& [from, to] : cube_covers(n)) {
      const unsigned j = static_cast<unsigned>(__builtin_ctz(to.mask & ~from.mask));
      const auto k = classify_edge(from, j, n);
      const int delta = static_cast<int>(isomax_dim(to)) - static_cast<int>(isomax_dim(from));
      switch (k.tag) {
        case EdgeKindTag::projection: CHECK(delta == -1); break;
        case EdgeKindTag::diagonal: CHECK(delta == 0); break;
        case EdgeKindTag::laxness: CHECK(delta == static_cast<int>(k.zeta)); break;
      }
    }
}

TEST_CASE("punctured cubes and schedules") {
  CHECK(punctured_cube(1).size() == 3);
  CHECK(punctured_cube(2).size() == 7);
  CHECK(punctured_cube(3).size() == 15);
  std::vector<std::string> order;
  for (const auto& s : punctured_cube(2)) order.push_back(s.str());
  CHECK(order == std::vector<std::string>{"0", "1", "2", "01", "02", "12", "012"});
  CHECK(cube_covers(2).size() == 9);

  CHECK(recollement_schedule(0).empty());
  const auto one = recollement_schedule(1);
  REQUIRE(one.size() == 1);
  CHECK(one[0].transition == "t_0");
  CHECK(one[0].residual == std::vector<unsigned>{1});
  const auto two = recollement_schedule(2);
  REQUIRE(two.size() == 2);
  CHECK(two[1].transition == "t_1");
  CHECK(two[1].label == "Γ_{P_2} ∘ t_1 : T_1 → T_2");
}

TEST_CASE("group decompositions") {
  const auto circle = build_decomposition(GroupId::circle(), 3);
  CHECK(circle.n == 1);
  CHECK(circle.nodes.size() == 3);
  CHECK(circle.edges.size() == 2);
  REQUIRE(circle.stratum_labels.size() == 2);
  CHECK(circle.stratum_labels[0] == std::vector<std::string>{"Λ_C(1) D(H^*(B SO(2))[1])", "Λ_C(2) D(H^*(B SO(2))[1])",
                                                             "Λ_C(3) D(H^*(B SO(2))[1])", "⋯ (family C(*))"});
  CHECK(circle.stratum_labels[1] == std::vector<std::string>{"Λ_G D(H^*(B 1)[1])"});

  const auto finite = build_decomposition(GroupId(fixtures::symmetric3()), 2);
  CHECK(finite.nodes.size() == 1);
  CHECK(finite.edges.empty());

  const auto t2 = build_decomposition(GroupId::torus(2), 2);
  REQUIRE(t2.nodes.size() == 7);
  std::map<std::string, unsigned> dims;
  for (const auto& node : t2.nodes) dims[node.subset.str()] = node.cube_dim;
  CHECK(dims == std::map<std::string, unsigned>{{"0", 0}, {"1", 1}, {"2", 2}, {"01", 0}, {"02", 1}, {"12", 1}, {"012", 0}});

  try {
    build_decomposition(fixtures::nstar(3));
    FAIL("expected NotDispersible");
  } catch (const Error& e) {
    CHECK(e.name() == errors::kNotDispersible);
  }
}

TEST_CASE("diagram invariants over dispersible spaces") {
  std::vector<FlaggedPriestley> spaces{fixtures::nstar(1), fixtures::nstar(2)};
  for (const auto& g : fixtures::catalog()) spaces.push_back(testing::snapshot(g, 2).space);
  for (const auto& p : spaces) {
    const auto d = build_decomposition(p);
    CHECK(d.nodes.size() == (std::size_t{2} << d.n) - 1);
    for (const auto& node : d.nodes) {
      CHECK(node.cube_dim == isomax_dim(node.subset));
      CHECK(node.stratum == node.subset.max());
    }
    std::vector<std::string> labels;
    for (const auto& level : d.stratum_labels)
      for (const auto& l : level) labels.push_back(l);
    std::vector<std::string> expected;
    for (const auto& name : p.points()) expected.push_back("Λ_" + name);
    for (const auto& fam : p.families()) expected.push_back("⋯ (family " + fam.id + ")");
    std::sort(labels.begin(), labels.end());
    std::sort(expected.begin(), expected.end());
    CHECK(labels == expected);
  }
}

TEST_CASE("diagram renderings") {
  const auto d = build_decomposition(GroupId::torus(2), 2);
  const auto j = nlohmann::json::parse(to_json(d));
  CHECK(j["schema"] == "cube/v1");
  CHECK(j["n"] == 2);
  CHECK(j["nodes"].size() == 7);
  CHECK(j["edges"].size() == 9);
  bool saw_lax = false;
  for (const auto& e : j["edges"])
    if (e["kind"] == "laxness") {
      saw_lax = true;
      CHECK(e.contains("zeta"));
    }
  CHECK(saw_lax);

  const auto dot = to_dot(d);
  CHECK(dot.rfind("digraph cube {", 0) == 0);
  CHECK(dot.find("\"φ=012\"") != std::string::npos);
  CHECK(to_dot(d) == dot);
}

TEST_CASE("isomax table golden file") {
  CHECK(render_isomax(2, isomax_table(2), Format::text) == testing::slurp(testing::source_path("tests/golden/isomax2.txt")));
}
