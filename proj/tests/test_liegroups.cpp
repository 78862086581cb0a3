#include <doctest.h>

#include "prism/dispersion.hpp"
#include "prism/error.hpp"
#include "prism/fixtures.hpp"
#include "prism/liegroups.hpp"
#include "prism/snapshot.hpp"
#include "support.hpp"

#include <set>

using namespace prism;

namespace {

std::string error_name(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.name();
  }
  return "";
}

}  // namespace

TEST_CASE("group ids") {
  CHECK(GroupId::circle().str() == "circle");
  CHECK(GroupId::torus(2).str() == "torus:2");
  CHECK(GroupId::nsu3t().torus_rank() == 2);
  CHECK(GroupId::so3().torus_rank() == 1);
  CHECK(GroupId(fixtures::symmetric3()).str() == "finite:S3");
  CHECK(error_name([] { GroupId::torus(0); }) == errors::kInvalidGroup);
  CHECK(error_name([] { GroupId::torus(4); }) == errors::kInvalidGroup);
  CHECK(error_name([] { GroupId(FiniteGroup{"empty", {}}); }) == errors::kInvalidGroup);
  ToralSemidirect bad = std::get<ToralSemidirect>(GroupId::nsu3t().variant());
  bad.relations.push_back("ab");
  CHECK(error_name([&] { GroupId{bad}; }) == errors::kInvalidGroup);
}

TEST_CASE("subgroup keys") {
  const auto so3 = GroupId::so3();
  CHECK(error_name([&] { check_key(so3, keys::dihedral(GroupKind::so3, 2)); }) == errors::kKeyMismatch);
  CHECK(error_name([&] { check_key(GroupId::circle(), keys::so2(GroupKind::circle)); }) == errors::kKeyMismatch);
  CHECK(error_name([&] { check_key(GroupId::circle(), keys::cyclic(GroupKind::o2, 3)); }) == errors::kKeyMismatch);
  CHECK(key_name(so3, keys::dihedral(GroupKind::so3, 3)) == "D(6)");
  CHECK(key_name(so3, keys::exceptional(KeyTag::klein)) == "V4");
  CHECK(key_name(GroupId::o2(), keys::so2(GroupKind::o2)) == "SO2");
  CHECK(key_name(GroupId::torus(2), keys::lattice(Lattice::span(2, {{2, 0}}))) == "L[2 0; 0 0]");
  CHECK(key_name(GroupId::torus(2), keys::lattice(Lattice(2))) == "G");
}

TEST_CASE("cotoral order on the tables") {
  CHECK(cotoral_le(GroupId::circle(), keys::cyclic(GroupKind::circle, 6), keys::full(GroupKind::circle)));
  CHECK_FALSE(cotoral_le(GroupId::o2(), keys::dihedral(GroupKind::o2, 3), keys::full(GroupKind::o2)));
  CHECK(cotoral_le(GroupId::o2(), keys::cyclic(GroupKind::o2, 3), keys::so2(GroupKind::o2)));
  CHECK_FALSE(cotoral_le(GroupId::so3(), keys::cyclic(GroupKind::so3, 2), keys::full(GroupKind::so3)));
}

TEST_CASE("representation heights") {
  CHECK(height_rep(GroupId::so3(), keys::full(GroupKind::so3)) == 0);
  CHECK(height_rep(GroupId::torus(2), keys::lattice(Lattice(2))) == 2);
  CHECK(height_rep(GroupId::o2(), keys::so2(GroupKind::o2)) == 1);
  CHECK(height_rep(GroupId::o2(), keys::full(GroupKind::o2)) == 1);
  CHECK(height_rep(GroupId::nsu3t(), keys::full(GroupKind::semidirect)) == 1);
  CHECK(height_rep(GroupId::nsu3t(), keys::identity_torus()) == 2);
  CHECK(height_rep(GroupId::circle(), keys::cyclic(GroupKind::circle, 4)) == 0);
}

TEST_CASE("Weyl data") {
  const auto o2c5 = weyl_data(GroupId::o2(), keys::cyclic(GroupKind::o2, 5));
  CHECK(o2c5.identity == IdentityType::circle);
  CHECK(o2c5.component_order == 2);
  const auto so3e = weyl_data(GroupId::so3(), keys::cyclic(GroupKind::so3, 1));
  CHECK(so3e.identity == IdentityType::so3);
  CHECK(so3e.component_order == 1);
  const auto klein = weyl_data(GroupId::so3(), keys::exceptional(KeyTag::klein));
  CHECK(klein.identity == IdentityType::trivial);
  CHECK(klein.component == "S3");
  CHECK(klein.component_order == 6);
  CHECK(identity_name(o2c5) == "SO(2)");
  CHECK(identity_name(weyl_data(GroupId::torus(2), keys::lattice(Lattice::standard(2)))) == "T^2");

  CHECK(has_finite_weyl(GroupId::o2(), keys::dihedral(GroupKind::o2, 4)));
  CHECK_FALSE(has_finite_weyl(GroupId::o2(), keys::cyclic(GroupKind::o2, 4)));
  CHECK(has_finite_weyl(GroupId::nsu3t(), keys::full(GroupKind::semidirect)));

  for (const auto& g : fixtures::catalog()) {
    const auto& s = testing::snapshot(g, 3);
    for (const auto& k : s.keys)
      CHECK_MESSAGE(has_finite_weyl(g, k) == (weyl_data(g, k).identity == IdentityType::trivial), key_name(g, k));
  }
}

TEST_CASE("Burnside rank and Noetherian spectrum") {
  CHECK(phi_is_finite(GroupId::circle()));
  CHECK(burnside_rank(GroupId::circle()) == Height(1));
  CHECK(spectrum_is_noetherian(GroupId::circle()));
  CHECK_FALSE(phi_is_finite(GroupId::o2()));
  CHECK(burnside_rank(GroupId::o2()).is_infinite());
  CHECK_FALSE(spectrum_is_noetherian(GroupId::o2()));
  CHECK(burnside_rank(GroupId::trivial_group()) == Height(1));
  CHECK(spectrum_is_noetherian(GroupId::trivial_group()));
  CHECK(burnside_rank(GroupId(fixtures::symmetric3())) == Height(4));
  CHECK_FALSE(spectrum_is_noetherian(GroupId::nsu3t()));

  std::vector<GroupId> groups = fixtures::catalog();
  groups.push_back(GroupId::nsu3t());
  for (const auto& g : groups) {
    CHECK(burnside_rank(g).is_finite() == spectrum_is_noetherian(g));
    CHECK(spectrum_is_noetherian(g) == phi_is_finite(g));
  }
}

TEST_CASE("snapshots") {
  const auto& circle = testing::snapshot(GroupId::circle(), 3);
  CHECK(circle.space.points() == std::vector<std::string>{"C(1)", "C(2)", "C(3)", "G"});
  CHECK(circle.space.families().size() == 1);
  CHECK(circle.keys.size() == circle.space.size());

  const auto& so3 = testing::snapshot(GroupId::so3(), 4).space;
  const auto h = thomason_heights(so3);
  for (auto name : {"G", "A4", "S4", "A5", "V4"}) {
    const auto x = so3.index_of(name);
    CHECK(so3.up(x).count() == 1);
    CHECK(so3.down(x).count() == 1);
    CHECK(h.points[x] == Height(0));
    for (const auto& fam : so3.families()) {
      CHECK(fam.limit != x);
      CHECK_FALSE(fam.member_lt[x]);
      CHECK_FALSE(fam.member_gt[x]);
    }
  }

  const auto& s3 = testing::snapshot(GroupId(fixtures::symmetric3()), 2).space;
  CHECK(s3.size() == 4);
  CHECK(s3.families().empty());
  for (std::size_t x = 0; x < s3.size(); ++x) CHECK(s3.up(x).count() == 1);

  CHECK(error_name([] { flagged_snapshot(GroupId::nsu3t(), 2); }) == errors::kNotEnumerable);
}

TEST_CASE("catalog snapshots: order, dimensions and heights") {
  for (const auto& g : fixtures::catalog())
    for (auto b : fixtures::catalog_bounds(g)) {
      const auto& s = testing::snapshot(g, b);
      const auto h = thomason_heights(s.space);
      if (s.space.size() <= 200) {
        for (std::size_t a = 0; a < s.space.size(); ++a)
          for (std::size_t c = 0; c < s.space.size(); ++c)
            if (s.space.lt(a, c)) CHECK(subgroup_dim(g, s.keys[a]) < subgroup_dim(g, s.keys[c]));
      }
      for (std::size_t x = 0; x < s.space.size(); ++x)
        CHECK_MESSAGE(h.points[x] == Height(height_rep(g, s.keys[x])), g.str(), "@", b, " ", s.space.name(x));
      for (std::size_t f = 0; f < s.families.size(); ++f) {
        for (const auto& k : s.families[f].sample_keys) {
          check_key(g, k);
          CHECK(subgroup_dim(g, k) == s.families[f].member_dim);
          CHECK(height_rep(g, k) == h.families[f].value());
        }
      }
    }
}
