#include <doctest.h>

#include "prism/dispersion.hpp"
#include "prism/error.hpp"
#include "prism/fixtures.hpp"
#include "prism/oracle/oracles.hpp"
#include "prism/priestley.hpp"
#include "support.hpp"

#include <set>

using namespace prism;

namespace {

std::set<std::string> names_of(const FlaggedPriestley& p, const Bits& b) {
  std::set<std::string> out;
  for_each_bit(b, [&](std::size_t i) { out.insert(p.name(i)); });
  return out;
}

std::set<std::vector<std::string>> opens_by_name(const FiniteTopSpace& s) {
  std::set<std::vector<std::string>> out;
  for (const auto& o : s.opens()) {
    std::vector<std::string> names;
    for_each_bit(o, [&](std::size_t i) { names.push_back(s.points()[i]); });
    out.insert(names);
  }
  return out;
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

TEST_CASE("specialization order of small spaces") {
  const auto s = fixtures::sierpinski();
  const auto r = specialization_order(s);
  // points sorted: a, b
  CHECK(r(1, 0));
  CHECK_FALSE(r(0, 1));

  const auto d = specialization_order(fixtures::discrete(2));
  CHECK(d == Relation([] {
          Relation id(2);
          id.set(0, 0);
          id.set(1, 1);
          return id;
        }()));

  const auto v = priestley_of_spectral(fixtures::two_primes());
  const auto c1 = v.index_of("c1"), c2 = v.index_of("c2"), g = v.index_of("g");
  CHECK(v.leq(c1, g));
  CHECK(v.leq(c2, g));
  CHECK_FALSE(v.leq(c1, c2));
  CHECK_FALSE(v.leq(c2, c1));
}

TEST_CASE("non-T0 and malformed topologies are rejected") {
  const auto indiscrete = FiniteTopSpace::create({"a", "b"}, {{}, {"a", "b"}});
  CHECK(error_name([&] { specialization_order(indiscrete); }) == errors::kNotT0);
  CHECK(error_name([] { FiniteTopSpace::create({"a", "b"}, {{}, {"a"}, {"b"}, {"a", "b"}, {"c"}}); }) ==
        errors::kUnknownPoint);
  CHECK(error_name([] { FiniteTopSpace::create({"a", "b", "c"}, {{}, {"a"}, {"b"}, {"a", "b", "c"}}); }) ==
        errors::kInvalidSpace);
  CHECK(error_name([] { FiniteTopSpace::create({"a", "b"}, {{"a"}, {"a", "b"}}); }) == errors::kInvalidSpace);
}

TEST_CASE("spectral and Priestley sides correspond") {
  CHECK(priestley_of_spectral(fixtures::sierpinski()) == FinitePriestley::create({"a", "b"}, {{"b", "a"}}));
  CHECK(priestley_of_spectral(fixtures::discrete(3)) == FinitePriestley::create({"p0", "p1", "p2"}, {}));
  CHECK(priestley_of_spectral(fixtures::two_primes()) == fixtures::v_poset());

  using Opens = std::set<std::vector<std::string>>;
  CHECK(opens_by_name(spectral_of_priestley(FinitePriestley::create({"a", "b"}, {{"b", "a"}}))) ==
        Opens{{}, {"a"}, {"a", "b"}});
  CHECK(spectral_of_priestley(fixtures::antichain(2)).opens().size() == 4);
  CHECK(opens_by_name(spectral_of_priestley(fixtures::v_poset())) ==
        Opens{{}, {"g"}, {"c1", "g"}, {"c2", "g"}, {"c1", "c2", "g"}});

  SUBCASE("round trip through the specialization order") {
    for (const auto& space : {fixtures::sierpinski(), fixtures::two_primes(), fixtures::discrete(3)}) {
      const auto back = spectral_of_priestley(priestley_of_spectral(space));
      CHECK(back.opens() == space.opens());
    }
    for (unsigned seed = 1; seed <= 20; ++seed) {
      const auto p = oracle::random_poset(6, seed);
      CHECK(priestley_of_spectral(spectral_of_priestley(p)) == p);
    }
  }
}

TEST_CASE("inverse") {
  CHECK(inverse(fixtures::nstar(2)) == fixtures::nstar(4));
  CHECK(inverse(fixtures::chain(2)) == FinitePriestley::create({"x0", "x1"}, {{"x1", "x0"}}));
  CHECK(inverse(fixtures::antichain(3)) == fixtures::antichain(3));
  for (unsigned k = 1; k <= 4; ++k) CHECK(inverse(inverse(fixtures::nstar(k))) == fixtures::nstar(k));
  for (unsigned seed = 1; seed <= 20; ++seed) {
    const auto p = oracle::random_poset(8, seed);
    CHECK(inverse(inverse(p)) == p);
  }
  const auto& o2 = testing::snapshot(GroupId::o2(), 3).space;
  CHECK(inverse(inverse(o2)) == o2);
}

TEST_CASE("down-set lattices") {
  CHECK(down_sets(fixtures::chain(2)).sets.size() == 3);
  CHECK(down_sets(fixtures::antichain(2)).sets.size() == 4);
  CHECK(down_sets(fixtures::v_poset()).sets.size() == 5);
  CHECK(up_sets(fixtures::v_poset()).sets.size() == 5);

  for (unsigned n = 0; n <= 12; n += 3)
    for (unsigned seed = 1; seed <= 4; ++seed) {
      const auto p = oracle::random_poset(n, 100 * n + seed, 0.25);
      const auto family = down_sets(p).sets;
      const std::set<Bits> all(family.begin(), family.end());
      CHECK(family == oracle::down_sets(p));
      for (const auto& a : family)
        for (const auto& b : family) {
          CHECK(all.count(a | b) == 1);
          CHECK(all.count(a & b) == 1);
        }
    }
}

TEST_CASE("clopen down-set classes") {
  const auto& circle = testing::snapshot(GroupId::circle(), 3).space;
  const auto classes = clopen_down_sets(circle);
  REQUIRE(classes.size() == 2);
  CHECK(classes[0].required.none());
  CHECK(names_of(circle, classes[0].allowed) == std::set<std::string>{"C(1)", "C(2)", "C(3)"});
  CHECK(classes[0].tags == std::vector<FamilyTag>{FamilyTag::finite});
  CHECK(classes[1].required.all());
  CHECK(classes[1].tags == std::vector<FamilyTag>{FamilyTag::cofinite});

  SUBCASE("dihedral part of O(2)") {
    const auto& o2 = testing::snapshot(GroupId::o2(), 3).space;
    Bits keep(o2.size());
    for (auto n : {"D(2)", "D(4)", "D(6)", "G"}) keep.set(o2.index_of(n));
    const auto dihedral = clopen_piece(o2, keep);
    const auto c = clopen_down_sets(dihedral);
    REQUIRE(c.size() == 2);
    CHECK(c[0].required.none());
    CHECK(names_of(dihedral, c[0].allowed) == std::set<std::string>{"D(2)", "D(4)", "D(6)"});
    CHECK(c[0].tags == std::vector<FamilyTag>{FamilyTag::finite});
    CHECK(names_of(dihedral, c[1].required) == std::set<std::string>{"G"});
    CHECK(c[1].tags == std::vector<FamilyTag>{FamilyTag::cofinite});
  }

  SUBCASE("finite posets give every down-set") {
    const auto p = to_flagged(fixtures::v_poset());
    const auto c = clopen_down_sets(p);
    CHECK(c.size() >= 1);
    std::set<Bits> covered;
    for (const auto& cls : c)
      for (const auto& d : down_sets(fixtures::v_poset()).sets)
        if ((cls.required & ~d).none() && (d & ~cls.allowed).none()) covered.insert(d);
    CHECK(covered.size() == down_sets(fixtures::v_poset()).sets.size());
  }

  SUBCASE("instances are clopen down-sets") {
    std::vector<FlaggedPriestley> spaces;
    for (unsigned k = 1; k <= 4; ++k) spaces.push_back(fixtures::nstar(k));
    for (const auto& g : {GroupId::circle(), GroupId::o2(), GroupId::so3()}) spaces.push_back(testing::snapshot(g, 2).space);
    for (const auto& p : spaces) {
      for (const auto& cls : clopen_down_sets(p)) {
        for (const Bits& concrete : {cls.required, cls.allowed}) {
          if (!(p.down_closure(concrete) == concrete)) continue;
          // A finite tag also covers the empty member part; try both when members can be added.
          for (const bool grow : {false, true}) {
            SymbolicSet s{concrete, {}};
            for (std::size_t f = 0; f < p.families().size(); ++f) {
              const auto& fam = p.families()[f];
              MemberPart part = MemberPart::none;
              if ((concrete & fam.member_lt).any()) {
                part = MemberPart::all;
              } else if (cls.tags[f] == FamilyTag::cofinite) {
                part = fam.member_order == MemberOrder::ascending_chain ? MemberPart::all : MemberPart::cofinite;
              } else if (grow && (fam.member_gt & ~concrete).none() && fam.member_order != MemberOrder::descending_chain) {
                part = MemberPart::finite;
              }
              s.members.push_back(part);
            }
            CHECK_MESSAGE(is_down_set(p, s), describe(p, s));
            CHECK_MESSAGE(is_closed(p, s), describe(p, s));
            CHECK_MESSAGE(is_closed(p, complement(s)), describe(p, s));
          }
        }
      }
    }
  }

  CHECK(error_name([&] { clopen_down_sets(testing::snapshot(GroupId::torus(2), 3).space, 4); }) == errors::kTooLarge);
}

TEST_CASE("symbolic sets") {
  const auto& circle = testing::snapshot(GroupId::circle(), 2).space;
  const auto g = circle.index_of("G");
  SymbolicSet tail = empty_set(circle);
  tail.members[0] = MemberPart::cofinite;
  CHECK_FALSE(is_closed(circle, tail));
  tail.concrete.set(g);
  CHECK(is_closed(circle, tail));
  CHECK_FALSE(is_down_set(circle, tail));
  CHECK(is_up_set(circle, tail));
  CHECK(describe(circle, tail) == "{G} + cofinite(C(*))");
  CHECK(complement(complement(tail)) == tail);
  CHECK(complement(empty_set(circle)) == whole_space(circle));
}

TEST_CASE("Thomason points and Noetherianity") {
  const auto two = fixtures::nstar(2);
  const auto t = thomason_points(two);
  CHECK(names_of(two, t.concrete) == std::set<std::string>{"1", "2", "3"});
  CHECK(t.families == std::vector<std::size_t>{0});
  for (unsigned k : {3u, 4u}) {
    const auto p = fixtures::nstar(k);
    const auto tk = thomason_points(p);
    CHECK(tk.concrete.none());
    CHECK(tk.families.empty());
  }

  CHECK(is_noetherian(testing::snapshot(GroupId::circle(), 3).space));
  CHECK_FALSE(is_noetherian(testing::snapshot(GroupId::o2(), 3).space));
  CHECK(is_noetherian(fixtures::v_poset()));

  SUBCASE("Thomason points are minimal") {
    std::vector<FlaggedPriestley> spaces;
    for (unsigned k = 1; k <= 4; ++k) spaces.push_back(fixtures::nstar(k));
    for (const auto& g : fixtures::catalog()) spaces.push_back(testing::snapshot(g, 2).space);
    for (const auto& p : spaces) CHECK((thomason_points(p).concrete & ~minimal_points(p)).none());
  }
}

TEST_CASE("flagged construction checks") {
  CHECK(error_name([] { FlaggedPriestley::create({"a", "a"}, {}, {}); }) == errors::kInvalidSpace);
  CHECK(error_name([] { FlaggedPriestley::create({"a", "b"}, {{"a", "b"}, {"b", "a"}}, {}); }) ==
        errors::kInvalidSpace);
  CHECK(error_name([] { FlaggedPriestley::create({"a"}, {{"a", "z"}}, {}); }) == errors::kUnknownPoint);
  FamilySpec both;
  both.id = "f";
  both.limit = "a";
  both.member_lt = {"a"};
  both.member_gt = {"a"};
  CHECK(error_name([&] { FlaggedPriestley::create({"a"}, {}, {both}); }) == errors::kInvalidSpace);
  FamilySpec dup;
  dup.id = "f";
  dup.limit = "a";
  CHECK(error_name([&] { FlaggedPriestley::create({"a"}, {}, {dup, dup}); }) == errors::kInvalidSpace);

  SUBCASE("member bounds are closed") {
    FamilySpec f;
    f.id = "f";
    f.limit = "b";
    f.member_lt = {"b"};
    f.member_gt = {"c"};
    const auto p = FlaggedPriestley::create({"a", "b", "c", "d"}, {{"b", "a"}, {"d", "c"}}, {f});
    const auto& fam = p.families()[0];
    CHECK(names_of(p, fam.member_lt) == std::set<std::string>{"a", "b"});
    CHECK(names_of(p, fam.member_gt) == std::set<std::string>{"c", "d"});
  }
}
