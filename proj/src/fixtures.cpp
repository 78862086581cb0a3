#include "prism/fixtures.hpp"

#include "prism/error.hpp"

namespace prism::fixtures {

FlaggedPriestley nstar(unsigned k, unsigned samples) {
  if (k < 1 || k > 4) fail(errors::kInvalidSpace, "nstar order must be 1..4");
  std::vector<std::string> points{"inf"};
  std::vector<std::string> concrete;
  for (unsigned n = 1; n <= samples; ++n) {
    points.push_back(std::to_string(n));
    concrete.push_back(std::to_string(n));
  }
  FamilySpec fam;
  fam.id = "n";
  fam.limit = "inf";
  fam.samples = {std::to_string(samples + 1), std::to_string(samples + 2)};

  std::vector<OrderPair> order;
  switch (k) {
    case 1: break;
    case 2:
      for (const auto& c : concrete) order.emplace_back(c, "inf");
      fam.member_lt = {"inf"};
      break;
    case 3:
      for (unsigned n = 1; n < samples; ++n) order.emplace_back(std::to_string(n + 1), std::to_string(n));
      for (const auto& c : concrete) order.emplace_back("inf", c);
      fam.member_order = MemberOrder::descending_chain;
      fam.member_lt = concrete;
      fam.member_gt = {"inf"};
      break;
    case 4:
      for (const auto& c : concrete) order.emplace_back("inf", c);
      fam.member_gt = {"inf"};
      break;
  }
  return FlaggedPriestley::create(points, order, {fam});
}

FiniteTopSpace sierpinski() { return FiniteTopSpace::create({"a", "b"}, {{}, {"a"}, {"a", "b"}}); }

FiniteTopSpace two_primes() {
  return FiniteTopSpace::create({"g", "c1", "c2"}, {{}, {"g"}, {"g", "c1"}, {"g", "c2"}, {"g", "c1", "c2"}});
}

FiniteTopSpace discrete(unsigned n) {
  std::vector<std::string> pts;
  for (unsigned i = 0; i < n; ++i) pts.push_back("p" + std::to_string(i));
  std::vector<std::vector<std::string>> opens;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    std::vector<std::string> o;
    for (unsigned i = 0; i < n; ++i)
      if ((m >> i) & 1) o.push_back(pts[i]);
    opens.push_back(std::move(o));
  }
  return FiniteTopSpace::create(pts, opens);
}

FinitePriestley chain(unsigned n) {
  std::vector<std::string> pts;
  std::vector<OrderPair> order;
  for (unsigned i = 0; i < n; ++i) {
    pts.push_back("x" + std::to_string(i));
    if (i) order.emplace_back(pts[i - 1], pts[i]);
  }
  return FinitePriestley::create(pts, order);
}

FinitePriestley antichain(unsigned n) {
  std::vector<std::string> pts;
  for (unsigned i = 0; i < n; ++i) pts.push_back("x" + std::to_string(i));
  return FinitePriestley::create(pts, {});
}

FinitePriestley v_poset() { return FinitePriestley::create({"g", "c1", "c2"}, {{"c1", "g"}, {"c2", "g"}}); }

FiniteGroup symmetric3() {
  return FiniteGroup{"S3", {{"1", 1, 6}, {"C2", 2, 1}, {"C3", 3, 2}, {"S3", 6, 1}}};
}

std::vector<GroupId> catalog() {
  return {GroupId::trivial_group(), GroupId(symmetric3()), GroupId::circle(), GroupId::torus(1),
          GroupId::torus(2),        GroupId::torus(3),       GroupId::o2(),     GroupId::so3()};
}

std::vector<unsigned> catalog_bounds(const GroupId&) { return {2, 3, 4}; }

std::optional<FlaggedPriestley> builtin_space(const std::string& spec) {
  if (spec.rfind("nstar:", 0) != 0) return std::nullopt;
  const auto k = spec.substr(6);
  if (k.size() != 1 || k[0] < '1' || k[0] > '4') fail(errors::kInvalidSpace, "nstar order must be 1..4");
  return nstar(static_cast<unsigned>(k[0] - '0'));
}

}  // namespace prism::fixtures
