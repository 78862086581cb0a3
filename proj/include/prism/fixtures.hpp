#pragma once

// Small named spaces used by the tests, the acceptance suite and the CLI.

#include "prism/liegroups.hpp"
#include "prism/priestley.hpp"

#include <string>

namespace prism::fixtures {

/// Flagged model of N ∪ {∞} with the k-th of the four example orders:
/// 1 discrete, 2 every n below ∞, 3 reversed naturals with ∞ at the bottom,
/// 4 the inverse of 2. Concrete points "1".."samples" and "inf"; the family
/// "n" carries the rest.
FlaggedPriestley nstar(unsigned k, unsigned samples = 3);

FiniteTopSpace sierpinski();
/// Two closed points under one generic point.
FiniteTopSpace two_primes();
FiniteTopSpace discrete(unsigned n);

FinitePriestley chain(unsigned n);
FinitePriestley antichain(unsigned n);
FinitePriestley v_poset();

/// Subgroup classes of the symmetric group on three letters.
FiniteGroup symmetric3();

/// Groups exercised by the acceptance and property suites.
std::vector<GroupId> catalog();
/// Snapshot bounds used for `g` in those suites.
std::vector<unsigned> catalog_bounds(const GroupId& g);

/// "nstar:<k>" builtins; nothing for other strings.
std::optional<FlaggedPriestley> builtin_space(const std::string& spec);

}  // namespace prism::fixtures
