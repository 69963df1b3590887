#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kernelsplit/autsplit.hpp"
#include "kernelsplit/config.hpp"
#include "kernelsplit/perm_group.hpp"

namespace ks {

// A normal subgroup together with its sorted element indices in the canonical
// element table of the ambient group.
struct NormalSubgroup {
  PermGroup group;
  std::vector<std::uint32_t> members;  // ascending element indices

  std::uint64_t order() const { return members.size(); }
};

// All normal subgroups, sorted by (order, lexicographic member list).
// Computed as the join closure of the normal closures of conjugacy-class
// representatives: every normal subgroup is a union of classes and therefore
// a join of such closures.
std::vector<NormalSubgroup> normal_subgroups(const PermGroup& g,
                                             CancelToken cancel = {});

// The normal subgroups stable under every automorphism, same sort order.
std::vector<NormalSubgroup> characteristic_subgroups(const AutData& aut,
                                                     CancelToken cancel = {});

// True when the only characteristic subgroups are the trivial group and the
// whole group; the trivial group itself does not qualify.
bool is_characteristically_simple(const AutData& aut, CancelToken cancel = {});

// Which maximal proper normal subgroup to descend through at each step.
// Both choices produce a valid composition series; exposing two lets callers
// confirm that the factor multiset does not depend on the path.
enum class SeriesStrategy {
  MaxOrderLexMin,  // largest order, ties by lexicographically least members
  MinOrderLexMax,  // smallest order, ties by lexicographically greatest members
};

enum class SimpleFamily { Cyclic, Alternating, PSL2, Unknown };

struct SimpleId {
  SimpleFamily family = SimpleFamily::Unknown;
  std::uint64_t parameter = 0;  // p for Cyclic, n for Alternating, q for PSL2
  std::uint64_t order = 0;

  std::string name() const;
  friend bool operator==(const SimpleId&, const SimpleId&) = default;
};

struct CompositionSeries {
  // g = subgroups[0] > subgroups[1] > ... > subgroups.back() = trivial,
  // each term a maximal proper normal subgroup of its predecessor.
  std::vector<PermGroup> subgroups;
  // Factors listed bottom-up: factors[0] is the quotient of the last
  // nontrivial term by the trivial group.
  std::vector<SimpleId> factors;
};

CompositionSeries composition_factors(
    const PermGroup& g, SeriesStrategy strategy = SeriesStrategy::MaxOrderLexMin,
    CancelToken cancel = {});

// Identifies a simple group by order plus conjugacy-class fingerprint against
// reference constructions; Unknown when nothing matches.
SimpleId identify_simple(const PermGroup& g);

// True when no composition factor is cyclic. The trivial group qualifies
// vacuously.
bool is_anti_solvable(const PermGroup& g, CancelToken cancel = {});

}  // namespace ks
