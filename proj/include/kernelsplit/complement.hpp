#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kernelsplit/config.hpp"
#include "kernelsplit/group_ops.hpp"
#include "kernelsplit/perm_group.hpp"

namespace ks {

// Evidence that a complement search was exhaustive: how the quotient was
// generated, how many candidates each tuple position admitted after order
// filtering (position 0 counted up to conjugacy by the normal subgroup),
// and how many tuples were examined.
struct SearchCertificate {
  std::vector<std::uint64_t> quotient_gen_orders;
  std::vector<std::uint64_t> candidate_counts;
  std::uint64_t tuples_examined = 0;
  bool exhausted = false;  // true when the search space was fully covered
};

struct ComplementResult {
  bool found = false;
  std::vector<Perm> generators;  // complement generators when found
  PermGroup complement;          // trivial group when not found
  SearchCertificate certificate;
};

// Searches for a complement to the normal subgroup n in e: a subgroup C with
// C ∩ n = 1 and |C| = |e:n|.  The quotient index must be at most
// kMaxQuotientIndex.  One fixed minimal generating tuple of the quotient is
// targeted; this loses no generality because any complement is generated by
// its unique lifts of that tuple, and position-0 candidates are only reduced
// up to n-conjugacy, which replaces a complement by a conjugate complement.
ComplementResult find_complement(const PermGroup& e, const PermGroup& n,
                                 CancelToken cancel = {});

// Independent pointwise checks on a claimed complement: order, trivial
// intersection, and that products of coset representatives cover e.
bool verify_complement(const PermGroup& e, const PermGroup& n,
                       const PermGroup& complement);

}  // namespace ks
