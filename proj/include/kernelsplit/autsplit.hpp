#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kernelsplit/complement.hpp"
#include "kernelsplit/config.hpp"
#include "kernelsplit/perm_group.hpp"

namespace ks {

// One Inn-coset of the automorphism group.
struct OuterClass {
  std::uint32_t id = 0;             // scan index; 0 is the trivial class
  std::string label;                // "o0", "o1", ...
  Perm representative;              // automorphism, as a permutation of
                                    // element indices of the base group
  std::uint64_t order_in_out = 1;   // order of the class in the outer group
};

// The automorphism group of a group F, acting on F's element indices, with
// the inner subgroup and the outer coset structure worked out.
struct AutData {
  PermGroup base_group;       // F in its original action
  ElementTablePtr table;      // canonical enumeration of F
  PermGroup aut;              // Aut(F), degree |F|
  PermGroup inn;              // Inn(F) <= aut
  std::uint64_t out_order = 1;
  std::vector<OuterClass> out_classes;
  // out_mult[c1][c2] = class of representative(c1) * representative(c2).
  std::vector<std::vector<std::uint32_t>> out_mult;
  // Class labels plus aliases ("s" when |Out| = 2; "s"/"p"/"m" for the
  // Klein-four outer group pattern, ranked by minimal coset element order).
  std::map<std::string, std::uint32_t> labels;

  std::uint32_t out_class_of(const Perm& automorphism) const;
  std::uint32_t out_mul(std::uint32_t c1, std::uint32_t c2) const {
    return out_mult[c1][c2];
  }
  std::uint32_t resolve_label(const std::string& label) const;
};

// Backtracking search over images of a small generating set; every returned
// automorphism is verified against the full multiplication table.
AutData automorphism_group(const PermGroup& f, CancelToken cancel = {});

std::vector<OuterClass> outer_classes(const AutData& aut);

struct AutSplitResult {
  bool split = false;
  std::vector<Perm> complement_generators;
  SearchCertificate certificate;
};

// Whether Inn(F) has a complement in Aut(F).
AutSplitResult is_aut_split(const AutData& aut, CancelToken cancel = {});

// Minimum element order over the coset representative * Inn (exhaustive).
std::uint64_t min_order_in_coset(const AutData& aut, const OuterClass& cls);

// For a base group acting on two disjoint copies of one factor: the outer
// class whose automorphisms exchange the two factor subgroups, if any.
std::optional<std::uint32_t> factor_swapping_class(const AutData& aut,
                                                   const PermGroup& left_factor,
                                                   const PermGroup& right_factor);

}  // namespace ks
