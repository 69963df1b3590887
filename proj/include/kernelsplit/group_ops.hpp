#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "kernelsplit/perm_group.hpp"

namespace ks {

// Homomorphism from a fully enumerated source group into permutations of a
// (possibly different) degree.  Images of arbitrary source elements are
// reconstructed from generator images along the enumeration's Cayley edges.
class GroupHom {
 public:
  GroupHom(ElementTablePtr source, unsigned target_degree,
           std::vector<Perm> gen_images);

  const ElementTable& source() const { return *source_; }
  ElementTablePtr source_ptr() const { return source_; }
  unsigned target_degree() const { return target_degree_; }
  const std::vector<Perm>& gen_images() const { return gen_images_; }

  const Perm& apply_index(std::uint32_t e) const { return images_[e]; }
  const Perm& apply(const Perm& g) const;

  // Exhaustively checks phi(a*b) == phi(a)*phi(b) over all Cayley edges,
  // which forces the homomorphism property on the whole source group.
  bool respects_products() const;

  std::vector<std::uint32_t> kernel_indices() const;
  PermGroup kernel_group() const;
  PermGroup image_group() const;

 private:
  ElementTablePtr source_;
  unsigned target_degree_;
  std::vector<Perm> gen_images_;
  std::vector<Perm> images_;  // by source element index
};

std::vector<std::pair<Perm, std::uint64_t>> conjugacy_classes(
    const PermGroup& g);

PermGroup center(const PermGroup& g);
PermGroup derived_subgroup(const PermGroup& g);

// Smallest normal subgroup of g containing the seeds.
PermGroup normal_closure(const PermGroup& g, const std::vector<Perm>& seeds);

bool is_normal_in(const PermGroup& sub, const PermGroup& g);

// Action of g on left cosets of a normal subgroup n, i.e. the regular
// action of the quotient g/n.  Coset 0 is n itself.
class CosetAction {
 public:
  CosetAction(PermGroup g, PermGroup n);

  const PermGroup& quotient() const { return quotient_; }
  const std::vector<Perm>& coset_reps() const { return reps_; }
  std::uint64_t index() const { return reps_.size(); }

  std::uint32_t coset_of(const Perm& g) const;
  // Image of an element of the parent group as a permutation of cosets.
  Perm project(const Perm& g) const;

 private:
  void push_rep(Perm r);
  std::int64_t lookup(const Perm& x) const;  // coset index, or -1

  PermGroup parent_;
  PermGroup normal_;
  std::vector<Perm> reps_;
  std::vector<Perm> rep_inv_;
  PermGroup quotient_;
  unsigned beta_ = 0;  // first point moved by the parent group
  std::vector<Perm::Pt> n_orbit_of_beta_;
  std::vector<std::vector<std::uint32_t>> buckets_;  // rep ids by image of beta_
};

}  // namespace ks
