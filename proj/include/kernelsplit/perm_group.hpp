#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "kernelsplit/perm.hpp"

namespace ks {

// Finite permutation group with a deterministic base-and-strong-generating-set
// stabilizer chain.  Base points are chosen as the lowest moved point at each
// level, so identical generator lists always produce identical chains.
//
// Groups are immutable once fully constructed; extend_with() exists for the
// construction phase of incremental searches.
class PermGroup {
 public:
  using Pt = Perm::Pt;

  explicit PermGroup(unsigned degree);  // trivial group
  // seed_base pre-pins the first base points (used by searches that need
  // membership tests with prescribed base images).  Redundant points are kept.
  PermGroup(unsigned degree, std::vector<Perm> generators,
            std::vector<Pt> seed_base = {});
  static PermGroup from_generators(std::vector<Perm> generators);

  unsigned degree() const { return degree_; }
  std::uint64_t order() const;
  const std::vector<Perm>& generators() const { return gens_; }

  bool contains(const Perm& g) const;
  bool is_trivial() const { return order() == 1; }
  bool is_abelian() const;
  bool is_subgroup_of(const PermGroup& super) const;

  std::vector<Pt> base() const;
  // Existence (and a witness) of a group element g with g(base[i]) ==
  // targets[i] for every i < targets.size().
  std::optional<Perm> element_with_base_images(std::span<const Pt> targets) const;

  // Adds one generator and repairs the chain.  No-op when already a member.
  void extend_with(const Perm& g);

  // Streams every element exactly once, in a fixed chain-derived order.
  // fn returns false to stop early.  Returns false if stopped early.
  bool for_each_element(const std::function<bool(const Perm&)>& fn) const;

 private:
  struct Level {
    Pt beta = 0;
    std::vector<Perm> gens;          // strong generators fixing all earlier betas
    std::vector<std::int32_t> pos;   // point -> orbit position, or -1
    std::vector<Pt> orbit;           // discovery order; orbit[0] == beta
    std::vector<Perm> transversal;   // transversal[k](beta) == orbit[k]
  };

  void append_level(Pt beta);
  void recompute_orbit(std::size_t li);
  void complete_level(std::size_t li);
  std::pair<Perm, std::size_t> sift(Perm g, std::size_t from) const;

  unsigned degree_;
  std::vector<Perm> gens_;
  std::vector<Level> levels_;
};

// Element table: a full, canonically indexed enumeration of a group of order
// at most max_enum_order().  Index 0 is the identity; elements are sorted by
// their image vectors, so indices are stable across runs.  Conjugacy classes
// and element orders are precomputed.
class ElementTable {
 public:
  static std::shared_ptr<const ElementTable> build(const PermGroup& g);

  std::uint32_t size() const { return static_cast<std::uint32_t>(elements_.size()); }
  unsigned degree() const { return degree_; }
  const Perm& element(std::uint32_t i) const { return elements_[i]; }
  const std::vector<Perm>& generators() const { return gens_; }
  std::uint32_t generator_index(std::uint32_t k) const { return gen_index_[k]; }

  std::optional<std::uint32_t> find(const Perm& p) const;
  std::uint32_t index_of(const Perm& p) const;  // throws on non-member

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t inv(std::uint32_t a) const { return inverse_[a]; }
  std::uint64_t element_order(std::uint32_t a) const { return order_[a]; }

  std::uint32_t class_count() const { return static_cast<std::uint32_t>(class_reps_.size()); }
  std::uint32_t class_of(std::uint32_t a) const { return class_id_[a]; }
  std::uint32_t class_rep(std::uint32_t c) const { return class_reps_[c]; }
  std::uint64_t class_size(std::uint32_t c) const { return class_sizes_[c]; }

  // Cayley BFS structure over the group generators (for building maps that
  // must respect multiplication): bfs_order lists element indices starting at
  // the identity; every later element e satisfies
  //   e == parent(e) * gens[gen_of(e)].
  const std::vector<std::uint32_t>& bfs_order() const { return bfs_order_; }
  std::uint32_t bfs_parent(std::uint32_t e) const { return bfs_parent_[e]; }
  std::uint32_t bfs_gen(std::uint32_t e) const { return bfs_gen_[e]; }

  // The permutation of element indices induced by conjugation with g
  // (an element of the group): i -> index(g * e_i * g^-1).
  Perm conjugation_map(const Perm& g) const;
  // Index map of left multiplication by element a: i -> index(e_a * e_i).
  Perm left_multiplication_map(std::uint32_t a) const;

 private:
  ElementTable() = default;

  unsigned degree_ = 0;
  std::vector<Perm> gens_;
  std::vector<Perm> elements_;
  std::unordered_map<Perm, std::uint32_t, PermHash> index_;
  std::vector<std::uint32_t> gen_index_;
  std::vector<std::uint32_t> inverse_;
  std::vector<std::uint64_t> order_;
  std::vector<std::uint32_t> class_id_;
  std::vector<std::uint32_t> class_reps_;
  std::vector<std::uint64_t> class_sizes_;
  std::vector<std::uint32_t> bfs_order_;
  std::vector<std::uint32_t> bfs_parent_;
  std::vector<std::uint32_t> bfs_gen_;
};

using ElementTablePtr = std::shared_ptr<const ElementTable>;

// Constructs a validated group from a nonempty generator list (degrees must
// agree; Perm construction has already enforced bijectivity).
PermGroup group_from_generators(std::vector<Perm> generators);

}  // namespace ks
