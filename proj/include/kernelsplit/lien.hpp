#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "kernelsplit/autsplit.hpp"
#include "kernelsplit/complement.hpp"
#include "kernelsplit/config.hpp"
#include "kernelsplit/group_ops.hpp"
#include "kernelsplit/perm_group.hpp"

namespace ks {

// A kernel datum (F, Γ, κ): a centerless finite group F, a finite group Γ,
// and a homomorphism κ: Γ → Out(F) given as a full element table.
struct Lien {
  std::shared_ptr<const AutData> aut;  // automorphism data of the kernel F
  PermGroup gamma;
  ElementTablePtr gamma_table;
  std::vector<std::uint32_t> kappa;  // Γ element index -> outer class id

  const PermGroup& f() const { return aut->base_group; }
};

// Validates the centerless requirement, |Γ| ≤ 24, and that kappa is a
// homomorphism sending the identity to the trivial class.
Lien make_lien(std::shared_ptr<const AutData> aut, const PermGroup& gamma,
               std::vector<std::uint32_t> kappa);
Lien make_lien(const PermGroup& f, const PermGroup& gamma,
               std::vector<std::uint32_t> kappa, CancelToken cancel = {});

// The canonical extension realizing a lien: pairs (a, γ) with a ∈ Aut(F) in
// the κ(γ) coset, acting faithfully on F's element indices (through a)
// followed by Γ's element indices (through left multiplication by γ).
struct Extension {
  PermGroup e;                // degree |F| + |Γ|
  GroupHom kernel_embedding;  // from F's element table into E, f ↦ (conj_f, 1)
  PermGroup f_image;          // the embedded copy of F inside E
  ElementTablePtr f_table;
  ElementTablePtr gamma_table;
  std::optional<GroupHom> section;  // from Γ's element table into E, when found

  // Structural projection: where an element sends the Γ-identity point.
  std::uint32_t gamma_index_of(const Perm& e_element) const;
  Perm gamma_element_of(const Perm& e_element) const;  // as Γ's natural perm
  // The automorphism component, as an index map over F's element table.
  Perm aut_component(const Perm& e_element) const;
  // Assembles the permutation for a valid pair (a, γ).
  Perm embed_pair(const Perm& aut_index_map, std::uint32_t gamma_index) const;
};

Extension pullback_extension(const Lien& lien, CancelToken cancel = {});

struct NeutralityResult {
  bool neutral = false;
  Extension extension;  // section filled in iff neutral
  SearchCertificate certificate;
};

// Searches the pullback extension for a complement of the embedded kernel;
// neutral means one exists, and the complement yields a verified section.
NeutralityResult is_neutral(const Lien& lien, CancelToken cancel = {});

// Independent pointwise check: section respects every product in Γ×Γ, the
// projection returns each γ, and the identity maps to the identity.
bool verify_section(const Extension& ext, const GroupHom& section);

// The induced lien on F/N for a characteristic subgroup N: representatives
// of κ(γ) are pushed through Aut(F) → Aut(F/N) and classified in Out(F/N).
Lien quotient_lien(const Lien& lien, const PermGroup& n,
                   CancelToken cancel = {});

struct TowerResult {
  bool split = false;
  Extension extension;  // with the composed section filled in
  std::optional<GroupHom> section;
  std::vector<std::string> trace;
};

// Splits the pullback extension along a characteristic tower: directly via an
// Out(F) → Aut(F) section when F is characteristically simple, otherwise by
// recursing on the quotient by the smallest proper nontrivial characteristic
// subgroup and on the induced kernel lien, then composing the sections.
// Verifies first that F is anti-solvable with aut-split composition factors
// and reports HypothesisFailed otherwise.
TowerResult split_via_tower(const Lien& lien, CancelToken cancel = {});

// For Γ = C₂ and |F| ≤ 720: enumerates all pairs (a, z) with a in the
// κ-designated coset, a² = conjugation by z, and a(z) = z — each defining an
// extension ⟨F, t⟩ with txt⁻¹ = a(x), t² = z — and counts them up to
// equivalence (an isomorphism fixing F and commuting with the projection).
std::uint64_t enumerate_extensions_order2_gamma(const Lien& lien,
                                                CancelToken cancel = {});

// Every homomorphism Γ → Out(F) as a full kappa table, enumerated by
// generator images and validated pointwise; ascending lexicographic order.
std::vector<std::vector<std::uint32_t>> all_kappa_tables(
    const AutData& aut, const ElementTable& gamma_table);

struct A6ClassFinding {
  std::string label;  // "s", "p", or "m"
  std::uint32_t class_id = 0;
  std::uint64_t min_order_in_coset = 0;
  bool neutral = false;
};

struct A6Report {
  std::vector<A6ClassFinding> classes;  // the three nontrivial outer classes
  bool involution_in_m_coset = true;    // expected false: minimum order is 4
  std::uint32_t non_neutral_class = 0;  // id of the unique non-neutral class
};

// Builds A₆ over Γ = C₂ for each nontrivial outer class and checks that
// exactly the involution-free class is non-neutral; fails loudly otherwise.
A6Report a6_counterexample(CancelToken cancel = {});

}  // namespace ks
