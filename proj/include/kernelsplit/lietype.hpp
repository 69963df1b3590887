#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ks {

// Families of finite simple groups of Lie type, twisted types included.
enum class LieFamily {
  A,
  B,
  C,
  D,
  E6,
  E7,
  E8,
  F4,
  G2,
  TwistedA,   // ²A_ℓ
  TwistedB2,  // ²B₂
  TwistedD,   // ²D_ℓ
  TripleD4,   // ³D₄
  TwistedE6,  // ²E₆
  TwistedF4,  // ²F₄
  TwistedG2,  // ²G₂
};

// Parses "A", "B", "C", "D", "E6", "E7", "E8", "F4", "G2", "2A", "2B2",
// "2D", "3D4", "2E6", "2F4", "2G2".
LieFamily parse_lie_family(const std::string& text);
std::string lie_family_name(LieFamily family);

struct LieTypeParams {
  LieFamily family = LieFamily::A;
  unsigned rank = 1;     // ℓ; for fixed-rank families it must equal that rank
  std::uint64_t p = 2;   // field characteristic, prime
  unsigned m = 1;        // exponent, q = p^m
  std::uint64_t q = 2;

  // For ²A_ℓ and the other twisted types, q refers to F_q with the group
  // defined relative to F_{q²} (resp. F_{q³} for ³D₄); m is the exponent in
  // q = p^m. Conventions differ across references, so this one is fixed here.
};

// Validates and assembles the parameter set. Rejects non-prime p, rank
// violations (A ℓ≥1, B ℓ≥2, C ℓ≥3, D ℓ≥4, ²A ℓ≥2, ²D ℓ≥4, fixed ranks for
// the exceptional families), Suzuki/Ree field constraints (²B₂/²F₄: p=2 and
// m odd; ²G₂: p=3 and m odd), and the classical non-simple exceptions
// A₁(2), A₁(3), ²A₂(2), B₂(2), G₂(2), ²B₂(2), ²G₂(3), ²F₄(2).
LieTypeParams validate_lie_params(LieFamily family, unsigned rank,
                                  std::uint64_t p, unsigned m);

// Order of the group of diagonal automorphisms modulo inner automorphisms,
// from the standard classification tables.
std::uint64_t diagonal_order_d(const LieTypeParams& params);

enum class LieBranch {
  ChevalleyNonD,  // untwisted, not D_ℓ: split iff gcd((q−1)/d, d, m) = 1
  TypeD,          // D_ℓ: split iff gcd((q^ℓ−1)/d, d, m) = 1
  TwistedNon2D,   // twisted, not ²D_ℓ: split iff gcd((q+1)/d, d, m) = 1
  Twisted2D,      // ²D_ℓ: split iff ℓ odd or p = 2
};

std::string lie_branch_name(LieBranch branch);

struct LieVerdict {
  bool aut_split = false;
  std::uint64_t d = 1;
  // The three gcd arguments for the first three branches; empty for ²D_ℓ,
  // whose criterion is the parity condition alone.
  std::vector<std::uint64_t> triple;
  LieBranch branch = LieBranch::ChevalleyNonD;
};

LieVerdict is_aut_split_lie(const LieTypeParams& params);

// True iff the closed-form verdict for A₁ over F_q agrees with the verdict
// obtained by explicitly searching Aut(PSL(2,q)) for a complement of the
// inner automorphisms. q must be in the PSL(2,q) construction whitelist.
bool crosscheck_psl2(std::uint64_t q);

}  // namespace ks
