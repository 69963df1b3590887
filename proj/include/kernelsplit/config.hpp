#pragma once

#include <atomic>
#include <cstdint>

#include "kernelsplit/error.hpp"

namespace ks {

// Everything in this library works by exhaustive finite computation, so every
// routine that enumerates group elements is gated by an explicit cap.

// Default cap on the order of any group whose elements are enumerated
// (element tables, conjugacy classes, normal subgroup lattices, automorphism
// searches).  Chosen so that Aut(A6)-scale searches (order 1440) and the
// largest stock catalog entries fit comfortably.  Overridable through the
// KERNELSPLIT_MAX_ORDER environment variable, at the caller's own risk.
inline constexpr std::uint64_t kDefaultMaxEnumOrder = 10'000;

// Cap on any quotient a backtracking complement search runs over: the index
// |E : N| in a complement search, the outer group in a splitting test, and
// the order of the quotient group Gamma of a lien.  24 leaves headroom for
// PSL(2,13) while keeping all quotient tables trivial to store.
inline constexpr std::uint64_t kMaxQuotientIndex = 24;

// Cap on |F| for the order-2 extension-class enumeration (it materializes
// one permutation of F's elements per coset element).
inline constexpr std::uint64_t kMaxUniquenessEnumOrder = 720;

// The generator-image search requires a small generating set.
inline constexpr unsigned kMaxAutGeneratingSetSize = 3;

// Effective enumeration cap: the default unless KERNELSPLIT_MAX_ORDER is set
// to a positive integer.
std::uint64_t max_enum_order();

// Cooperative cancellation for long-running searches.  A default-constructed
// token never cancels.  Searches poll check() at loop granularity and throw
// KsError(Cancelled) once the flag is set.
struct CancelToken {
  const std::atomic<bool>* flag = nullptr;

  void check() const {
    if (flag && flag->load(std::memory_order_relaxed))
      fail(ErrorKind::Cancelled, "search cancelled");
  }
};

}  // namespace ks
