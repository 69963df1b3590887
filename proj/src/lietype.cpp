#include "kernelsplit/lietype.hpp"

#include <numeric>

#include "kernelsplit/autsplit.hpp"
#include "kernelsplit/catalog.hpp"
#include "kernelsplit/error.hpp"

namespace ks {

namespace {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t checked_pow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && r > UINT64_MAX / base)
      fail(ErrorKind::BoundExceeded, "q^exponent exceeds 64-bit range");
    r *= base;
  }
  return r;
}

bool is_twisted(LieFamily f) {
  switch (f) {
    case LieFamily::TwistedA:
    case LieFamily::TwistedB2:
    case LieFamily::TwistedD:
    case LieFamily::TripleD4:
    case LieFamily::TwistedE6:
    case LieFamily::TwistedF4:
    case LieFamily::TwistedG2:
      return true;
    default:
      return false;
  }
}

std::uint64_t gcd3(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  return std::gcd(std::gcd(a, b), c);
}

}  // namespace

LieFamily parse_lie_family(const std::string& text) {
  if (text == "A") return LieFamily::A;
  if (text == "B") return LieFamily::B;
  if (text == "C") return LieFamily::C;
  if (text == "D") return LieFamily::D;
  if (text == "E6") return LieFamily::E6;
  if (text == "E7") return LieFamily::E7;
  if (text == "E8") return LieFamily::E8;
  if (text == "F4") return LieFamily::F4;
  if (text == "G2") return LieFamily::G2;
  if (text == "2A") return LieFamily::TwistedA;
  if (text == "2B2") return LieFamily::TwistedB2;
  if (text == "2D") return LieFamily::TwistedD;
  if (text == "3D4") return LieFamily::TripleD4;
  if (text == "2E6") return LieFamily::TwistedE6;
  if (text == "2F4") return LieFamily::TwistedF4;
  if (text == "2G2") return LieFamily::TwistedG2;
  fail(ErrorKind::ParseError, "unknown Lie family: " + text);
}

std::string lie_family_name(LieFamily family) {
  switch (family) {
    case LieFamily::A: return "A";
    case LieFamily::B: return "B";
    case LieFamily::C: return "C";
    case LieFamily::D: return "D";
    case LieFamily::E6: return "E6";
    case LieFamily::E7: return "E7";
    case LieFamily::E8: return "E8";
    case LieFamily::F4: return "F4";
    case LieFamily::G2: return "G2";
    case LieFamily::TwistedA: return "2A";
    case LieFamily::TwistedB2: return "2B2";
    case LieFamily::TwistedD: return "2D";
    case LieFamily::TripleD4: return "3D4";
    case LieFamily::TwistedE6: return "2E6";
    case LieFamily::TwistedF4: return "2F4";
    case LieFamily::TwistedG2: return "2G2";
  }
  fail(ErrorKind::Internal, "unhandled Lie family");
}

std::string lie_branch_name(LieBranch branch) {
  switch (branch) {
    case LieBranch::ChevalleyNonD: return "chevalley_non_d";
    case LieBranch::TypeD: return "d";
    case LieBranch::TwistedNon2D: return "twisted_non_2d";
    case LieBranch::Twisted2D: return "2d";
  }
  fail(ErrorKind::Internal, "unhandled Lie branch");
}

LieTypeParams validate_lie_params(LieFamily family, unsigned rank,
                                  std::uint64_t p, unsigned m) {
  if (!is_prime(p))
    fail(ErrorKind::InvalidInput, "p must be prime, got " + std::to_string(p));
  if (m < 1) fail(ErrorKind::InvalidInput, "exponent m must be at least 1");
  const std::uint64_t q = checked_pow(p, m);

  auto need_rank = [&](unsigned exact) {
    if (rank != exact)
      fail(ErrorKind::InvalidInput,
           lie_family_name(family) + " has fixed rank " +
               std::to_string(exact) + ", got " + std::to_string(rank));
  };
  auto need_rank_at_least = [&](unsigned lo) {
    if (rank < lo)
      fail(ErrorKind::InvalidInput,
           lie_family_name(family) + " requires rank >= " +
               std::to_string(lo) + ", got " + std::to_string(rank));
  };
  auto need_field = [&](std::uint64_t char_p, const char* what) {
    if (p != char_p || m % 2 == 0)
      fail(ErrorKind::InvalidInput,
           std::string(what) + " requires p = " + std::to_string(char_p) +
               " and odd m");
  };

  switch (family) {
    case LieFamily::A: need_rank_at_least(1); break;
    case LieFamily::B: need_rank_at_least(2); break;
    case LieFamily::C: need_rank_at_least(3); break;
    case LieFamily::D: need_rank_at_least(4); break;
    case LieFamily::E6: need_rank(6); break;
    case LieFamily::E7: need_rank(7); break;
    case LieFamily::E8: need_rank(8); break;
    case LieFamily::F4: need_rank(4); break;
    case LieFamily::G2: need_rank(2); break;
    case LieFamily::TwistedA: need_rank_at_least(2); break;
    case LieFamily::TwistedB2: need_rank(2); need_field(2, "2B2"); break;
    case LieFamily::TwistedD: need_rank_at_least(4); break;
    case LieFamily::TripleD4: need_rank(4); break;
    case LieFamily::TwistedE6: need_rank(6); break;
    case LieFamily::TwistedF4: need_rank(4); need_field(2, "2F4"); break;
    case LieFamily::TwistedG2: need_rank(2); need_field(3, "2G2"); break;
  }

  // Classical non-simple exceptions at tiny fields.
  auto reject = [&](const char* name) {
    fail(ErrorKind::InvalidInput,
         std::string(name) + " is not simple and is not classified here");
  };
  if (family == LieFamily::A && rank == 1 && q == 2) reject("A1(2)");
  if (family == LieFamily::A && rank == 1 && q == 3) reject("A1(3)");
  if (family == LieFamily::TwistedA && rank == 2 && q == 2) reject("2A2(2)");
  if (family == LieFamily::B && rank == 2 && q == 2) reject("B2(2)");
  if (family == LieFamily::G2 && q == 2) reject("G2(2)");
  if (family == LieFamily::TwistedB2 && q == 2) reject("2B2(2)");
  if (family == LieFamily::TwistedG2 && q == 3) reject("2G2(3)");
  if (family == LieFamily::TwistedF4 && q == 2) reject("2F4(2)");

  return {family, rank, p, m, q};
}

std::uint64_t diagonal_order_d(const LieTypeParams& params) {
  const std::uint64_t q = params.q;
  const unsigned l = params.rank;
  switch (params.family) {
    case LieFamily::A:
      return std::gcd<std::uint64_t>(l + 1, q - 1);
    case LieFamily::B:
    case LieFamily::C:
    case LieFamily::E7:
      return std::gcd<std::uint64_t>(2, q - 1);
    case LieFamily::D:
      return std::gcd<std::uint64_t>(4, checked_pow(q, l) - 1);
    case LieFamily::E6:
      return std::gcd<std::uint64_t>(3, q - 1);
    case LieFamily::E8:
    case LieFamily::F4:
    case LieFamily::G2:
    case LieFamily::TwistedB2:
    case LieFamily::TwistedF4:
    case LieFamily::TwistedG2:
    case LieFamily::TripleD4:
      return 1;
    case LieFamily::TwistedA:
      return std::gcd<std::uint64_t>(l + 1, q + 1);
    case LieFamily::TwistedD:
      return std::gcd<std::uint64_t>(4, checked_pow(q, l) + 1);
    case LieFamily::TwistedE6:
      return std::gcd<std::uint64_t>(3, q + 1);
  }
  fail(ErrorKind::Internal, "unhandled Lie family");
}

LieVerdict is_aut_split_lie(const LieTypeParams& params) {
  const std::uint64_t d = diagonal_order_d(params);
  LieVerdict v;
  v.d = d;

  if (params.family == LieFamily::TwistedD) {
    v.branch = LieBranch::Twisted2D;
    v.aut_split = (params.rank % 2 == 1) || params.p == 2;
    return v;
  }

  std::uint64_t numerator;
  if (params.family == LieFamily::D) {
    v.branch = LieBranch::TypeD;
    numerator = checked_pow(params.q, params.rank) - 1;
  } else if (is_twisted(params.family)) {
    v.branch = LieBranch::TwistedNon2D;
    numerator = params.q + 1;
  } else {
    v.branch = LieBranch::ChevalleyNonD;
    numerator = params.q - 1;
  }
  if (numerator % d != 0)
    fail(ErrorKind::Internal, "diagonal order does not divide its numerator");
  v.triple = {numerator / d, d, params.m};
  v.aut_split = gcd3(v.triple[0], v.triple[1], v.triple[2]) == 1;
  return v;
}

bool crosscheck_psl2(std::uint64_t q) {
  std::uint64_t p = q;
  unsigned m = 1;
  for (std::uint64_t f = 2; f * f <= p; ++f)
    while (p % f == 0 && p != f) {
      p /= f;
      ++m;
    }
  if (!is_prime(p) || checked_pow(p, m) != q)
    fail(ErrorKind::InvalidInput,
         "q must be a prime power, got " + std::to_string(q));

  LieVerdict closed = is_aut_split_lie(validate_lie_params(LieFamily::A, 1, p, m));
  AutData aut = automorphism_group(make_psl2(q));
  AutSplitResult searched = is_aut_split(aut);
  return closed.aut_split == searched.split;
}

}  // namespace ks
