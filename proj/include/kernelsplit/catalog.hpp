#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kernelsplit/perm_group.hpp"

namespace ks {

// Arithmetic of a small finite field F_q, with elements indexed 0..q-1.
// Prime fields use integers mod p; the prime-power sizes 4, 8 and 9 use
// fixed polynomial moduli (x^2+x+1, x^3+x+1, x^2+1), with the element of
// digits (c0, c1, c2) in base p indexed as c0 + c1*p + c2*p^2.
class SmallField {
 public:
  explicit SmallField(unsigned q);

  unsigned q() const { return q_; }
  unsigned characteristic() const { return p_; }
  unsigned add(unsigned a, unsigned b) const { return add_[a * q_ + b]; }
  unsigned neg(unsigned a) const { return neg_[a]; }
  unsigned mul(unsigned a, unsigned b) const { return mul_[a * q_ + b]; }
  unsigned inv(unsigned a) const;  // a != 0
  // Lowest-indexed generator of the multiplicative group.
  unsigned primitive_element() const { return primitive_; }

 private:
  unsigned q_ = 0;
  unsigned p_ = 0;
  unsigned primitive_ = 0;
  std::vector<unsigned> add_, mul_, neg_, inv_;
};

PermGroup make_alternating(unsigned n);  // natural action on n points
PermGroup make_symmetric(unsigned n);
PermGroup make_cyclic(unsigned n);
// Projective action on the q+1 points {0..q-1, infinity=q}.
// Supported field sizes: 4, 5, 7, 8, 9, 11, 13.
PermGroup make_psl2(unsigned q);

// Disjoint-union action: a on points 0..deg(a)-1, b on the following block.
PermGroup direct_product(const PermGroup& a, const PermGroup& b);
Perm embed_left(const Perm& p, unsigned right_degree);
Perm embed_right(unsigned left_degree, const Perm& p);

// Split extension of n by h.  action[k] permutes n's element indices and must
// be an automorphism of n's multiplication; generator k of h acts on n by it.
// Points are n's element indices followed by h's natural points; the order is
// verified to be |n| * |h|.
PermGroup semidirect_product(const ElementTable& n, const PermGroup& h,
                             const std::vector<Perm>& action);

// A parsed group description.
//   "A5", "S6", "C2", "PSL(2,9)"        catalog atoms
//   "A5 x A5", "C2 x C2"                direct products (left to right)
//   "perm:(1 2 3)(4 5); (1 2)"          explicit generators, 1-indexed cycles
struct NamedGroup {
  PermGroup group;
  std::string name;             // normalized spelling
  bool square_product = false;  // exactly two direct factors with equal names
};

NamedGroup parse_group_spec(const std::string& text);

}  // namespace ks
