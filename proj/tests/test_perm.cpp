#include <vector>

#include "doctest.h"
#include "kernelsplit/error.hpp"
#include "kernelsplit/perm.hpp"

using ks::Perm;

TEST_CASE("identity construction and printing") {
  Perm id(5);
  CHECK(id.degree() == 5);
  CHECK(id.is_identity());
  CHECK(id.cycle_string() == "()");
  for (unsigned i = 0; i < 5; ++i) CHECK(id[i] == i);
}

TEST_CASE("from_images validates bijectivity") {
  CHECK(Perm::from_images({1, 0, 2}).degree() == 3);
  CHECK_THROWS_AS(Perm::from_images({0, 0, 1}), ks::KsError);
  CHECK_THROWS_AS(Perm::from_images({0, 3, 1}), ks::KsError);
}

TEST_CASE("composition applies the right factor first") {
  // (p * q)(x) = p(q(x)).
  Perm p = Perm::parse_cycles("(1 2)", 3);   // swaps points 0,1
  Perm q = Perm::parse_cycles("(2 3)", 3);   // swaps points 1,2
  Perm pq = p * q;
  // x=2 (0-indexed): q sends 2 -> 1, then p sends 1 -> 0.
  CHECK(pq[2] == 0);
  CHECK(pq[1] == 2);
  CHECK(pq[0] == 1);
  CHECK(pq.cycle_string() == "(1 2 3)");
  Perm qp = q * p;
  CHECK(qp.cycle_string() == "(1 3 2)");
  CHECK(!(pq == qp));
}

TEST_CASE("inverse and order") {
  Perm p = Perm::parse_cycles("(1 2 3)(4 5)", 5);
  CHECK((p * p.inverse()).is_identity());
  CHECK((p.inverse() * p).is_identity());
  CHECK(p.order() == 6);  // lcm(3, 2)
  CHECK(Perm(4).order() == 1);
  CHECK(Perm::parse_cycles("(1 2 3 4 5 6 7)", 7).order() == 7);
}

TEST_CASE("cycle parsing round trip") {
  for (const char* text : {"()", "(1 2)", "(1 2 3)(4 5)", "(2 4 6)(1 3)(5 7)"}) {
    Perm p = Perm::parse_cycles(text, 1);
    CHECK(Perm::parse_cycles(p.cycle_string(), p.degree()) == p);
  }
  // Canonical printing: cycles start at their least point, listed ascending.
  CHECK(Perm::parse_cycles("(5 4)(3 2 1)", 5).cycle_string() == "(1 3 2)(4 5)");
}

TEST_CASE("parse respects min_degree and rejects malformed text") {
  Perm p = Perm::parse_cycles("(1 2)", 6);
  CHECK(p.degree() == 6);
  CHECK(Perm::parse_cycles("(1 10)", 1).degree() == 10);
  CHECK_THROWS_AS(Perm::parse_cycles("(1 2", 1), ks::KsError);
  CHECK_THROWS_AS(Perm::parse_cycles("(0 1)", 1), ks::KsError);   // 1-indexed
  CHECK_THROWS_AS(Perm::parse_cycles("(1 1)", 1), ks::KsError);   // repeat
  CHECK_THROWS_AS(Perm::parse_cycles("(1 2)x", 1), ks::KsError);  // trailing
  CHECK_THROWS_AS(Perm::parse_cycles("", 1), ks::KsError);
}

TEST_CASE("moved points and lowest moved point") {
  Perm p = Perm::parse_cycles("(2 3)", 5);
  CHECK(p.moved_points() == 2);
  CHECK(p.lowest_moved_point() == 1);
  CHECK(Perm(5).lowest_moved_point() == 5);
  CHECK(Perm(5).moved_points() == 0);
}

TEST_CASE("ordering is lexicographic on image vectors") {
  Perm id(3);
  Perm p = Perm::parse_cycles("(2 3)", 3);
  Perm q = Perm::parse_cycles("(1 2)", 3);
  CHECK(id < p);
  CHECK(p < q);
}
