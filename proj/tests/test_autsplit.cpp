#include <functional>
#include <set>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "kernelsplit/autsplit.hpp"
#include "kernelsplit/catalog.hpp"
#include "kernelsplit/complement.hpp"
#include "kernelsplit/error.hpp"
#include "kernelsplit/perm.hpp"
#include "kernelsplit/perm_group.hpp"

using ks::Perm;
using ks::PermGroup;

namespace {

// Every claimed automorphism must respect the full multiplication table;
// checked here from scratch, without the library's own verification path.
void check_all_are_automorphisms(const ks::AutData& aut) {
  const ks::ElementTable& t = *aut.table;
  bool ok = true;
  aut.aut.for_each_element([&](const Perm& a) {
    for (std::uint32_t i = 0; ok && i < t.size(); ++i)
      for (std::uint32_t j = 0; j < t.size(); ++j)
        if (a[t.mul(i, j)] != t.mul(a[i], a[j])) {
          ok = false;
          break;
        }
    return ok;
  });
  CHECK(ok);
}

ks::ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const ks::KsError& e) {
    return e.kind();
  }
  throw std::runtime_error("expected a library error");
}

}  // namespace

TEST_CASE("automorphisms of A5: the symmetric extension splits") {
  ks::AutData aut = ks::automorphism_group(ks::make_alternating(5));
  CHECK(aut.base_group.order() == 60);
  CHECK(aut.inn.order() == 60);
  CHECK(aut.aut.order() == 120);
  CHECK(aut.out_order == 2);
  check_all_are_automorphisms(aut);

  REQUIRE(aut.out_classes.size() == 2);
  CHECK(aut.out_classes[0].label == "o0");
  CHECK(aut.out_classes[0].representative.is_identity());
  CHECK(aut.out_classes[1].order_in_out == 2);
  CHECK(aut.labels.at("s") == 1);
  CHECK(aut.resolve_label("s") == 1);
  CHECK(aut.resolve_label("o1") == 1);
  CHECK(kind_of([&] { aut.resolve_label("zz"); }) == ks::ErrorKind::ParseError);

  CHECK(ks::min_order_in_coset(aut, aut.out_classes[0]) == 1);
  CHECK(ks::min_order_in_coset(aut, aut.out_classes[1]) == 2);

  ks::AutSplitResult split = ks::is_aut_split(aut);
  CHECK(split.split);
  PermGroup complement = PermGroup::from_generators(split.complement_generators);
  CHECK(ks::verify_complement(aut.aut, aut.inn, complement));
}

TEST_CASE("class assignment of automorphisms") {
  ks::AutData aut = ks::automorphism_group(ks::make_alternating(5));
  CHECK(aut.out_class_of(Perm(aut.table->size())) == 0);
  for (const ks::OuterClass& cls : aut.out_classes)
    CHECK(aut.out_class_of(cls.representative) == cls.id);
  // Inner automorphisms land in the trivial class.
  for (const Perm& g : aut.base_group.generators())
    CHECK(aut.out_class_of(aut.table->conjugation_map(g)) == 0);
  // A non-automorphism is rejected.
  Perm junk = Perm::parse_cycles("(2 3)", aut.table->size());
  CHECK(kind_of([&] { aut.out_class_of(junk); }) == ks::ErrorKind::InvalidInput);
}

TEST_CASE("automorphisms of A6: four outer classes, no splitting") {
  ks::AutData aut = ks::automorphism_group(ks::make_alternating(6));
  CHECK(aut.inn.order() == 360);
  CHECK(aut.aut.order() == 1440);
  CHECK(aut.out_order == 4);

  // Klein-four outer group: labels s, p, m ranked by the least element order
  // over each nontrivial coset, with m the involution-free one.
  REQUIRE(aut.labels.count("s"));
  REQUIRE(aut.labels.count("p"));
  REQUIRE(aut.labels.count("m"));
  std::set<std::uint32_t> ids = {aut.labels.at("s"), aut.labels.at("p"),
                                 aut.labels.at("m")};
  CHECK(ids.size() == 3);
  CHECK(!ids.count(0));
  CHECK(ks::min_order_in_coset(aut, aut.out_classes[aut.labels.at("s")]) == 2);
  CHECK(ks::min_order_in_coset(aut, aut.out_classes[aut.labels.at("p")]) == 2);
  CHECK(ks::min_order_in_coset(aut, aut.out_classes[aut.labels.at("m")]) == 4);

  // Klein-four multiplication: squares are trivial, distinct products give
  // the third involution.
  std::uint32_t s = aut.labels.at("s"), p = aut.labels.at("p"),
                m = aut.labels.at("m");
  CHECK(aut.out_mul(s, s) == 0);
  CHECK(aut.out_mul(p, p) == 0);
  CHECK(aut.out_mul(m, m) == 0);
  CHECK(aut.out_mul(s, p) == m);
  CHECK(aut.out_mul(p, m) == s);
  CHECK(aut.out_mul(s, m) == p);
  for (const ks::OuterClass& cls : aut.out_classes)
    if (cls.id != 0) CHECK(cls.order_in_out == 2);

  ks::AutSplitResult split = ks::is_aut_split(aut);
  CHECK(!split.split);
  CHECK(split.certificate.exhausted);
}

TEST_CASE("complete groups have no outer part") {
  ks::AutData aut = ks::automorphism_group(ks::make_symmetric(5));
  CHECK(aut.aut.order() == 120);
  CHECK(aut.inn.order() == 120);
  CHECK(aut.out_order == 1);
  CHECK(aut.out_classes.size() == 1);
  ks::AutSplitResult split = ks::is_aut_split(aut);
  CHECK(split.split);
}

TEST_CASE("projective kernels of both outer shapes") {
  ks::AutData psl7 = ks::automorphism_group(ks::make_psl2(7));
  CHECK(psl7.aut.order() == 336);
  CHECK(psl7.out_order == 2);
  CHECK(ks::is_aut_split(psl7).split);

  // PSL(2,8): the outer group is the cyclic field-automorphism group.
  ks::AutData psl8 = ks::automorphism_group(ks::make_psl2(8));
  CHECK(psl8.aut.order() == 1512);
  CHECK(psl8.out_order == 3);
  bool has_order3 = false;
  for (const ks::OuterClass& cls : psl8.out_classes)
    has_order3 |= cls.order_in_out == 3;
  CHECK(has_order3);
  CHECK(ks::is_aut_split(psl8).split);

  // PSL(2,9) realizes the same automorphism tower as A6.
  ks::AutData psl9 = ks::automorphism_group(ks::make_psl2(9));
  CHECK(psl9.aut.order() == 1440);
  CHECK(psl9.out_order == 4);
  CHECK(!ks::is_aut_split(psl9).split);
}

TEST_CASE("abelian kernels have trivial inner part") {
  ks::AutData aut = ks::automorphism_group(ks::parse_group_spec("C2 x C2").group);
  CHECK(aut.inn.order() == 1);
  CHECK(aut.aut.order() == 6);
  CHECK(aut.out_order == 6);
  check_all_are_automorphisms(aut);
  CHECK(ks::is_aut_split(aut).split);  // a complement of the trivial subgroup
}

TEST_CASE("trivial kernel") {
  ks::AutData aut = ks::automorphism_group(PermGroup(3));
  CHECK(aut.aut.order() == 1);
  CHECK(aut.out_order == 1);
  CHECK(aut.out_classes.size() == 1);
}

TEST_CASE("direct square: the swap class and splitting") {
  PermGroup square = ks::parse_group_spec("A5 x A5").group;
  ks::AutData aut = ks::automorphism_group(square);
  CHECK(aut.inn.order() == 3600);
  CHECK(aut.aut.order() == 28800);
  CHECK(aut.out_order == 8);

  PermGroup a5 = ks::make_alternating(5);
  PermGroup left = PermGroup::from_generators(
      {ks::embed_left(a5.generators()[0], 5), ks::embed_left(a5.generators()[1], 5)});
  PermGroup right = PermGroup::from_generators(
      {ks::embed_right(5, a5.generators()[0]), ks::embed_right(5, a5.generators()[1])});
  auto swap_class = ks::factor_swapping_class(aut, left, right);
  REQUIRE(swap_class.has_value());
  CHECK(*swap_class != 0);

  // The block-exchange conjugation must land in that class.
  Perm block_swap = Perm::parse_cycles("(1 6)(2 7)(3 8)(4 9)(5 10)", 10);
  CHECK(aut.out_class_of(aut.table->conjugation_map(block_swap)) == *swap_class);

  ks::AutSplitResult split = ks::is_aut_split(aut);
  CHECK(split.split);
  PermGroup complement = PermGroup::from_generators(split.complement_generators);
  CHECK(ks::verify_complement(aut.aut, aut.inn, complement));
}

TEST_CASE("bounds are reported honestly") {
  // GL(3,2) as the automorphism group of C2^3 exceeds the outer-group cap.
  CHECK(kind_of([] {
          ks::automorphism_group(ks::parse_group_spec("C2 x C2 x C2").group);
        }) == ks::ErrorKind::BoundExceeded);
  // C2^4 needs four generators, beyond the tuple-size cap.
  CHECK(kind_of([] {
          ks::automorphism_group(ks::parse_group_spec("C2 x C2 x C2 x C2").group);
        }) == ks::ErrorKind::InvalidInput);
}
