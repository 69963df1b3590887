#include <algorithm>
#include <cstdlib>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "kernelsplit/autsplit.hpp"
#include "kernelsplit/catalog.hpp"
#include "kernelsplit/error.hpp"
#include "kernelsplit/group_ops.hpp"
#include "kernelsplit/lien.hpp"
#include "kernelsplit/perm_group.hpp"
#include "oracles.hpp"

using ks::AutData;
using ks::ElementTable;
using ks::Lien;
using ks::Perm;
using ks::PermGroup;

namespace {

ks::ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const ks::KsError& e) {
    return e.kind();
  }
  throw std::runtime_error("expected a library error");
}

std::shared_ptr<const AutData> a5_aut() {
  static auto p = std::make_shared<const AutData>(
      ks::automorphism_group(ks::make_alternating(5)));
  return p;
}

std::shared_ptr<const AutData> a6_aut() {
  static auto p = std::make_shared<const AutData>(
      ks::automorphism_group(ks::make_alternating(6)));
  return p;
}

std::shared_ptr<const AutData> psl7_aut() {
  static auto p =
      std::make_shared<const AutData>(ks::automorphism_group(ks::make_psl2(7)));
  return p;
}

std::shared_ptr<const AutData> a5xa5_aut() {
  static auto p = std::make_shared<const AutData>(ks::automorphism_group(
      ks::direct_product(ks::make_alternating(5), ks::make_alternating(5))));
  return p;
}

// Pointwise re-verification of a section, independent of verify_section: the
// images must multiply exactly as gamma does, project back onto gamma, and
// conjugate the embedded kernel by automorphisms in the kappa-designated
// cosets.
void check_section_by_hand(const ks::Extension& ext, const Lien& lien,
                           const ks::GroupHom& section) {
  const ElementTable& gt = *lien.gamma_table;
  std::vector<Perm> images;
  for (std::uint32_t j = 0; j < gt.size(); ++j)
    images.push_back(section.apply_index(j));

  CHECK(images[0] == Perm(ext.e.degree()));
  for (std::uint32_t j = 0; j < gt.size(); ++j) {
    CHECK(ext.gamma_index_of(images[j]) == j);
    for (std::uint32_t k = 0; k < gt.size(); ++k)
      CHECK(images[gt.mul(j, k)] == images[j] * images[k]);
  }

  const AutData& aut = *lien.aut;
  for (std::uint32_t j = 0; j < gt.size(); ++j) {
    Perm a = ext.aut_component(images[j]);
    CHECK(aut.out_class_of(a) == lien.kappa[j]);
    for (const Perm& g : lien.f().generators()) {
      Perm lhs = images[j] * ext.kernel_embedding.apply(g) *
                 images[j].inverse();
      std::uint32_t gi = aut.table->index_of(g);
      Perm rhs = ext.kernel_embedding.apply(
          aut.table->element(a[static_cast<Perm::Pt>(gi)]));
      CHECK(lhs == rhs);
    }
  }
}

// Multiplication table of gamma in its canonical element order.
std::vector<std::vector<std::uint32_t>> table_of(const ElementTable& t) {
  std::vector<std::vector<std::uint32_t>> m(
      t.size(), std::vector<std::uint32_t>(t.size()));
  for (std::uint32_t j = 0; j < t.size(); ++j)
    for (std::uint32_t k = 0; k < t.size(); ++k) m[j][k] = t.mul(j, k);
  return m;
}

struct EnvOverride {
  std::string key;
  EnvOverride(const char* k, const char* v) : key(k) { setenv(k, v, 1); }
  ~EnvOverride() { unsetenv(key.c_str()); }
};

}  // namespace

TEST_CASE("kernel datum validation") {
  PermGroup c2 = ks::make_cyclic(2);

  // A kernel with nontrivial center admits inequivalent extensions per datum,
  // so it is refused outright.
  CHECK(kind_of([&] { ks::make_lien(c2, c2, {0, 0}); }) ==
        ks::ErrorKind::InvalidInput);

  auto aut = a5_aut();
  CHECK(aut->out_order == 2);
  CHECK(aut->resolve_label("s") == 1);
  CHECK(aut->resolve_label("o1") == 1);
  CHECK(kind_of([&] { aut->resolve_label("q"); }) == ks::ErrorKind::ParseError);

  CHECK(kind_of([&] { ks::make_lien(aut, c2, {0}); }) ==
        ks::ErrorKind::InvalidInput);  // wrong table size
  CHECK(kind_of([&] { ks::make_lien(aut, c2, {1, 0}); }) ==
        ks::ErrorKind::InvalidInput);  // identity must map to the trivial class
  CHECK(kind_of([&] { ks::make_lien(aut, c2, {0, 7}); }) ==
        ks::ErrorKind::InvalidInput);  // not an outer class id
  CHECK(kind_of([&] {
          ks::make_lien(aut, ks::make_cyclic(3), {0, 1, 1});
        }) == ks::ErrorKind::InvalidInput);  // g*g = g^2 breaks the table
  CHECK(kind_of([&] {
          ks::make_lien(aut, ks::make_symmetric(5), {});
        }) == ks::ErrorKind::BoundExceeded);  // quotient order over the cap

  // An order-3 quotient can only map trivially into an order-2 outer group.
  Lien trivial3 = ks::make_lien(aut, ks::make_cyclic(3), {0, 0, 0});
  CHECK(trivial3.kappa == std::vector<std::uint32_t>{0, 0, 0});
  CHECK(kind_of([&] { ks::enumerate_extensions_order2_gamma(trivial3); }) ==
        ks::ErrorKind::InvalidInput);
}

TEST_CASE("trivial kernel: every datum collapses to the quotient itself") {
  // The one-element group is centerless, with trivial outer group, so the
  // only datum over any gamma is the trivial one and its extension is a
  // copy of gamma.
  PermGroup one = ks::make_cyclic(1);
  auto aut = std::make_shared<const AutData>(ks::automorphism_group(one));
  CHECK(aut->out_order == 1);

  for (const PermGroup& gamma :
       {ks::make_cyclic(2), ks::make_symmetric(3)}) {
    Lien lien = ks::make_lien(
        aut, gamma, std::vector<std::uint32_t>(gamma.order(), 0));
    ks::NeutralityResult nr = ks::is_neutral(lien);
    CHECK(nr.neutral);
    CHECK(nr.extension.e.order() == gamma.order());
    REQUIRE(nr.extension.section.has_value());
    CHECK(ks::verify_section(nr.extension, *nr.extension.section));

    ks::TowerResult tower = ks::split_via_tower(lien);
    CHECK(tower.split);
    REQUIRE(tower.section.has_value());
    CHECK(ks::verify_section(tower.extension, *tower.section));
    REQUIRE(tower.trace.size() == 1);
    CHECK(tower.trace[0] ==
          "base: trivial kernel split through an outer-class lift");
  }

  Lien over_c2 = ks::make_lien(aut, ks::make_cyclic(2), {0, 0});
  CHECK(ks::enumerate_extensions_order2_gamma(over_c2) == 1);
}

TEST_CASE("degree-five alternating kernel over an order-two quotient") {
  auto aut = a5_aut();
  PermGroup c2 = ks::make_cyclic(2);
  Lien lien = ks::make_lien(aut, c2, {0, aut->resolve_label("s")});

  ks::Extension ext = ks::pullback_extension(lien);
  CHECK(ext.e.order() == 120);
  CHECK(ext.e.degree() == 62);
  CHECK(ext.f_image.order() == 60);
  for (const Perm& g : lien.f().generators())
    CHECK(ext.gamma_index_of(ext.kernel_embedding.apply(g)) == 0);

  ks::NeutralityResult nr = ks::is_neutral(lien);
  CHECK(nr.neutral);
  REQUIRE(nr.extension.section.has_value());
  CHECK(ks::verify_section(nr.extension, *nr.extension.section));
  check_section_by_hand(nr.extension, lien, *nr.extension.section);

  // Corrupting the section must be caught by the pointwise verifier.  The
  // identity map respects products but projects everything onto the trivial
  // coset.
  ks::GroupHom constant(nr.extension.gamma_table, nr.extension.e.degree(),
                        {Perm(nr.extension.e.degree())});
  CHECK(!ks::verify_section(nr.extension, constant));

  // Shifting the generator image by a kernel element with which it does not
  // square away breaks the product relations.
  Perm t = nr.extension.section->apply_index(1);
  bool corrupted_one = false;
  for (const Perm& g : lien.f().generators()) {
    Perm tweaked = nr.extension.kernel_embedding.apply(g) * t;
    if (!(tweaked * tweaked == Perm(nr.extension.e.degree()))) {
      ks::GroupHom bent(nr.extension.gamma_table, nr.extension.e.degree(),
                        {tweaked});
      CHECK(!ks::verify_section(nr.extension, bent));
      corrupted_one = true;
      break;
    }
  }
  CHECK(corrupted_one);

  CHECK(ks::enumerate_extensions_order2_gamma(lien) == 1);
}

TEST_CASE("trivial kappa always yields a neutral lien") {
  auto aut = psl7_aut();
  PermGroup v4 = ks::parse_group_spec("C2 x C2").group;
  Lien lien = ks::make_lien(aut, v4, {0, 0, 0, 0});
  ks::NeutralityResult nr = ks::is_neutral(lien);
  CHECK(nr.neutral);
  REQUIRE(nr.extension.section.has_value());
  CHECK(nr.extension.e.order() == 168 * 4);
  CHECK(ks::verify_section(nr.extension, *nr.extension.section));
  check_section_by_hand(nr.extension, lien, *nr.extension.section);
}

TEST_CASE("symmetric kernel is neutral but fails the tower hypotheses") {
  PermGroup s5 = ks::make_symmetric(5);
  PermGroup c2 = ks::make_cyclic(2);
  Lien lien = ks::make_lien(s5, c2, {0, 0});
  CHECK(ks::is_neutral(lien).neutral);
  // S5 has a cyclic composition factor, so the tower argument does not apply.
  CHECK(kind_of([&] { ks::split_via_tower(lien); }) ==
        ks::ErrorKind::HypothesisFailed);
}

TEST_CASE("degree-six alternating kernel: neutrality depends on the coset") {
  auto aut = a6_aut();
  CHECK(aut->out_order == 4);
  std::uint32_t s = aut->resolve_label("s");
  std::uint32_t p = aut->resolve_label("p");
  std::uint32_t m = aut->resolve_label("m");
  CHECK(s != p);
  CHECK(p != m);
  CHECK(s != m);
  CHECK(s != 0);
  CHECK(p != 0);
  CHECK(m != 0);

  // Every nontrivial outer class is an involution in the outer group, but
  // only two of the three cosets contain an involution of the automorphism
  // group itself.
  for (std::uint32_t c : {s, p, m})
    CHECK(aut->out_classes[c].order_in_out == 2);
  CHECK(ks::min_order_in_coset(*aut, aut->out_classes[s]) == 2);
  CHECK(ks::min_order_in_coset(*aut, aut->out_classes[p]) == 2);
  CHECK(ks::min_order_in_coset(*aut, aut->out_classes[m]) == 4);

  PermGroup c2 = ks::make_cyclic(2);
  for (std::uint32_t c : {s, p}) {
    Lien lien = ks::make_lien(aut, c2, {0, c});
    ks::NeutralityResult nr = ks::is_neutral(lien);
    CHECK(nr.neutral);
    REQUIRE(nr.extension.section.has_value());
    CHECK(ks::verify_section(nr.extension, *nr.extension.section));
    check_section_by_hand(nr.extension, lien, *nr.extension.section);
    CHECK(ks::enumerate_extensions_order2_gamma(lien) == 1);
  }

  Lien involution_free = ks::make_lien(aut, c2, {0, m});
  ks::NeutralityResult nr = ks::is_neutral(involution_free);
  CHECK(!nr.neutral);
  CHECK(!nr.extension.section.has_value());
  // A complement would need an involution over the nontrivial coset, and the
  // coset has none, so the search is exhausted without examining any tuple.
  CHECK(nr.certificate.exhausted);
  CHECK(nr.certificate.candidate_counts ==
        std::vector<std::uint64_t>{0});
  // The extension class is still the unique one realizing this datum.
  CHECK(ks::enumerate_extensions_order2_gamma(involution_free) == 1);

  ks::A6Report report = ks::a6_counterexample();
  REQUIRE(report.classes.size() == 3);
  CHECK(report.classes[0].label == "s");
  CHECK(report.classes[1].label == "p");
  CHECK(report.classes[2].label == "m");
  CHECK(report.classes[0].neutral);
  CHECK(report.classes[1].neutral);
  CHECK(!report.classes[2].neutral);
  CHECK(report.classes[2].min_order_in_coset == 4);
  CHECK(!report.involution_in_m_coset);
  CHECK(report.non_neutral_class == report.classes[2].class_id);
}

TEST_CASE("projective kernel of order 168 over an order-two quotient") {
  auto aut = psl7_aut();
  CHECK(aut->out_order == 2);
  PermGroup c2 = ks::make_cyclic(2);
  Lien lien = ks::make_lien(aut, c2, {0, aut->resolve_label("s")});
  ks::NeutralityResult nr = ks::is_neutral(lien);
  CHECK(nr.neutral);
  REQUIRE(nr.extension.section.has_value());
  CHECK(ks::verify_section(nr.extension, *nr.extension.section));
  check_section_by_hand(nr.extension, lien, *nr.extension.section);
  CHECK(ks::enumerate_extensions_order2_gamma(lien) == 1);
}

TEST_CASE("kappa table enumeration matches a full function scan") {
  std::vector<PermGroup> gammas = {
      ks::make_cyclic(2), ks::make_cyclic(3),
      ks::parse_group_spec("C2 x C2").group, ks::make_symmetric(3)};
  std::vector<std::shared_ptr<const AutData>> kernels = {a5_aut(), psl7_aut(),
                                                         a6_aut(), a5xa5_aut()};
  // Hand counts: an order-two outer group receives 2/1/4/2 homomorphisms
  // from C2/C3/C2xC2/S3; the Klein-four outer group of A6 receives 4/1/16/4
  // (S3 factors through its sign map); the dihedral outer group of A5 x A5
  // (order 8, five involutions) receives 6/1/28/6.
  std::vector<std::vector<std::uint64_t>> expected = {
      {2, 1, 4, 2}, {2, 1, 4, 2}, {4, 1, 16, 4}, {6, 1, 28, 6}};
  CHECK(a5xa5_aut()->out_order == 8);

  for (std::size_t ki = 0; ki < kernels.size(); ++ki) {
    for (std::size_t gi = 0; gi < gammas.size(); ++gi) {
      ks::ElementTablePtr gt = ElementTable::build(gammas[gi]);
      auto tables = ks::all_kappa_tables(*kernels[ki], *gt);
      CHECK(tables.size() == expected[ki][gi]);
      CHECK(std::is_sorted(tables.begin(), tables.end()));
      CHECK(tables.front() ==
            std::vector<std::uint32_t>(gt->size(), 0));
      for (const auto& t : tables) {
        Lien lien = ks::make_lien(kernels[ki], gammas[gi], t);
        CHECK(lien.kappa == t);
      }
      CHECK(oracle::hom_count(table_of(*gt), kernels[ki]->out_mult) ==
            expected[ki][gi]);
    }
  }
}

TEST_CASE("square kernel: factor swap and the characteristically simple base") {
  auto aut = a5xa5_aut();
  CHECK(aut->out_order == 8);

  PermGroup a5 = ks::make_alternating(5);
  std::vector<Perm> lgens, rgens;
  for (const Perm& g : a5.generators()) {
    lgens.push_back(ks::embed_left(g, 5));
    rgens.push_back(ks::embed_right(5, g));
  }
  PermGroup left(10, lgens), right(10, rgens);

  auto swap = ks::factor_swapping_class(*aut, left, right);
  REQUIRE(swap.has_value());
  CHECK(*swap != 0);
  CHECK(aut->out_classes[*swap].order_in_out == 2);

  PermGroup c2 = ks::make_cyclic(2);
  Lien lien = ks::make_lien(aut, c2, {0, *swap});
  ks::NeutralityResult nr = ks::is_neutral(lien);
  CHECK(nr.neutral);
  REQUIRE(nr.extension.section.has_value());
  CHECK(ks::verify_section(nr.extension, *nr.extension.section));
  check_section_by_hand(nr.extension, lien, *nr.extension.section);

  // A5 x A5 is characteristically simple, so the tower terminates at its
  // base case immediately.
  ks::TowerResult tower = ks::split_via_tower(lien);
  CHECK(tower.split);
  REQUIRE(tower.section.has_value());
  CHECK(ks::verify_section(tower.extension, *tower.section));
  check_section_by_hand(tower.extension, lien, *tower.section);
  REQUIRE(tower.trace.size() == 1);
  CHECK(tower.trace[0].rfind("base: ", 0) == 0);

  // The factors are normal but exchanged by the swap, hence not
  // characteristic; the trivial and full subgroups are characteristic but
  // give no quotient datum.
  CHECK(kind_of([&] { ks::quotient_lien(lien, left); }) ==
        ks::ErrorKind::NotCharacteristic);
  CHECK(kind_of([&] { ks::quotient_lien(lien, PermGroup(10)); }) ==
        ks::ErrorKind::InvalidInput);
  CHECK(kind_of([&] { ks::quotient_lien(lien, lien.f()); }) ==
        ks::ErrorKind::InvalidInput);

  // The order-two class enumeration materializes one permutation per coset
  // element, so it is capped well below this kernel's order.
  CHECK(kind_of([&] { ks::enumerate_extensions_order2_gamma(lien); }) ==
        ks::ErrorKind::BoundExceeded);
}

TEST_CASE("tower recursion through a characteristic subgroup") {
  // The product of two non-isomorphic simple groups keeps both factors
  // characteristic, forcing the tower into its inductive branch.  Its order
  // (10080) sits above the default enumeration cap, so raise the cap for
  // this case only.
  EnvOverride cap("KERNELSPLIT_MAX_ORDER", "25000");

  PermGroup a5 = ks::make_alternating(5);
  PermGroup psl = ks::make_psl2(7);
  PermGroup f = ks::direct_product(a5, psl);
  CHECK(f.order() == 10080);
  auto aut = std::make_shared<const AutData>(ks::automorphism_group(f));
  CHECK(aut->out_order == 4);

  std::vector<Perm> lgens, rgens;
  for (const Perm& g : a5.generators()) lgens.push_back(ks::embed_left(g, 8));
  for (const Perm& g : psl.generators()) rgens.push_back(ks::embed_right(5, g));
  PermGroup left(13, lgens), right(13, rgens);

  // Classify the three nontrivial outer classes by whether they act outer on
  // each factor, read off from the induced data on the two quotients.  The
  // outer group is Out(A5) x Out(PSL(2,7)), so the profiles (1,0), (0,1) and
  // (1,1) each appear exactly once.
  PermGroup c2 = ks::make_cyclic(2);
  std::uint32_t on_both = 0;
  std::vector<std::pair<bool, bool>> profiles;
  for (std::uint32_t c = 1; c < 4; ++c) {
    Lien lien = ks::make_lien(aut, c2, {0, c});
    Lien mod_left = ks::quotient_lien(lien, left);    // kernel PSL(2,7)
    Lien mod_right = ks::quotient_lien(lien, right);  // kernel A5
    bool outer_on_psl = mod_left.kappa[1] != 0;
    bool outer_on_a5 = mod_right.kappa[1] != 0;
    CHECK(mod_left.f().order() == 168);
    CHECK(mod_right.f().order() == 60);
    profiles.emplace_back(outer_on_a5, outer_on_psl);
    if (outer_on_a5 && outer_on_psl) on_both = c;
  }
  std::sort(profiles.begin(), profiles.end());
  CHECK(profiles == std::vector<std::pair<bool, bool>>{
                        {false, true}, {true, false}, {true, true}});
  REQUIRE(on_both != 0);

  Lien lien = ks::make_lien(aut, c2, {0, on_both});
  ks::TowerResult tower = ks::split_via_tower(lien);
  CHECK(tower.split);
  CHECK(tower.extension.e.order() == 20160);
  REQUIRE(tower.section.has_value());
  CHECK(ks::verify_section(tower.extension, *tower.section));
  check_section_by_hand(tower.extension, lien, *tower.section);

  REQUIRE(tower.trace.size() >= 3);
  CHECK(tower.trace[0].rfind("tower: characteristic subgroup of order ", 0) ==
        0);
  bool has_quotient = false, has_subgroup = false;
  for (const std::string& line : tower.trace) {
    if (line.rfind("quotient/", 0) == 0) has_quotient = true;
    if (line.rfind("subgroup/", 0) == 0) has_subgroup = true;
  }
  CHECK(has_quotient);
  CHECK(has_subgroup);
}
