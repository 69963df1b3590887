#include "kernelsplit/lien.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>
#include <utility>

#include "kernelsplit/catalog.hpp"
#include "kernelsplit/error.hpp"
#include "kernelsplit/structure.hpp"

namespace ks {

namespace {

// Extends generator images to the full index map over the table along the
// Cayley BFS, then verifies bijectivity and every edge; Internal on failure.
Perm automorphism_from_gen_images(const ElementTable& t,
                                  const std::vector<std::uint32_t>& gimg) {
  const std::uint32_t n = t.size();
  std::vector<std::uint32_t> img(n, 0);
  bool first = true;
  for (std::uint32_t e : t.bfs_order()) {
    if (first) {  // the identity maps to the identity
      first = false;
      continue;
    }
    img[e] = t.mul(img[t.bfs_parent(e)], gimg[t.bfs_gen(e)]);
  }
  std::vector<char> hit(n, 0);
  for (std::uint32_t e = 0; e < n; ++e) {
    if (hit[img[e]])
      fail(ErrorKind::Internal, "induced map is not a bijection");
    hit[img[e]] = 1;
  }
  for (std::uint32_t k = 0; k < t.generators().size(); ++k) {
    std::uint32_t gk = t.generator_index(k);
    for (std::uint32_t e = 0; e < n; ++e)
      if (img[t.mul(e, gk)] != t.mul(img[e], img[gk]))
        fail(ErrorKind::Internal, "induced map is not a homomorphism");
  }
  std::vector<Perm::Pt> pts(n);
  for (std::uint32_t i = 0; i < n; ++i) pts[i] = static_cast<Perm::Pt>(img[i]);
  return Perm::from_images(std::move(pts));
}

void require_characteristic(const AutData& aut, const PermGroup& n) {
  if (!is_normal_in(n, aut.base_group))
    fail(ErrorKind::NotCharacteristic, "subgroup is not normal in the kernel");
  const ElementTable& ft = *aut.table;
  for (const Perm& a : aut.aut.generators())
    for (const Perm& g : n.generators())
      if (!n.contains(ft.element(a[static_cast<Perm::Pt>(ft.index_of(g))])))
        fail(ErrorKind::NotCharacteristic,
             "subgroup is not stable under every automorphism");
}

// The automorphism of the quotient induced by an automorphism of the parent
// (well-defined because the subgroup is characteristic): each quotient-table
// generator is lifted to a coset representative, pushed through the
// automorphism, and projected back.
std::vector<std::uint32_t> induced_gen_images(const ElementTable& ft,
                                              const Perm& a_map,
                                              const CosetAction& act,
                                              const ElementTable& tbar) {
  std::vector<std::uint32_t> gimg(tbar.generators().size());
  for (std::size_t k = 0; k < tbar.generators().size(); ++k) {
    const Perm& gbar = tbar.generators()[k];
    // The quotient acts regularly, so gbar is the image of the
    // representative of the coset gbar sends coset 0 to.
    const Perm& x = act.coset_reps()[gbar[0]];
    Perm ax = ft.element(a_map[static_cast<Perm::Pt>(ft.index_of(x))]);
    gimg[k] = tbar.index_of(act.project(ax));
  }
  return gimg;
}

}  // namespace

Lien make_lien(std::shared_ptr<const AutData> aut, const PermGroup& gamma,
               std::vector<std::uint32_t> kappa) {
  if (!center(aut->base_group).is_trivial())
    fail(ErrorKind::InvalidInput,
         "kernel group must be centerless: only then is the extension "
         "realizing a kernel datum unique");
  if (gamma.order() > kMaxQuotientIndex)
    fail(ErrorKind::BoundExceeded,
         "gamma order exceeds " + std::to_string(kMaxQuotientIndex));
  ElementTablePtr gt = ElementTable::build(gamma);
  if (kappa.size() != gt->size())
    fail(ErrorKind::InvalidInput, "kappa table size does not match gamma");
  for (std::uint32_t v : kappa)
    if (v >= aut->out_order)
      fail(ErrorKind::InvalidInput, "kappa value is not an outer class id");
  if (kappa[0] != 0)
    fail(ErrorKind::InvalidInput,
         "kappa must send the identity to the trivial outer class");
  for (std::uint32_t j = 0; j < gt->size(); ++j)
    for (std::uint32_t k = 0; k < gt->size(); ++k)
      if (kappa[gt->mul(j, k)] != aut->out_mul(kappa[j], kappa[k]))
        fail(ErrorKind::InvalidInput, "kappa is not a homomorphism");
  return Lien{std::move(aut), gamma, std::move(gt), std::move(kappa)};
}

Lien make_lien(const PermGroup& f, const PermGroup& gamma,
               std::vector<std::uint32_t> kappa, CancelToken cancel) {
  auto aut = std::make_shared<const AutData>(automorphism_group(f, cancel));
  return make_lien(std::move(aut), gamma, std::move(kappa));
}

std::uint32_t Extension::gamma_index_of(const Perm& e_element) const {
  const std::uint32_t fn = f_table->size();
  const std::uint32_t p = e_element[static_cast<Perm::Pt>(fn)];
  if (p < fn)
    fail(ErrorKind::Internal, "element does not preserve the gamma block");
  return p - fn;
}

Perm Extension::gamma_element_of(const Perm& e_element) const {
  return gamma_table->element(gamma_index_of(e_element));
}

Perm Extension::aut_component(const Perm& e_element) const {
  const std::uint32_t fn = f_table->size();
  std::vector<Perm::Pt> img(fn);
  for (std::uint32_t i = 0; i < fn; ++i)
    img[i] = e_element[static_cast<Perm::Pt>(i)];
  return Perm::from_images(std::move(img));
}

Perm Extension::embed_pair(const Perm& aut_index_map,
                           std::uint32_t gamma_index) const {
  const std::uint32_t fn = f_table->size();
  const std::uint32_t gn = gamma_table->size();
  std::vector<Perm::Pt> img(fn + gn);
  for (std::uint32_t i = 0; i < fn; ++i)
    img[i] = aut_index_map[static_cast<Perm::Pt>(i)];
  Perm lm = gamma_table->left_multiplication_map(gamma_index);
  for (std::uint32_t j = 0; j < gn; ++j)
    img[fn + j] =
        static_cast<Perm::Pt>(fn + lm[static_cast<Perm::Pt>(j)]);
  return Perm::from_images(std::move(img));
}

Extension pullback_extension(const Lien& lien, CancelToken cancel) {
  const AutData& aut = *lien.aut;
  const ElementTable& ft = *aut.table;
  const ElementTable& gt = *lien.gamma_table;
  const std::uint32_t fn = ft.size();
  const std::uint32_t gn = gt.size();
  const unsigned deg = fn + gn;

  auto embed = [&](const Perm& a_map, std::uint32_t gidx) {
    std::vector<Perm::Pt> img(deg);
    for (std::uint32_t i = 0; i < fn; ++i)
      img[i] = a_map[static_cast<Perm::Pt>(i)];
    Perm lm = gt.left_multiplication_map(gidx);
    for (std::uint32_t j = 0; j < gn; ++j)
      img[fn + j] = static_cast<Perm::Pt>(fn + lm[static_cast<Perm::Pt>(j)]);
    return Perm::from_images(std::move(img));
  };

  std::vector<Perm> kernel_gens;
  for (const Perm& g : ft.generators())
    kernel_gens.push_back(embed(ft.conjugation_map(g), 0));

  std::vector<Perm> egens = kernel_gens;
  for (const Perm& g : lien.gamma.generators()) {
    std::uint32_t j = gt.index_of(g);
    egens.push_back(embed(aut.out_classes[lien.kappa[j]].representative, j));
  }

  cancel.check();
  PermGroup e(deg, std::move(egens), {static_cast<Perm::Pt>(fn)});
  if (e.order() != static_cast<std::uint64_t>(fn) * gn)
    fail(ErrorKind::Internal, "pullback extension has the wrong order");

  PermGroup f_image(deg, kernel_gens);
  if (f_image.order() != fn)
    fail(ErrorKind::Internal, "embedded kernel has the wrong order");

  GroupHom kernel_embedding(aut.table, deg, kernel_gens);
  if (!kernel_embedding.respects_products())
    fail(ErrorKind::Internal, "kernel embedding is not a homomorphism");

  // The projection kernel is exactly the embedded copy of F: every embedded
  // element fixes the gamma block pointwise by construction, and the count
  // of elements fixing the gamma identity point matches |F|.
  std::uint64_t kernel_count = 0;
  e.for_each_element([&](const Perm& x) {
    if (x[static_cast<Perm::Pt>(fn)] == fn) ++kernel_count;
    return true;
  });
  if (kernel_count != fn)
    fail(ErrorKind::Internal, "projection kernel does not match the kernel");

  return Extension{std::move(e),           std::move(kernel_embedding),
                   std::move(f_image),     aut.table,
                   lien.gamma_table,       std::nullopt};
}

bool verify_section(const Extension& ext, const GroupHom& section) {
  const ElementTable& gt = *ext.gamma_table;
  if (section.source().size() != gt.size()) return false;
  if (section.target_degree() != ext.e.degree()) return false;
  for (std::uint32_t j = 0; j < gt.size(); ++j)
    if (ext.gamma_index_of(section.apply_index(j)) != j) return false;
  for (std::uint32_t j = 0; j < gt.size(); ++j)
    for (std::uint32_t k = 0; k < gt.size(); ++k)
      if (!(section.apply_index(gt.mul(j, k)) ==
            section.apply_index(j) * section.apply_index(k)))
        return false;
  return true;
}

NeutralityResult is_neutral(const Lien& lien, CancelToken cancel) {
  Extension ext = pullback_extension(lien, cancel);
  ComplementResult comp = find_complement(ext.e, ext.f_image, cancel);

  if (comp.found) {
    const ElementTable& gt = *ext.gamma_table;
    const std::uint32_t gn = gt.size();
    std::vector<Perm> by_gamma(gn);
    std::vector<char> seen(gn, 0);
    comp.complement.for_each_element([&](const Perm& x) {
      std::uint32_t j = ext.gamma_index_of(x);
      if (seen[j])
        fail(ErrorKind::Internal, "complement meets a projection fiber twice");
      seen[j] = 1;
      by_gamma[j] = x;
      return true;
    });
    for (std::uint32_t j = 0; j < gn; ++j)
      if (!seen[j])
        fail(ErrorKind::Internal, "complement misses a projection fiber");

    std::vector<Perm> images;
    for (const Perm& g : gt.generators())
      images.push_back(by_gamma[gt.index_of(g)]);
    GroupHom section(ext.gamma_table, ext.e.degree(), std::move(images));
    if (!verify_section(ext, section))
      fail(ErrorKind::Internal, "complement did not yield a valid section");
    ext.section = std::move(section);
  }

  return NeutralityResult{comp.found, std::move(ext),
                          std::move(comp.certificate)};
}

namespace {

Lien quotient_lien_with_action(const Lien& lien, const PermGroup& n,
                               const CosetAction& act, CancelToken cancel) {
  const AutData& aut = *lien.aut;
  require_characteristic(aut, n);
  if (n.is_trivial() || n.order() == lien.f().order())
    fail(ErrorKind::InvalidInput,
         "quotient requires a proper nontrivial characteristic subgroup");

  const ElementTable& ft = *aut.table;
  PermGroup fbar = act.quotient();
  auto autbar =
      std::make_shared<const AutData>(automorphism_group(fbar, cancel));
  const ElementTable& tbar = *autbar->table;

  std::vector<std::uint32_t> kbar(lien.gamma_table->size());
  for (std::uint32_t j = 0; j < lien.gamma_table->size(); ++j) {
    const Perm& a = aut.out_classes[lien.kappa[j]].representative;
    Perm abar = automorphism_from_gen_images(
        tbar, induced_gen_images(ft, a, act, tbar));
    kbar[j] = autbar->out_class_of(abar);
  }
  return make_lien(std::move(autbar), lien.gamma, std::move(kbar));
}

}  // namespace

Lien quotient_lien(const Lien& lien, const PermGroup& n, CancelToken cancel) {
  require_characteristic(*lien.aut, n);
  if (n.is_trivial() || n.order() == lien.f().order())
    fail(ErrorKind::InvalidInput,
         "quotient requires a proper nontrivial characteristic subgroup");
  CosetAction act(lien.f(), n);
  return quotient_lien_with_action(lien, n, act, cancel);
}

namespace {

// Verifies the tower hypothesis: every composition factor is a non-abelian
// simple group and each factor's automorphism group splits over its inner
// automorphisms.  Returns the composition length (a recursion-depth bound).
std::size_t check_tower_hypothesis(const Lien& lien, ErrorKind on_failure,
                                   CancelToken cancel) {
  CompositionSeries series = composition_factors(
      lien.f(), SeriesStrategy::MaxOrderLexMin, cancel);
  for (const SimpleId& f : series.factors)
    if (f.family == SimpleFamily::Cyclic)
      fail(on_failure,
           "kernel is not anti-solvable: composition factor " + f.name());
  for (std::size_t i = 0; i + 1 < series.subgroups.size(); ++i) {
    cancel.check();
    CosetAction act(series.subgroups[i], series.subgroups[i + 1]);
    AutData factor_aut = automorphism_group(act.quotient(), cancel);
    if (!is_aut_split(factor_aut, cancel).split)
      fail(on_failure, "composition factor " + series.factors[i].name() +
                           " is not aut-split");
  }
  return series.factors.size();
}

TowerResult split_tower_impl(const Lien& lien, std::size_t depth,
                             std::size_t max_depth, CancelToken cancel) {
  if (depth > max_depth)
    fail(ErrorKind::Internal, "tower recursion exceeded composition length");
  if (depth > 0) check_tower_hypothesis(lien, ErrorKind::Internal, cancel);

  const AutData& aut = *lien.aut;
  const ElementTable& ft = *aut.table;
  const ElementTable& gt = *lien.gamma_table;
  Extension ext = pullback_extension(lien, cancel);

  std::vector<NormalSubgroup> chars = characteristic_subgroups(aut, cancel);

  if (chars.size() <= 2) {
    // Base case: a kernel with no proper nontrivial characteristic subgroup
    // (the trivial kernel gives a single entry, a characteristically simple
    // one gives two).  The automorphism group splits over the inner
    // automorphisms; composing the resulting outer-to-automorphism section
    // with kappa gives the lifts directly.
    AutSplitResult split = is_aut_split(aut, cancel);
    if (!split.split)
      fail(ErrorKind::Internal,
           "automorphism group of a hypothesis-satisfying kernel did not "
           "split");
    PermGroup comp(ft.size(), split.complement_generators);
    if (comp.order() != aut.out_order)
      fail(ErrorKind::Internal, "complement order mismatch");

    std::vector<Perm> lift_of(aut.out_order);
    std::vector<char> have(aut.out_order, 0);
    comp.for_each_element([&](const Perm& c) {
      std::uint32_t id = aut.out_class_of(c);
      if (have[id])
        fail(ErrorKind::Internal, "complement meets an outer coset twice");
      have[id] = 1;
      lift_of[id] = c;
      return true;
    });

    std::vector<Perm> images;
    for (const Perm& g : gt.generators()) {
      std::uint32_t j = gt.index_of(g);
      images.push_back(ext.embed_pair(lift_of[lien.kappa[j]], j));
    }
    GroupHom section(lien.gamma_table, ext.e.degree(), std::move(images));
    if (!verify_section(ext, section))
      fail(ErrorKind::Internal, "base-case section failed verification");
    ext.section = section;
    std::string done =
        ft.size() == 1
            ? "base: trivial kernel split through an outer-class lift"
            : "base: characteristically simple kernel of order " +
                  std::to_string(ft.size()) +
                  " split through an outer-class lift";
    return TowerResult{true, std::move(ext), std::move(section), {done}};
  }

  // Inductive case: quotient by the smallest proper nontrivial
  // characteristic subgroup, split the induced datum, pull the section back
  // to the subtower over the subgroup, and compose.
  const PermGroup& n = chars[1].group;
  CosetAction act(lien.f(), n);
  Lien lprime = quotient_lien_with_action(lien, n, act, cancel);
  TowerResult up = split_tower_impl(lprime, depth + 1, max_depth, cancel);
  const ElementTable& tbar = *up.extension.f_table;

  // Lift s'(g) from the quotient extension into this one, for each gamma
  // generator: find a ∈ Aut(F) in the kappa coset inducing exactly the
  // automorphism component of s'(g) on F/N.
  std::unordered_map<Perm, std::uint32_t, PermHash> inner_of_fbar;
  for (std::uint32_t i = 0; i < tbar.size(); ++i)
    inner_of_fbar.emplace(tbar.conjugation_map(tbar.element(i)), i);

  auto autN = std::make_shared<const AutData>(automorphism_group(n, cancel));
  const ElementTable& nt = *autN->table;

  const std::vector<Perm>& ggens = gt.generators();
  std::vector<Perm> p_of_gen(ggens.size());
  for (std::size_t k = 0; k < ggens.size(); ++k) {
    std::uint32_t j = gt.index_of(ggens[k]);
    Perm sp = up.section->apply(ggens[k]);
    Perm bbar = up.extension.aut_component(sp);
    const Perm& r = aut.out_classes[lien.kappa[j]].representative;
    Perm rbar = automorphism_from_gen_images(
        tbar, induced_gen_images(ft, r, act, tbar));
    auto it = inner_of_fbar.find(rbar.inverse() * bbar);
    if (it == inner_of_fbar.end())
      fail(ErrorKind::Internal,
           "quotient section does not lift through the kappa coset");
    // x projects onto the quotient element conjugating by which corrects r.
    const Perm& xbar = tbar.element(it->second);
    const Perm& x = act.coset_reps()[xbar[0]];
    Perm a_full = r * ft.conjugation_map(x);
    Perm check = automorphism_from_gen_images(
        tbar, induced_gen_images(ft, a_full, act, tbar));
    if (!(check == bbar))
      fail(ErrorKind::Internal, "lifted automorphism induces the wrong map");
    p_of_gen[k] = ext.embed_pair(a_full, j);
  }

  // The preimage of the lifted section inside this extension, an extension
  // of gamma by N.
  std::vector<Perm> pgens;
  for (const Perm& g : n.generators())
    pgens.push_back(ext.embed_pair(ft.conjugation_map(g), 0));
  for (const Perm& p : p_of_gen) pgens.push_back(p);
  PermGroup preimage(ext.e.degree(), pgens);
  if (preimage.order() != n.order() * gt.size())
    fail(ErrorKind::Internal, "section preimage has the wrong order");

  // The induced datum on N: gamma acts on N through conjugation inside the
  // preimage; representatives come from words in the lifted generators.
  std::vector<Perm> p_elem(gt.size());
  std::vector<Perm> restr_elem(gt.size());
  p_elem[0] = Perm(ext.e.degree());
  bool first = true;
  auto restrict_to_n = [&](const Perm& a_map) {
    std::vector<std::uint32_t> gimg(nt.generators().size());
    for (std::size_t k = 0; k < nt.generators().size(); ++k) {
      Perm image = ft.element(
          a_map[static_cast<Perm::Pt>(ft.index_of(nt.generators()[k]))]);
      auto found = nt.find(image);
      if (!found)
        fail(ErrorKind::Internal,
             "automorphism does not preserve the characteristic subgroup");
      gimg[k] = *found;
    }
    return automorphism_from_gen_images(nt, gimg);
  };
  restr_elem[0] = Perm(nt.size());
  for (std::uint32_t e : gt.bfs_order()) {
    if (first) {
      first = false;
      continue;
    }
    p_elem[e] = p_elem[gt.bfs_parent(e)] * p_of_gen[gt.bfs_gen(e)];
    restr_elem[e] = restrict_to_n(ext.aut_component(p_elem[e]));
  }
  std::vector<std::uint32_t> kappa2(gt.size(), 0);
  for (std::uint32_t j = 1; j < gt.size(); ++j)
    kappa2[j] = autN->out_class_of(restr_elem[j]);

  Lien lsub = make_lien(autN, lien.gamma, std::move(kappa2));
  TowerResult down = split_tower_impl(lsub, depth + 1, max_depth, cancel);

  // Compose: adjust each lifted generator by an element of N so that its
  // conjugation action on N matches the subtower section exactly.
  std::unordered_map<Perm, std::uint32_t, PermHash> inner_of_n;
  for (std::uint32_t i = 0; i < nt.size(); ++i)
    inner_of_n.emplace(nt.conjugation_map(nt.element(i)), i);

  std::vector<Perm> images(ggens.size());
  for (std::size_t k = 0; k < ggens.size(); ++k) {
    Perm b = down.extension.aut_component(down.section->apply(ggens[k]));
    Perm restr_g = restrict_to_n(ext.aut_component(p_of_gen[k]));
    auto it = inner_of_n.find(restr_g.inverse() * b);
    if (it == inner_of_n.end())
      fail(ErrorKind::Internal,
           "subtower section does not lift into the preimage");
    const Perm& adjust = nt.element(it->second);
    images[k] = p_of_gen[k] *
                ext.embed_pair(ft.conjugation_map(adjust), 0);
  }
  GroupHom section(lien.gamma_table, ext.e.degree(), std::move(images));
  if (!verify_section(ext, section))
    fail(ErrorKind::Internal, "composed tower section failed verification");
  ext.section = section;

  std::vector<std::string> trace;
  trace.push_back("tower: characteristic subgroup of order " +
                  std::to_string(n.order()) + " inside kernel of order " +
                  std::to_string(ft.size()));
  for (const std::string& t : up.trace) trace.push_back("quotient/" + t);
  for (const std::string& t : down.trace) trace.push_back("subgroup/" + t);
  return TowerResult{true, std::move(ext), std::move(section),
                     std::move(trace)};
}

}  // namespace

TowerResult split_via_tower(const Lien& lien, CancelToken cancel) {
  std::size_t length =
      check_tower_hypothesis(lien, ErrorKind::HypothesisFailed, cancel);
  return split_tower_impl(lien, 0, std::max<std::size_t>(length, 1) * 2 + 2,
                          cancel);
}

std::uint64_t enumerate_extensions_order2_gamma(const Lien& lien,
                                                CancelToken cancel) {
  const AutData& aut = *lien.aut;
  const ElementTable& ft = *aut.table;
  if (lien.gamma.order() != 2)
    fail(ErrorKind::InvalidInput, "enumeration requires gamma of order 2");
  if (ft.size() > kMaxUniquenessEnumOrder)
    fail(ErrorKind::BoundExceeded,
         "kernel order exceeds the enumeration bound " +
             std::to_string(kMaxUniquenessEnumOrder));
  const std::uint32_t fn = ft.size();
  const std::uint32_t cls = lien.kappa[1];

  std::unordered_map<Perm, std::uint32_t, PermHash> conj_to_elem;
  for (std::uint32_t i = 0; i < fn; ++i)
    conj_to_elem.emplace(ft.conjugation_map(ft.element(i)), i);

  // Pairs (a, z): a runs over the designated coset; z is the unique element
  // with a² = conjugation-by-z, and a must fix z.
  const Perm& rep = aut.out_classes[cls].representative;
  std::vector<Perm> as;
  std::vector<std::uint32_t> zs;
  aut.inn.for_each_element([&](const Perm& x) {
    Perm a = rep * x;
    auto it = conj_to_elem.find(a * a);
    if (it == conj_to_elem.end())
      fail(ErrorKind::Internal, "coset element squared is not inner");
    std::uint32_t z = it->second;
    if (a[static_cast<Perm::Pt>(z)] != z)
      fail(ErrorKind::Internal, "coset element does not fix its square root");
    as.push_back(std::move(a));
    zs.push_back(z);
    return true;
  });

  // Equivalence: (a1,z1) ~ (a2,z2) iff some f ∈ F realizes an isomorphism of
  // the defined extensions fixing F pointwise, i.e. a1 = conj_f ∘ a2 and
  // z1 = f · a2(f) · z2.  Both a's sit in one coset, so f always exists and
  // is unique (centerless); only the z condition can distinguish pairs.
  std::vector<std::uint32_t> parent(as.size());
  std::iota(parent.begin(), parent.end(), 0u);
  auto root = [&](std::uint32_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (std::uint32_t i = 0; i < as.size(); ++i) {
    cancel.check();
    for (std::uint32_t j = 0; j < i; ++j) {
      if (root(i) == root(j)) continue;
      auto it = conj_to_elem.find(as[i] * as[j].inverse());
      if (it == conj_to_elem.end())
        fail(ErrorKind::Internal, "coset elements differ by a non-inner map");
      std::uint32_t f = it->second;
      std::uint32_t ajf = as[j][static_cast<Perm::Pt>(f)];
      if (zs[i] == ft.mul(ft.mul(f, ajf), zs[j])) parent[root(i)] = root(j);
    }
  }
  std::uint64_t count = 0;
  for (std::uint32_t i = 0; i < as.size(); ++i)
    if (root(i) == i) ++count;
  return count;
}

std::vector<std::vector<std::uint32_t>> all_kappa_tables(
    const AutData& aut, const ElementTable& gamma_table) {
  const ElementTable& gt = gamma_table;
  const std::vector<Perm>& gens = gt.generators();
  std::vector<std::vector<std::uint32_t>> result;

  std::vector<std::uint32_t> img(gens.size(), 0);
  auto emit = [&]() {
    std::vector<std::uint32_t> table(gt.size(), 0);
    bool first = true;
    for (std::uint32_t e : gt.bfs_order()) {
      if (first) {
        first = false;
        continue;
      }
      table[e] = aut.out_mul(table[gt.bfs_parent(e)], img[gt.bfs_gen(e)]);
    }
    for (std::uint32_t j = 0; j < gt.size(); ++j)
      for (std::uint32_t k = 0; k < gt.size(); ++k)
        if (table[gt.mul(j, k)] != aut.out_mul(table[j], table[k])) return;
    result.push_back(std::move(table));
  };
  auto scan = [&](auto&& self, std::size_t slot) -> void {
    if (slot == gens.size()) {
      emit();
      return;
    }
    std::uint64_t gen_order = gt.element_order(gt.index_of(gens[slot]));
    for (std::uint32_t c = 0; c < aut.out_order; ++c) {
      if (gen_order % aut.out_classes[c].order_in_out != 0) continue;
      img[slot] = c;
      self(self, slot + 1);
    }
  };
  scan(scan, 0);  // a generatorless (trivial) gamma emits the empty product
  std::sort(result.begin(), result.end());  // canonical order: table-lex
  return result;
}

A6Report a6_counterexample(CancelToken cancel) {
  PermGroup a6 = make_alternating(6);
  auto aut = std::make_shared<const AutData>(automorphism_group(a6, cancel));
  if (aut->out_order != 4)
    fail(ErrorKind::Internal, "outer automorphism group of A6 must be order 4");

  PermGroup c2 = make_cyclic(2);
  A6Report report;
  const char* labels[3] = {"s", "p", "m"};
  for (const char* lb : labels) {
    std::uint32_t id = aut->resolve_label(lb);
    Lien lien = make_lien(aut, c2, {0, id});
    NeutralityResult nr = is_neutral(lien, cancel);
    std::uint64_t min_ord = min_order_in_coset(*aut, aut->out_classes[id]);
    report.classes.push_back({lb, id, min_ord, nr.neutral});
  }

  const A6ClassFinding& m = report.classes[2];
  report.involution_in_m_coset = m.min_order_in_coset <= 2;
  report.non_neutral_class = m.class_id;

  if (report.classes[0].neutral != true || report.classes[1].neutral != true ||
      m.neutral != false)
    fail(ErrorKind::Internal,
         "A6 neutrality pattern violated: expected exactly the involution-"
         "free class to be non-neutral");
  if (report.involution_in_m_coset)
    fail(ErrorKind::Internal,
         "A6 m-class coset unexpectedly contains an element of order <= 2");
  return report;
}

}  // namespace ks
