#include "kernelsplit/group_ops.hpp"

#include <deque>
#include <utility>

#include "kernelsplit/config.hpp"
#include "kernelsplit/error.hpp"

namespace ks {

GroupHom::GroupHom(ElementTablePtr source, unsigned target_degree,
                   std::vector<Perm> gen_images)
    : source_(std::move(source)),
      target_degree_(target_degree),
      gen_images_(std::move(gen_images)) {
  if (!source_) fail(ErrorKind::Internal, "homomorphism needs a source table");
  if (gen_images_.size() != source_->generators().size())
    fail(ErrorKind::InvalidInput,
         "homomorphism needs one image per source generator");
  for (const Perm& p : gen_images_)
    if (p.degree() != target_degree_)
      fail(ErrorKind::InvalidInput, "generator image has the wrong degree");

  images_.assign(source_->size(), Perm());
  for (std::uint32_t e : source_->bfs_order()) {
    if (source_->element(e).is_identity())
      images_[e] = Perm(target_degree_);
    else
      images_[e] = images_[source_->bfs_parent(e)] *
                   gen_images_[source_->bfs_gen(e)];
  }
}

const Perm& GroupHom::apply(const Perm& g) const {
  return images_[source_->index_of(g)];
}

bool GroupHom::respects_products() const {
  const std::uint32_t n = source_->size();
  const std::size_t ngens = gen_images_.size();
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::size_t k = 0; k < ngens; ++k) {
      std::uint32_t ab = source_->mul(a, source_->generator_index(
                                             static_cast<std::uint32_t>(k)));
      if (images_[ab] != images_[a] * gen_images_[k]) return false;
    }
  }
  return true;
}

std::vector<std::uint32_t> GroupHom::kernel_indices() const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t e = 0; e < source_->size(); ++e)
    if (images_[e].is_identity()) out.push_back(e);
  return out;
}

PermGroup GroupHom::kernel_group() const {
  PermGroup k(source_->degree());
  for (std::uint32_t e : kernel_indices()) {
    const Perm& p = source_->element(e);
    if (!k.contains(p)) k.extend_with(p);
  }
  return k;
}

PermGroup GroupHom::image_group() const {
  return PermGroup(target_degree_, gen_images_);
}

std::vector<std::pair<Perm, std::uint64_t>> conjugacy_classes(
    const PermGroup& g) {
  ElementTablePtr t = ElementTable::build(g);
  std::vector<std::pair<Perm, std::uint64_t>> out;
  out.reserve(t->class_count());
  for (std::uint32_t c = 0; c < t->class_count(); ++c)
    out.emplace_back(t->element(t->class_rep(c)), t->class_size(c));
  return out;
}

PermGroup center(const PermGroup& g) {
  if (g.order() > max_enum_order())
    fail(ErrorKind::BoundExceeded, "group too large to enumerate its center");
  PermGroup z(g.degree());
  g.for_each_element([&](const Perm& e) {
    for (const Perm& s : g.generators())
      if (e * s != s * e) return true;
    if (!z.contains(e)) z.extend_with(e);
    return true;
  });
  return z;
}

PermGroup derived_subgroup(const PermGroup& g) {
  std::vector<Perm> commutators;
  for (const Perm& a : g.generators())
    for (const Perm& b : g.generators())
      commutators.push_back(a * b * a.inverse() * b.inverse());
  return normal_closure(g, commutators);
}

PermGroup normal_closure(const PermGroup& g, const std::vector<Perm>& seeds) {
  PermGroup h(g.degree());
  std::deque<Perm> work(seeds.begin(), seeds.end());
  while (!work.empty()) {
    Perm w = std::move(work.front());
    work.pop_front();
    if (w.degree() != g.degree())
      fail(ErrorKind::InvalidInput, "seed degree mismatch in normal closure");
    if (h.contains(w)) continue;
    h.extend_with(w);
    if (h.order() > max_enum_order())
      fail(ErrorKind::BoundExceeded, "normal closure exceeds enumeration cap");
    for (const Perm& s : g.generators()) work.push_back(s * w * s.inverse());
  }
  return h;
}

bool is_normal_in(const PermGroup& sub, const PermGroup& g) {
  if (sub.degree() != g.degree()) return false;
  if (!sub.is_subgroup_of(g)) return false;
  for (const Perm& s : g.generators())
    for (const Perm& n : sub.generators())
      if (!sub.contains(s * n * s.inverse())) return false;
  return true;
}

// Coset lookups bucket the representatives by where they can send one fixed
// point: x lies in rN exactly when x(beta) lands in r(N-orbit of beta), so
// only representatives whose bucket covers x(beta) need the exact sift test.
CosetAction::CosetAction(PermGroup g, PermGroup n)
    : parent_(std::move(g)), normal_(std::move(n)), quotient_(parent_.degree()) {
  if (normal_.degree() != parent_.degree())
    fail(ErrorKind::InvalidInput, "degree mismatch in coset action");
  if (!is_normal_in(normal_, parent_))
    fail(ErrorKind::NotNormal, "coset action requires a normal subgroup");

  const std::uint64_t index = parent_.order() / normal_.order();
  if (index > max_enum_order())
    fail(ErrorKind::BoundExceeded, "quotient too large to enumerate");

  const unsigned deg = parent_.degree();
  beta_ = 0;
  for (unsigned p = 0; p < deg; ++p) {
    bool moved = false;
    for (const Perm& s : parent_.generators())
      if (s[static_cast<Perm::Pt>(p)] != p) {
        moved = true;
        break;
      }
    if (moved) {
      beta_ = p;
      break;
    }
  }

  std::vector<Perm::Pt> nu_orbit{static_cast<Perm::Pt>(beta_)};
  std::vector<char> in_orbit(deg, 0);
  in_orbit[beta_] = 1;
  for (std::size_t qi = 0; qi < nu_orbit.size(); ++qi)
    for (const Perm& s : normal_.generators()) {
      Perm::Pt t = s[nu_orbit[qi]];
      if (!in_orbit[t]) {
        in_orbit[t] = 1;
        nu_orbit.push_back(t);
      }
    }
  n_orbit_of_beta_ = std::move(nu_orbit);

  buckets_.assign(deg, {});
  push_rep(Perm(deg));
  for (std::size_t qi = 0; qi < reps_.size(); ++qi)
    for (const Perm& s : parent_.generators()) {
      Perm x = s * reps_[qi];
      if (lookup(x) < 0) push_rep(std::move(x));
    }
  if (reps_.size() != index)
    fail(ErrorKind::Internal, "coset enumeration disagrees with group orders");

  std::vector<Perm> qgens;
  for (const Perm& s : parent_.generators()) qgens.push_back(project(s));
  quotient_ = PermGroup(static_cast<unsigned>(reps_.size()), qgens);
  if (quotient_.order() != index)
    fail(ErrorKind::Internal, "coset action order disagrees with index");
}

void CosetAction::push_rep(Perm r) {
  auto id = static_cast<std::uint32_t>(reps_.size());
  rep_inv_.push_back(r.inverse());
  for (Perm::Pt p : n_orbit_of_beta_) buckets_[r[p]].push_back(id);
  reps_.push_back(std::move(r));
}

std::int64_t CosetAction::lookup(const Perm& x) const {
  for (std::uint32_t j : buckets_[x[static_cast<Perm::Pt>(beta_)]])
    if (normal_.contains(rep_inv_[j] * x)) return j;
  return -1;
}

std::uint32_t CosetAction::coset_of(const Perm& g) const {
  std::int64_t j = lookup(g);
  if (j < 0) fail(ErrorKind::InvalidInput, "element lies outside the parent group");
  return static_cast<std::uint32_t>(j);
}

Perm CosetAction::project(const Perm& g) const {
  std::vector<Perm::Pt> images(reps_.size());
  for (std::size_t i = 0; i < reps_.size(); ++i)
    images[i] = static_cast<Perm::Pt>(coset_of(g * reps_[i]));
  return Perm::from_images(std::move(images));
}

}  // namespace ks
