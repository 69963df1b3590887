#include "kernelsplit/perm_group.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>

#include "kernelsplit/config.hpp"
#include "kernelsplit/error.hpp"

namespace ks {

std::uint64_t max_enum_order() {
  if (const char* env = std::getenv("KERNELSPLIT_MAX_ORDER")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return kDefaultMaxEnumOrder;
}

PermGroup::PermGroup(unsigned degree) : degree_(degree) {}

PermGroup::PermGroup(unsigned degree, std::vector<Perm> generators,
                     std::vector<Pt> seed_base)
    : degree_(degree) {
  for (Pt b : seed_base) {
    if (b >= degree_) fail(ErrorKind::InvalidInput, "seed base point out of range");
    append_level(b);
  }
  for (Perm& g : generators) {
    if (g.degree() != degree_)
      fail(ErrorKind::InvalidInput, "degree mismatch in generator list");
    extend_with(g);
  }
}

PermGroup PermGroup::from_generators(std::vector<Perm> generators) {
  if (generators.empty())
    fail(ErrorKind::InvalidInput, "generator list must be nonempty");
  unsigned degree = generators.front().degree();
  return PermGroup(degree, std::move(generators));
}

PermGroup group_from_generators(std::vector<Perm> generators) {
  return PermGroup::from_generators(std::move(generators));
}

void PermGroup::append_level(Pt beta) {
  Level lv;
  lv.beta = beta;
  lv.pos.assign(degree_, -1);
  lv.pos[beta] = 0;
  lv.orbit.push_back(beta);
  lv.transversal.push_back(Perm(degree_));
  levels_.push_back(std::move(lv));
}

void PermGroup::recompute_orbit(std::size_t li) {
  Level& lv = levels_[li];
  lv.pos.assign(degree_, -1);
  lv.orbit.clear();
  lv.transversal.clear();
  lv.pos[lv.beta] = 0;
  lv.orbit.push_back(lv.beta);
  lv.transversal.push_back(Perm(degree_));
  for (std::size_t qi = 0; qi < lv.orbit.size(); ++qi) {
    Pt p = lv.orbit[qi];
    for (const Perm& s : lv.gens) {
      Pt t = s[p];
      if (lv.pos[t] < 0) {
        lv.pos[t] = static_cast<std::int32_t>(lv.orbit.size());
        lv.orbit.push_back(t);
        lv.transversal.push_back(s * lv.transversal[qi]);
      }
    }
  }
}

std::pair<Perm, std::size_t> PermGroup::sift(Perm g, std::size_t from) const {
  for (std::size_t i = from; i < levels_.size(); ++i) {
    const Level& lv = levels_[i];
    Pt p = g[lv.beta];
    if (p == lv.beta) continue;
    std::int32_t pos = lv.pos[p];
    if (pos < 0) return {std::move(g), i};
    g = lv.transversal[pos].inverse() * g;
  }
  return {std::move(g), levels_.size()};
}

// Re-establishes the chain invariant at level li: every Schreier generator of
// the level must sift to the identity through the deeper chain.  Assumes the
// deeper levels are already consistent; a single pass suffices because the
// deeper chain only grows while this pass runs (membership is monotone).
void PermGroup::complete_level(std::size_t li) {
  recompute_orbit(li);
  for (std::size_t qi = 0; qi < levels_[li].orbit.size(); ++qi) {
    for (std::size_t si = 0; si < levels_[li].gens.size(); ++si) {
      // levels_ may reallocate below; take copies, not references.
      const Perm s = levels_[li].gens[si];
      Pt p = levels_[li].orbit[qi];
      std::int32_t tpos = levels_[li].pos[s[p]];
      Perm schreier =
          levels_[li].transversal[tpos].inverse() * s * levels_[li].transversal[qi];
      if (schreier.is_identity()) continue;
      auto [h, j] = sift(std::move(schreier), li + 1);
      if (h.is_identity()) continue;
      if (j == levels_.size()) append_level(static_cast<Pt>(h.lowest_moved_point()));
      for (std::size_t l = li + 1; l <= j; ++l) levels_[l].gens.push_back(h);
      for (std::size_t l = j; l > li; --l) complete_level(l);
    }
  }
}

void PermGroup::extend_with(const Perm& g) {
  if (g.degree() != degree_)
    fail(ErrorKind::InvalidInput, "degree mismatch in extend_with");
  if (g.is_identity()) return;
  auto [h, j] = sift(g, 0);
  if (h.is_identity() && j == levels_.size()) return;  // already a member
  gens_.push_back(g);
  if (j == levels_.size()) append_level(static_cast<Pt>(h.lowest_moved_point()));
  for (std::size_t l = 0; l <= j; ++l) levels_[l].gens.push_back(h);
  for (std::size_t l = j + 1; l-- > 0;) complete_level(l);
}

std::uint64_t PermGroup::order() const {
  std::uint64_t n = 1;
  for (const Level& lv : levels_) {
    std::uint64_t s = lv.orbit.size();
    if (s > 1 && n > UINT64_MAX / s)
      fail(ErrorKind::BoundExceeded, "group order exceeds 64-bit range");
    n *= s;
  }
  return n;
}

bool PermGroup::contains(const Perm& g) const {
  if (g.degree() != degree_)
    fail(ErrorKind::InvalidInput, "degree mismatch in membership test");
  auto [h, j] = sift(g, 0);
  return j == levels_.size() && h.is_identity();
}

bool PermGroup::is_abelian() const {
  for (std::size_t i = 0; i < gens_.size(); ++i)
    for (std::size_t j = i + 1; j < gens_.size(); ++j)
      if (gens_[i] * gens_[j] != gens_[j] * gens_[i]) return false;
  return true;
}

bool PermGroup::is_subgroup_of(const PermGroup& super) const {
  for (const Perm& g : gens_)
    if (!super.contains(g)) return false;
  return true;
}

std::vector<PermGroup::Pt> PermGroup::base() const {
  std::vector<Pt> b;
  b.reserve(levels_.size());
  for (const Level& lv : levels_) b.push_back(lv.beta);
  return b;
}

std::optional<Perm> PermGroup::element_with_base_images(
    std::span<const Pt> targets) const {
  if (targets.size() > levels_.size())
    fail(ErrorKind::InvalidInput, "more base image targets than base points");
  Perm acc(degree_);
  Perm acc_inv(degree_);
  for (std::size_t i = 0; i < targets.size(); ++i) {
    const Level& lv = levels_[i];
    Pt local = acc_inv[targets[i]];
    std::int32_t pos = lv.pos[local];
    if (pos < 0) return std::nullopt;
    acc = acc * lv.transversal[pos];
    acc_inv = acc.inverse();
  }
  return acc;
}

bool PermGroup::for_each_element(
    const std::function<bool(const Perm&)>& fn) const {
  // Odometer over the transversals: every element factors uniquely as
  // u_0 * u_1 * ... * u_{k-1} with u_i from level i.
  std::size_t k = levels_.size();
  if (k == 0) return fn(Perm(degree_));
  std::vector<std::size_t> idx(k, 0);
  std::vector<Perm> prefix(k, Perm(degree_));
  auto rebuild = [&](std::size_t from) {
    for (std::size_t i = from; i < k; ++i) {
      const Perm& u = levels_[i].transversal[idx[i]];
      prefix[i] = (i == 0) ? u : prefix[i - 1] * u;
    }
  };
  rebuild(0);
  while (true) {
    if (!fn(prefix[k - 1])) return false;
    std::size_t i = k;
    while (i-- > 0) {
      if (++idx[i] < levels_[i].transversal.size()) {
        rebuild(i);
        break;
      }
      idx[i] = 0;
      if (i == 0) return true;
    }
  }
}

// ---------------------------------------------------------------------------
// ElementTable

std::shared_ptr<const ElementTable> ElementTable::build(const PermGroup& g) {
  std::uint64_t n = g.order();
  if (n > max_enum_order())
    fail(ErrorKind::BoundExceeded,
         "group order " + std::to_string(n) + " exceeds enumeration cap " +
             std::to_string(max_enum_order()));

  auto table = std::shared_ptr<ElementTable>(new ElementTable());
  ElementTable& t = *table;
  t.degree_ = g.degree();
  t.gens_ = g.generators();

  // Independent exhaustive enumeration: BFS closure over the generators.
  struct BfsEntry {
    Perm perm;
    std::uint32_t parent;
    std::uint32_t gen;
  };
  std::vector<BfsEntry> bfs;
  std::unordered_map<Perm, std::uint32_t, PermHash> seen;
  bfs.push_back({Perm(t.degree_), 0, 0});
  seen.emplace(bfs[0].perm, 0);
  for (std::uint32_t qi = 0; qi < bfs.size(); ++qi) {
    for (std::uint32_t k = 0; k < t.gens_.size(); ++k) {
      Perm next = bfs[qi].perm * t.gens_[k];
      auto [it, fresh] = seen.emplace(next, static_cast<std::uint32_t>(bfs.size()));
      if (fresh) bfs.push_back({std::move(next), qi, k});
    }
  }
  if (bfs.size() != n)
    fail(ErrorKind::Internal,
         "exhaustive enumeration disagrees with chain order: " +
             std::to_string(bfs.size()) + " vs " + std::to_string(n));

  // Canonical indexing: sort by image vector; identity lands at index 0.
  std::vector<std::uint32_t> by_lex(bfs.size());
  for (std::uint32_t i = 0; i < by_lex.size(); ++i) by_lex[i] = i;
  std::sort(by_lex.begin(), by_lex.end(), [&](std::uint32_t a, std::uint32_t b) {
    return bfs[a].perm < bfs[b].perm;
  });
  std::vector<std::uint32_t> new_index(bfs.size());
  for (std::uint32_t rank = 0; rank < by_lex.size(); ++rank)
    new_index[by_lex[rank]] = rank;

  t.elements_.resize(bfs.size(), Perm());
  t.bfs_order_.resize(bfs.size());
  t.bfs_parent_.resize(bfs.size());
  t.bfs_gen_.resize(bfs.size());
  for (std::uint32_t old = 0; old < bfs.size(); ++old) {
    std::uint32_t idx = new_index[old];
    t.bfs_order_[old] = idx;
    t.bfs_parent_[idx] = new_index[bfs[old].parent];
    t.bfs_gen_[idx] = bfs[old].gen;
    t.elements_[idx] = std::move(bfs[old].perm);
  }
  t.index_.reserve(t.elements_.size() * 2);
  for (std::uint32_t i = 0; i < t.elements_.size(); ++i)
    t.index_.emplace(t.elements_[i], i);

  t.gen_index_.resize(t.gens_.size());
  for (std::uint32_t k = 0; k < t.gens_.size(); ++k)
    t.gen_index_[k] = t.index_.at(t.gens_[k]);

  t.inverse_.resize(t.elements_.size());
  t.order_.resize(t.elements_.size());
  for (std::uint32_t i = 0; i < t.elements_.size(); ++i) {
    t.inverse_[i] = t.index_.at(t.elements_[i].inverse());
    t.order_[i] = t.elements_[i].order();
  }

  // Conjugacy classes: orbits of conjugation by the generators.
  t.class_id_.assign(t.elements_.size(), UINT32_MAX);
  for (std::uint32_t i = 0; i < t.elements_.size(); ++i) {
    if (t.class_id_[i] != UINT32_MAX) continue;
    std::uint32_t cid = static_cast<std::uint32_t>(t.class_reps_.size());
    t.class_reps_.push_back(i);
    std::uint64_t size = 0;
    std::deque<std::uint32_t> queue{i};
    t.class_id_[i] = cid;
    while (!queue.empty()) {
      std::uint32_t e = queue.front();
      queue.pop_front();
      ++size;
      for (std::uint32_t k = 0; k < t.gens_.size(); ++k) {
        Perm conj = t.gens_[k] * t.elements_[e] * t.gens_[k].inverse();
        std::uint32_t ci = t.index_.at(conj);
        if (t.class_id_[ci] == UINT32_MAX) {
          t.class_id_[ci] = cid;
          queue.push_back(ci);
        }
      }
    }
    t.class_sizes_.push_back(size);
  }
  return table;
}

std::optional<std::uint32_t> ElementTable::find(const Perm& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::uint32_t ElementTable::index_of(const Perm& p) const {
  auto it = index_.find(p);
  if (it == index_.end())
    fail(ErrorKind::InvalidInput, "permutation is not an element of the group");
  return it->second;
}

std::uint32_t ElementTable::mul(std::uint32_t a, std::uint32_t b) const {
  return index_.at(elements_[a] * elements_[b]);
}

Perm ElementTable::conjugation_map(const Perm& g) const {
  Perm ginv = g.inverse();
  std::vector<Perm::Pt> images(elements_.size());
  for (std::uint32_t i = 0; i < elements_.size(); ++i)
    images[i] = static_cast<Perm::Pt>(index_.at(g * elements_[i] * ginv));
  return Perm::from_images(std::move(images));
}

Perm ElementTable::left_multiplication_map(std::uint32_t a) const {
  std::vector<Perm::Pt> images(elements_.size());
  for (std::uint32_t i = 0; i < elements_.size(); ++i)
    images[i] = static_cast<Perm::Pt>(index_.at(elements_[a] * elements_[i]));
  return Perm::from_images(std::move(images));
}

}  // namespace ks
