#include "kernelsplit/structure.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "kernelsplit/catalog.hpp"
#include "kernelsplit/error.hpp"
#include "kernelsplit/group_ops.hpp"

namespace ks {

namespace {

std::vector<std::uint32_t> member_indices(const ElementTable& t,
                                          const PermGroup& sub) {
  std::vector<std::uint32_t> out;
  out.reserve(sub.order());
  sub.for_each_element([&](const Perm& x) {
    out.push_back(t.index_of(x));
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<NormalSubgroup> normal_subgroups_impl(const ElementTable& t,
                                                  const PermGroup& g,
                                                  CancelToken cancel) {
  // Keyed by sorted member list so joins deduplicate structurally.
  std::map<std::vector<std::uint32_t>, PermGroup> found;
  found.emplace(std::vector<std::uint32_t>{0}, PermGroup(g.degree()));

  std::vector<std::vector<std::uint32_t>> worklist;
  for (std::uint32_t c = 0; c < t.class_count(); ++c) {
    cancel.check();
    PermGroup closure = normal_closure(g, {t.element(t.class_rep(c))});
    auto members = member_indices(t, closure);
    if (found.emplace(members, std::move(closure)).second)
      worklist.push_back(std::move(members));
  }

  // Join closure: the join of two normal subgroups is generated by the union
  // of their generators and is again normal.
  for (std::size_t wi = 0; wi < worklist.size(); ++wi) {
    std::vector<std::pair<std::vector<std::uint32_t>, PermGroup>> snapshot;
    for (const auto& [members, sub] : found) snapshot.emplace_back(members, sub);
    for (const auto& [members, sub] : snapshot) {
      cancel.check();
      const PermGroup& a = found.at(worklist[wi]);
      std::vector<Perm> gens = a.generators();
      for (const Perm& x : sub.generators()) gens.push_back(x);
      PermGroup join(g.degree(), gens);
      if (join.order() == a.order() || join.order() == sub.order()) continue;
      auto jm = member_indices(t, join);
      if (found.emplace(jm, std::move(join)).second)
        worklist.push_back(std::move(jm));
    }
  }

  std::vector<NormalSubgroup> out;
  for (auto& [members, sub] : found) {
    if (!is_normal_in(sub, g))
      fail(ErrorKind::Internal, "join of normal subgroups is not normal");
    out.push_back({std::move(sub), members});
  }
  std::sort(out.begin(), out.end(),
            [](const NormalSubgroup& a, const NormalSubgroup& b) {
              if (a.members.size() != b.members.size())
                return a.members.size() < b.members.size();
              return a.members < b.members;
            });
  if (out.empty() || out.back().order() != g.order())
    fail(ErrorKind::Internal, "normal subgroup closure missed the full group");
  return out;
}

}  // namespace

std::vector<NormalSubgroup> normal_subgroups(const PermGroup& g,
                                             CancelToken cancel) {
  ElementTablePtr t = ElementTable::build(g);
  return normal_subgroups_impl(*t, g, cancel);
}

std::vector<NormalSubgroup> characteristic_subgroups(const AutData& aut,
                                                     CancelToken cancel) {
  const ElementTable& t = *aut.table;
  std::vector<NormalSubgroup> all =
      normal_subgroups_impl(t, aut.base_group, cancel);

  std::vector<NormalSubgroup> out;
  for (NormalSubgroup& n : all) {
    std::vector<char> inside(t.size(), 0);
    for (std::uint32_t m : n.members) inside[m] = 1;
    // Stability under the automorphism generators implies stability under the
    // whole automorphism group; checking generator images of the subgroup's
    // generators suffices because images generate the image subgroup.
    bool stable = true;
    for (const Perm& a : aut.aut.generators()) {
      for (const Perm& gen : n.group.generators())
        if (!inside[a[static_cast<Perm::Pt>(t.index_of(gen))]]) {
          stable = false;
          break;
        }
      if (!stable) break;
    }
    if (stable) out.push_back(std::move(n));
  }
  return out;
}

bool is_characteristically_simple(const AutData& aut, CancelToken cancel) {
  if (aut.base_group.is_trivial()) return false;
  return characteristic_subgroups(aut, cancel).size() == 2;
}

namespace {

using Fingerprint = std::vector<std::pair<std::uint64_t, std::uint64_t>>;

Fingerprint fingerprint_of(const PermGroup& g) {
  ElementTablePtr t = ElementTable::build(g);
  Fingerprint fp;
  for (std::uint32_t c = 0; c < t->class_count(); ++c)
    fp.emplace_back(t->element_order(t->class_rep(c)), t->class_size(c));
  std::sort(fp.begin(), fp.end());
  return fp;
}

struct Reference {
  SimpleId id;
  PermGroup (*make)();
};

const std::vector<Reference>& reference_table() {
  static const std::vector<Reference> refs = {
      {{SimpleFamily::Alternating, 5, 60}, [] { return make_alternating(5); }},
      {{SimpleFamily::PSL2, 7, 168}, [] { return make_psl2(7); }},
      {{SimpleFamily::Alternating, 6, 360}, [] { return make_alternating(6); }},
      {{SimpleFamily::PSL2, 8, 504}, [] { return make_psl2(8); }},
      {{SimpleFamily::PSL2, 11, 660}, [] { return make_psl2(11); }},
      {{SimpleFamily::PSL2, 13, 1092}, [] { return make_psl2(13); }},
      {{SimpleFamily::Alternating, 7, 2520}, [] { return make_alternating(7); }},
      {{SimpleFamily::Alternating, 8, 20160}, [] { return make_alternating(8); }},
  };
  return refs;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

std::string SimpleId::name() const {
  switch (family) {
    case SimpleFamily::Cyclic:
      return "C" + std::to_string(parameter);
    case SimpleFamily::Alternating:
      return "A" + std::to_string(parameter);
    case SimpleFamily::PSL2:
      return "PSL(2," + std::to_string(parameter) + ")";
    case SimpleFamily::Unknown:
      return "?" + std::to_string(order);
  }
  return "?";
}

SimpleId identify_simple(const PermGroup& g) {
  const std::uint64_t n = g.order();
  if (n == 1) fail(ErrorKind::InvalidInput, "the trivial group is not simple");
  if (is_prime(n)) return {SimpleFamily::Cyclic, n, n};

  static std::map<std::uint64_t, std::vector<std::pair<SimpleId, Fingerprint>>>
      cache;
  auto it = cache.find(n);
  if (it == cache.end()) {
    std::vector<std::pair<SimpleId, Fingerprint>> entry;
    for (const Reference& r : reference_table())
      if (r.id.order == n) entry.emplace_back(r.id, fingerprint_of(r.make()));
    it = cache.emplace(n, std::move(entry)).first;
  }

  if (!it->second.empty()) {
    Fingerprint fp = fingerprint_of(g);
    for (const auto& [id, ref_fp] : it->second)
      if (fp == ref_fp) return id;
  }
  return {SimpleFamily::Unknown, 0, n};
}

CompositionSeries composition_factors(const PermGroup& g,
                                      SeriesStrategy strategy,
                                      CancelToken cancel) {
  CompositionSeries series;
  series.subgroups.push_back(g);
  PermGroup current = g;
  while (current.order() > 1) {
    cancel.check();
    std::vector<NormalSubgroup> norms = normal_subgroups(current, cancel);
    norms.pop_back();  // drop the full group; the rest are proper

    // Keep only subgroups maximal under inclusion among the proper ones.
    std::vector<const NormalSubgroup*> maximal;
    for (const NormalSubgroup& a : norms) {
      bool covered = false;
      for (const NormalSubgroup& b : norms) {
        if (&a == &b || a.members.size() >= b.members.size()) continue;
        if (std::includes(b.members.begin(), b.members.end(),
                          a.members.begin(), a.members.end())) {
          covered = true;
          break;
        }
      }
      if (!covered) maximal.push_back(&a);
    }
    if (maximal.empty())
      fail(ErrorKind::Internal, "no maximal proper normal subgroup found");

    // norms is sorted by (order asc, members lex asc), and `maximal`
    // preserves that order.
    const NormalSubgroup* chosen = nullptr;
    if (strategy == SeriesStrategy::MaxOrderLexMin) {
      std::uint64_t best = 0;
      for (const NormalSubgroup* n : maximal) best = std::max(best, n->order());
      for (const NormalSubgroup* n : maximal)
        if (n->order() == best) {
          chosen = n;
          break;
        }
    } else {
      std::uint64_t best = UINT64_MAX;
      for (const NormalSubgroup* n : maximal) best = std::min(best, n->order());
      for (const NormalSubgroup* n : maximal)
        if (n->order() == best) chosen = n;  // last lex wins
    }

    CosetAction act(current, chosen->group);
    series.factors.push_back(identify_simple(act.quotient()));
    current = chosen->group;
    series.subgroups.push_back(current);
  }
  std::reverse(series.factors.begin(), series.factors.end());
  return series;
}

bool is_anti_solvable(const PermGroup& g, CancelToken cancel) {
  for (const SimpleId& f :
       composition_factors(g, SeriesStrategy::MaxOrderLexMin, cancel).factors)
    if (f.family == SimpleFamily::Cyclic) return false;
  return true;
}

}  // namespace ks
