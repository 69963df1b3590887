#include "kernelsplit/complement.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "kernelsplit/error.hpp"

namespace ks {

namespace {

// Product closure of the tuple, abandoned as soon as it exceeds cap elements.
// Returns the closure when |closure| <= cap, empty vector otherwise.
std::vector<Perm> bounded_closure(const std::vector<Perm>& gens,
                                  std::uint64_t cap, unsigned degree) {
  std::vector<Perm> elems{Perm(degree)};
  std::unordered_set<Perm, PermHash> seen{elems.front()};
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (const Perm& g : gens) {
      Perm x = elems[i] * g;
      if (seen.insert(x).second) {
        if (elems.size() + 1 > cap) return {};
        elems.push_back(std::move(x));
      }
    }
  return elems;
}

}  // namespace

ComplementResult find_complement(const PermGroup& e, const PermGroup& n,
                                 CancelToken cancel) {
  if (n.degree() != e.degree())
    fail(ErrorKind::InvalidInput, "degree mismatch in complement search");
  if (!is_normal_in(n, e))
    fail(ErrorKind::NotNormal, "complement search requires a normal subgroup");

  const std::uint64_t index = e.order() / n.order();
  if (index > kMaxQuotientIndex)
    fail(ErrorKind::BoundExceeded, "quotient index exceeds the search cap");

  ComplementResult res{false, {}, PermGroup(e.degree()), {}};
  if (index == 1) {
    res.found = true;
    res.certificate.exhausted = true;
    return res;
  }

  CosetAction act(e, n);
  ElementTablePtr qt = ElementTable::build(act.quotient());

  // Quotient-table index of the element translating coset 0 to coset c.
  std::vector<std::uint32_t> table_by_coset(qt->size());
  for (std::uint32_t j = 0; j < qt->size(); ++j)
    table_by_coset[qt->element(j)[0]] = j;

  // First minimal generating tuple of the quotient, by ascending index
  // combinations.  Rank of a group of order <= 24 is at most 4 (C2^4).
  std::vector<std::uint32_t> tuple;
  for (unsigned k = 1; k <= 4 && tuple.empty(); ++k) {
    std::vector<std::uint32_t> combo(k);
    auto try_combos = [&](auto&& self, unsigned pos, std::uint32_t from) -> bool {
      if (pos == k) {
        std::vector<Perm> gens;
        for (std::uint32_t idx : combo) gens.push_back(qt->element(idx));
        if (PermGroup(qt->degree(), gens).order() == index) {
          tuple = combo;
          return true;
        }
        return false;
      }
      for (std::uint32_t i = from; i < qt->size(); ++i) {
        combo[pos] = i;
        if (self(self, pos + 1, i + 1)) return true;
      }
      return false;
    };
    try_combos(try_combos, 0, 1);  // index 0 is the identity, never needed
  }
  if (tuple.empty())
    fail(ErrorKind::Internal, "quotient has no generating tuple of size <= 4");

  const auto k = static_cast<unsigned>(tuple.size());
  for (std::uint32_t idx : tuple)
    res.certificate.quotient_gen_orders.push_back(qt->element_order(idx));

  // One streaming pass over e collects the order-exact candidates per slot.
  std::vector<std::vector<Perm>> cands(k);
  e.for_each_element([&](const Perm& x) {
    cancel.check();
    std::uint32_t j = table_by_coset[act.coset_of(x)];
    for (unsigned i = 0; i < k; ++i)
      if (tuple[i] == j && x.order() == qt->element_order(tuple[i]))
        cands[i].push_back(x);
    return true;
  });

  // Slot 0 up to n-conjugacy: conjugating a complement by an element of n
  // yields another complement with the same quotient images.
  {
    std::unordered_set<Perm, PermHash> pool(cands[0].begin(), cands[0].end());
    std::unordered_set<Perm, PermHash> visited;
    std::vector<Perm> reps;
    for (const Perm& c : cands[0]) {
      if (visited.count(c)) continue;
      reps.push_back(c);
      std::vector<Perm> orbit{c};
      visited.insert(c);
      for (std::size_t oi = 0; oi < orbit.size(); ++oi)
        for (const Perm& g : n.generators()) {
          Perm y = g * orbit[oi] * g.inverse();
          if (!pool.count(y))
            fail(ErrorKind::Internal, "conjugation left the candidate pool");
          if (visited.insert(y).second) orbit.push_back(std::move(y));
        }
    }
    cands[0] = std::move(reps);
  }

  for (unsigned i = 0; i < k; ++i)
    res.certificate.candidate_counts.push_back(cands[i].size());

  // Pairwise orders in the quotient, for pruning partial tuples.
  std::vector<std::vector<std::uint64_t>> pair_order(k,
                                                     std::vector<std::uint64_t>(k));
  for (unsigned i = 0; i < k; ++i)
    for (unsigned j = 0; j < k; ++j)
      pair_order[i][j] = qt->element_order(qt->mul(tuple[i], tuple[j]));

  std::vector<const Perm*> chosen(k, nullptr);
  auto search = [&](auto&& self, unsigned pos) -> bool {
    for (const Perm& c : cands[pos]) {
      cancel.check();
      ++res.certificate.tuples_examined;
      bool ok = true;
      for (unsigned j = 0; j < pos && ok; ++j)
        ok = (*chosen[j] * c).order() == pair_order[j][pos];
      if (!ok) continue;
      chosen[pos] = &c;
      if (pos + 1 < k) {
        if (self(self, pos + 1)) return true;
        continue;
      }
      std::vector<Perm> gens;
      for (const Perm* p : chosen) gens.push_back(*p);
      std::vector<Perm> closure = bounded_closure(gens, index, e.degree());
      if (closure.size() != index) continue;
      bool meets_n_trivially = true;
      for (const Perm& x : closure)
        if (!x.is_identity() && n.contains(x)) {
          meets_n_trivially = false;
          break;
        }
      if (!meets_n_trivially) continue;
      res.found = true;
      res.generators = std::move(gens);
      res.complement = PermGroup(e.degree(), res.generators);
      return true;
    }
    return false;
  };
  search(search, 0);
  res.certificate.exhausted = !res.found;
  return res;
}

bool verify_complement(const PermGroup& e, const PermGroup& n,
                       const PermGroup& complement) {
  if (complement.degree() != e.degree()) return false;
  if (!complement.is_subgroup_of(e)) return false;
  if (complement.order() * n.order() != e.order()) return false;
  bool trivial_meet = true;
  complement.for_each_element([&](const Perm& x) {
    if (!x.is_identity() && n.contains(x)) {
      trivial_meet = false;
      return false;
    }
    return true;
  });
  return trivial_meet;
}

}  // namespace ks
