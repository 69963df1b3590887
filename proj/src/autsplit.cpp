#include "kernelsplit/autsplit.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

#include "kernelsplit/error.hpp"
#include "kernelsplit/group_ops.hpp"

namespace ks {

namespace {

// True when images[] respects every Cayley edge of the table, which forces
// the full homomorphism property; bijectivity is checked separately.
bool respects_all_edges(const ElementTable& t,
                        const std::vector<std::uint32_t>& img) {
  const std::uint32_t n = t.size();
  for (std::uint32_t k = 0; k < t.generators().size(); ++k) {
    std::uint32_t gk = t.generator_index(k);
    for (std::uint32_t e = 0; e < n; ++e)
      if (img[t.mul(e, gk)] != t.mul(img[e], img[gk])) return false;
  }
  return true;
}

Perm index_map_as_perm(const std::vector<std::uint32_t>& img) {
  std::vector<Perm::Pt> pts(img.size());
  for (std::size_t i = 0; i < img.size(); ++i)
    pts[i] = static_cast<Perm::Pt>(img[i]);
  return Perm::from_images(std::move(pts));
}

struct GeneratingTuple {
  std::vector<std::uint32_t> idx;  // element indices of the chosen tuple
  std::vector<std::vector<std::uint32_t>> cands;  // per-slot candidate indices
};

GeneratingTuple choose_generating_tuple(const PermGroup& f,
                                        const ElementTable& t) {
  std::vector<std::uint32_t> pool;
  {
    std::unordered_set<std::uint32_t> seen;
    auto push = [&](std::uint32_t i) {
      if (!t.element(i).is_identity() && seen.insert(i).second)
        pool.push_back(i);
    };
    for (const Perm& g : f.generators()) push(t.index_of(g));
    for (const Perm& a : f.generators())
      for (const Perm& b : f.generators()) push(t.index_of(a * b));
  }

  // Candidate count per element: how many elements share its order and
  // conjugacy-class size (the invariants any automorphism preserves).
  std::map<std::pair<std::uint64_t, std::uint64_t>, std::uint64_t> histogram;
  for (std::uint32_t i = 0; i < t.size(); ++i)
    ++histogram[{t.element_order(i), t.class_size(t.class_of(i))}];
  auto weight = [&](std::uint32_t i) {
    return histogram[{t.element_order(i), t.class_size(t.class_of(i))}];
  };

  for (unsigned k = 1; k <= kMaxAutGeneratingSetSize; ++k) {
    std::vector<std::uint32_t> best;
    std::uint64_t best_score = UINT64_MAX;
    std::vector<std::uint32_t> combo(k);
    auto scan = [&](auto&& self, unsigned pos, std::size_t from) -> void {
      if (pos == k) {
        std::uint64_t score = 1;
        for (std::uint32_t i : combo) {
          std::uint64_t w = weight(i);
          score = score > UINT64_MAX / w ? UINT64_MAX : score * w;
        }
        if (score >= best_score) return;
        std::vector<Perm> gens;
        for (std::uint32_t i : combo) gens.push_back(t.element(i));
        if (PermGroup(t.degree(), gens).order() == t.size()) {
          best = combo;
          best_score = score;
        }
        return;
      }
      for (std::size_t i = from; i < pool.size(); ++i) {
        combo[pos] = pool[i];
        self(self, pos + 1, i + 1);
      }
    };
    scan(scan, 0, 0);
    if (!best.empty()) {
      GeneratingTuple out;
      out.idx = best;
      out.cands.resize(k);
      for (unsigned s = 0; s < k; ++s) {
        std::uint64_t od = t.element_order(best[s]);
        std::uint64_t cs = t.class_size(t.class_of(best[s]));
        for (std::uint32_t i = 0; i < t.size(); ++i)
          if (t.element_order(i) == od && t.class_size(t.class_of(i)) == cs)
            out.cands[s].push_back(i);
      }
      return out;
    }
  }
  fail(ErrorKind::InvalidInput,
       "no generating set of size <= " +
           std::to_string(kMaxAutGeneratingSetSize) + " found");
}

// Expresses each table generator as a word (slot sequence) in the tuple, so
// candidate images of the tuple determine images of the table generators.
std::vector<std::vector<unsigned>> generator_words(
    const ElementTable& t, const std::vector<std::uint32_t>& tuple) {
  const std::uint32_t n = t.size();
  std::vector<std::int64_t> parent(n, -1);
  std::vector<unsigned> via(n, 0);
  std::vector<std::uint32_t> queue{0};
  parent[0] = 0;
  for (std::size_t qi = 0; qi < queue.size(); ++qi)
    for (unsigned s = 0; s < tuple.size(); ++s) {
      std::uint32_t nx = t.mul(queue[qi], tuple[s]);
      if (parent[nx] < 0) {
        parent[nx] = queue[qi];
        via[nx] = s;
        queue.push_back(nx);
      }
    }

  std::vector<std::vector<unsigned>> words;
  for (std::uint32_t k = 0; k < t.generators().size(); ++k) {
    std::uint32_t e = t.generator_index(k);
    if (parent[e] < 0)
      fail(ErrorKind::Internal, "tuple does not reach a generator");
    std::vector<unsigned> w;
    while (e != 0) {
      w.push_back(via[e]);
      e = static_cast<std::uint32_t>(parent[e]);
    }
    std::reverse(w.begin(), w.end());
    words.push_back(std::move(w));
  }
  return words;
}

std::uint64_t min_order_over_coset(const Perm& rep, const PermGroup& inn) {
  std::uint64_t best = UINT64_MAX;
  inn.for_each_element([&](const Perm& x) {
    best = std::min(best, (rep * x).order());
    return true;
  });
  return best;
}

}  // namespace

std::uint32_t AutData::out_class_of(const Perm& automorphism) const {
  for (const OuterClass& c : out_classes)
    if (inn.contains(c.representative.inverse() * automorphism)) return c.id;
  fail(ErrorKind::InvalidInput,
       "permutation does not lie in the automorphism group");
}

std::uint32_t AutData::resolve_label(const std::string& label) const {
  auto it = labels.find(label);
  if (it == labels.end())
    fail(ErrorKind::ParseError, "unknown outer class label: " + label);
  return it->second;
}

AutData automorphism_group(const PermGroup& f, CancelToken cancel) {
  ElementTablePtr table = ElementTable::build(f);
  const ElementTable& t = *table;
  const std::uint32_t n = t.size();

  if (n == 1) {
    AutData out{f,          table, PermGroup(1), PermGroup(1), 1, {}, {}, {}};
    out.out_classes.push_back({0, "o0", Perm(1), 1});
    out.out_mult = {{0}};
    out.labels["o0"] = 0;
    return out;
  }

  GeneratingTuple tuple = choose_generating_tuple(f, t);
  const auto r = static_cast<unsigned>(tuple.idx.size());

  // Inner automorphisms: conjugation by the group's generators.
  std::vector<Perm> inn_gens;
  for (const Perm& g : f.generators()) {
    Perm c = t.conjugation_map(g);
    std::vector<std::uint32_t> img(n);
    for (std::uint32_t i = 0; i < n; ++i) img[i] = c[static_cast<Perm::Pt>(i)];
    if (!respects_all_edges(t, img))
      fail(ErrorKind::Internal, "conjugation map is not an automorphism");
    inn_gens.push_back(std::move(c));
  }
  PermGroup inn(n, inn_gens);

  std::vector<Perm::Pt> seed;
  for (std::uint32_t i : tuple.idx) seed.push_back(static_cast<Perm::Pt>(i));
  PermGroup aut(n, {}, seed);
  for (const Perm& c : inn_gens) aut.extend_with(c);

  // Relation sample: orders of all length-2 and length-3 slot words, checked
  // as soon as every slot in the word is filled.
  struct Word {
    std::vector<unsigned> slots;
    std::uint64_t order;
  };
  std::vector<std::vector<Word>> words_at(r);
  {
    std::vector<std::vector<unsigned>> shapes;
    for (unsigned i = 0; i < r; ++i)
      for (unsigned j = 0; j < r; ++j) shapes.push_back({i, j});
    for (unsigned i = 0; i < r; ++i)
      for (unsigned j = 0; j < r; ++j)
        for (unsigned l = 0; l < r; ++l) shapes.push_back({i, j, l});
    for (auto& s : shapes) {
      std::uint32_t prod = 0;
      for (unsigned slot : s) prod = t.mul(prod, tuple.idx[slot]);
      unsigned deepest = *std::max_element(s.begin(), s.end());
      words_at[deepest].push_back({std::move(s), t.element_order(prod)});
    }
  }

  const std::vector<std::vector<unsigned>> gwords =
      generator_words(t, tuple.idx);

  std::uint64_t valid = 0;
  std::vector<std::uint32_t> chosen(r, 0);
  std::vector<Perm::Pt> targets(r, 0);

  auto dfs = [&](auto&& self, unsigned depth) -> void {
    for (std::uint32_t c : tuple.cands[depth]) {
      cancel.check();
      chosen[depth] = c;
      bool ok = true;
      for (const Word& w : words_at[depth]) {
        std::uint32_t prod = 0;
        for (unsigned slot : w.slots) prod = t.mul(prod, chosen[slot]);
        if (t.element_order(prod) != w.order) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      if (depth + 1 < r) {
        self(self, depth + 1);
        continue;
      }

      for (unsigned s = 0; s < r; ++s)
        targets[s] = static_cast<Perm::Pt>(chosen[s]);
      if (aut.element_with_base_images(targets)) {
        // Some verified automorphism already realizes these images; the
        // candidate is valid and already counted inside the group.
        ++valid;
        continue;
      }

      std::vector<std::uint32_t> gimg(t.generators().size());
      for (std::size_t k = 0; k < gwords.size(); ++k) {
        std::uint32_t acc = 0;
        for (unsigned slot : gwords[k]) acc = t.mul(acc, chosen[slot]);
        gimg[k] = acc;
      }
      std::vector<std::uint32_t> img(n);
      img[0] = 0;
      bool first = true;
      for (std::uint32_t e : t.bfs_order()) {
        if (first) {  // the first BFS node is the identity
          first = false;
          continue;
        }
        img[e] = t.mul(img[t.bfs_parent(e)], gimg[t.bfs_gen(e)]);
      }
      std::vector<char> hit(n, 0);
      bool bijective = true;
      for (std::uint32_t e = 0; e < n && bijective; ++e) {
        if (hit[img[e]]) bijective = false;
        hit[img[e]] = 1;
      }
      if (!bijective || !respects_all_edges(t, img)) continue;
      aut.extend_with(index_map_as_perm(img));
      ++valid;
    }
  };
  dfs(dfs, 0);

  if (valid != aut.order())
    fail(ErrorKind::Internal,
         "automorphism count disagrees with the accumulated group: " +
             std::to_string(valid) + " vs " + std::to_string(aut.order()));
  if (!is_normal_in(inn, aut))
    fail(ErrorKind::Internal, "inner automorphisms are not normal");
  {
    PermGroup z = center(f);
    if (inn.order() * z.order() != t.size())
      fail(ErrorKind::Internal, "inner automorphism count contradicts center");
  }

  AutData out{f,   table, std::move(aut), std::move(inn),
              1,   {},    {},             {}};
  out.out_order = out.aut.order() / out.inn.order();
  if (out.out_order > kMaxQuotientIndex)
    fail(ErrorKind::BoundExceeded, "outer group exceeds the coset cap");

  // Outer cosets by breadth-first scan from the trivial coset.
  std::vector<Perm> reps{Perm(n)};
  auto coset_of = [&](const Perm& x) -> std::int64_t {
    for (std::size_t i = 0; i < reps.size(); ++i)
      if (out.inn.contains(reps[i].inverse() * x))
        return static_cast<std::int64_t>(i);
    return -1;
  };
  for (std::size_t qi = 0; qi < reps.size(); ++qi)
    for (const Perm& g : out.aut.generators()) {
      Perm x = g * reps[qi];
      if (coset_of(x) < 0) reps.push_back(std::move(x));
    }
  if (reps.size() != out.out_order)
    fail(ErrorKind::Internal, "outer coset scan disagrees with the index");

  out.out_mult.assign(reps.size(), std::vector<std::uint32_t>(reps.size()));
  for (std::size_t a = 0; a < reps.size(); ++a)
    for (std::size_t b = 0; b < reps.size(); ++b) {
      std::int64_t c = coset_of(reps[a] * reps[b]);
      if (c < 0) fail(ErrorKind::Internal, "outer cosets are not closed");
      out.out_mult[a][b] = static_cast<std::uint32_t>(c);
    }

  for (std::uint32_t c = 0; c < reps.size(); ++c) {
    std::uint64_t ord = 1;
    std::uint32_t acc = c;
    while (acc != 0) {
      acc = out.out_mult[acc][c];
      ++ord;
    }
    out.out_classes.push_back(
        {c, "o" + std::to_string(c), reps[c], ord});
    out.labels["o" + std::to_string(c)] = c;
  }

  if (out.out_order == 2) out.labels["s"] = 1;
  if (out.out_order == 4) {
    bool exponent_two = true;
    for (std::uint32_t c = 1; c < 4; ++c)
      if (out.out_classes[c].order_in_out != 2) exponent_two = false;
    if (exponent_two) {
      std::vector<std::pair<std::uint64_t, std::uint32_t>> ranked;
      for (std::uint32_t c = 1; c < 4; ++c)
        ranked.emplace_back(
            min_order_over_coset(out.out_classes[c].representative, out.inn), c);
      std::stable_sort(ranked.begin(), ranked.end(),
                       [](const auto& a, const auto& b) { return a.first < b.first; });
      const char* alias[3] = {"s", "p", "m"};
      for (unsigned i = 0; i < 3; ++i) out.labels[alias[i]] = ranked[i].second;
    }
  }
  return out;
}

std::vector<OuterClass> outer_classes(const AutData& aut) {
  return aut.out_classes;
}

AutSplitResult is_aut_split(const AutData& aut, CancelToken cancel) {
  ComplementResult r = find_complement(aut.aut, aut.inn, cancel);
  return {r.found, std::move(r.generators), std::move(r.certificate)};
}

std::uint64_t min_order_in_coset(const AutData& aut, const OuterClass& cls) {
  return min_order_over_coset(cls.representative, aut.inn);
}

std::optional<std::uint32_t> factor_swapping_class(const AutData& aut,
                                                   const PermGroup& left_factor,
                                                   const PermGroup& right_factor) {
  const ElementTable& t = *aut.table;
  auto maps_onto = [&](const Perm& a, const PermGroup& from, const PermGroup& to) {
    if (from.order() != to.order()) return false;
    for (const Perm& g : from.generators()) {
      std::uint32_t i = t.index_of(g);
      if (!to.contains(t.element(a[static_cast<Perm::Pt>(i)]))) return false;
    }
    return true;
  };
  for (const OuterClass& c : aut.out_classes)
    if (c.id != 0 && maps_onto(c.representative, left_factor, right_factor) &&
        maps_onto(c.representative, right_factor, left_factor))
      return c.id;
  return std::nullopt;
}

}  // namespace ks
