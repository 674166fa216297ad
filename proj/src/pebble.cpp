#include "zolab/pebble.hpp"

#include <algorithm>
#include <unordered_set>

#include "zolab/error.hpp"
#include "zolab/rng.hpp"

namespace zolab {

namespace {

std::uint64_t map_hash(const PartialMap& f) {
  std::uint64_t h = 0x243f6a8885a308d3ULL;
  for (auto [a, b] : f) h = mix64(h ^ (static_cast<std::uint64_t>(a) << 20 | static_cast<std::uint64_t>(b)));
  return h;
}

struct MapHash {
  std::size_t operator()(const PartialMap& f) const { return static_cast<std::size_t>(map_hash(f)); }
};

using MapSet = std::unordered_set<PartialMap, MapHash>;

/// Partial isomorphism test: injective, and for every predicate and every
/// tuple over dom(f), membership agrees between the two structures.
bool is_partial_iso(const RelationalStructure& m1, const RelationalStructure& m2,
                    const PartialMap& f) {
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = i + 1; j < f.size(); ++j)
      if (f[i].second == f[j].second) return false;
  for (const auto& p : m1.vocab().predicates()) {
    const int ar = p.arity;
    std::vector<std::size_t> idx(static_cast<std::size_t>(ar), 0);
    std::vector<int> t1(static_cast<std::size_t>(ar)), t2(static_cast<std::size_t>(ar));
    if (f.empty()) continue;
    for (;;) {
      for (int i = 0; i < ar; ++i) {
        t1[static_cast<std::size_t>(i)] = f[idx[static_cast<std::size_t>(i)]].first;
        t2[static_cast<std::size_t>(i)] = f[idx[static_cast<std::size_t>(i)]].second;
      }
      if (m1.holds(p.name, t1) != m2.holds(p.name, t2)) return false;
      int pos = ar - 1;
      while (pos >= 0 && idx[static_cast<std::size_t>(pos)] + 1 == f.size()) idx[static_cast<std::size_t>(pos--)] = 0;
      if (pos < 0) break;
      ++idx[static_cast<std::size_t>(pos)];
    }
  }
  return true;
}

PartialMap with_pair(const PartialMap& f, int a, int b) {
  PartialMap g = f;
  g.emplace_back(a, b);
  std::sort(g.begin(), g.end());
  return g;
}

void enumerate_maps(const RelationalStructure& m1, const RelationalStructure& m2, int k,
                    std::size_t cap, MapSet& out) {
  // Breadth-first by size; children of non-isomorphisms cannot be
  // isomorphisms, so extending survivors only is exhaustive.
  std::vector<PartialMap> frontier{PartialMap{}};
  out.insert(PartialMap{});
  for (int s = 0; s < k; ++s) {
    std::vector<PartialMap> next;
    for (const auto& f : frontier) {
      int max_a = f.empty() ? 0 : f.back().first;
      for (int a = 1; a <= m1.n(); ++a) {
        bool used_a = false;
        for (auto [x, _] : f)
          if (x == a) { used_a = true; break; }
        if (used_a) continue;
        for (int b = 1; b <= m2.n(); ++b) {
          bool used_b = false;
          for (auto [_, y] : f)
            if (y == b) { used_b = true; break; }
          if (used_b) continue;
          // Avoid revisiting: only grow with source nodes above the largest
          // present one, except we must cover all orders... a map is a SET of
          // pairs, so growing in increasing source order enumerates each once.
          if (a < max_a) continue;
          PartialMap g = with_pair(f, a, b);
          if (out.count(g)) continue;
          if (!is_partial_iso(m1, m2, g)) continue;
          if (out.size() >= cap)
            throw error("pebble game: structures too large (position cap " +
                        std::to_string(cap) + " exceeded)");
          out.insert(g);
          next.push_back(std::move(g));
        }
      }
    }
    frontier = std::move(next);
  }
}

}  // namespace

PebbleResult pebble_equivalent(const RelationalStructure& m1, const RelationalStructure& m2, int k,
                               const PebbleOptions& opts) {
  if (k < 1) throw error("pebble game requires k >= 1");
  if (!(m1.vocab() == m2.vocab())) throw error("pebble game requires a common vocabulary");

  // Position-count estimate before enumerating.
  long double est = 0, term = 1;
  for (int s = 0; s <= k; ++s) {
    est += term;
    term *= static_cast<long double>(std::max(0, m1.n() - s)) *
            static_cast<long double>(std::max(0, m2.n() - s)) / (s + 1);
  }
  if (est > static_cast<long double>(opts.max_positions))
    throw error("pebble game: structures too large (estimated " + std::to_string((double)est) +
                " positions, cap " + std::to_string(opts.max_positions) + ")");

  MapSet family;
  enumerate_maps(m1, m2, k, opts.max_positions, family);

  // Iterated pruning.  The family stays downward closed, so a challenge on a
  // restriction f|A is exactly the full-domain challenge of the member f|A,
  // and it suffices to (1) answer single-element challenges on maps of size
  // < k and (2) drop any map whose immediate restriction has been dropped.
  auto unanswerable = [&](const PartialMap& f) {
    if (static_cast<int>(f.size()) < k) {
      for (int a = 1; a <= m1.n(); ++a) {
        bool covered = false;
        for (auto [x, _] : f)
          if (x == a) { covered = true; break; }
        if (covered) continue;
        bool ok = false;
        for (int b = 1; b <= m2.n() && !ok; ++b) ok = family.count(with_pair(f, a, b)) > 0;
        if (!ok) return true;
      }
      for (int b = 1; b <= m2.n(); ++b) {
        bool covered = false;
        for (auto [_, y] : f)
          if (y == b) { covered = true; break; }
        if (covered) continue;
        bool ok = false;
        for (int a = 1; a <= m1.n() && !ok; ++a) ok = family.count(with_pair(f, a, b)) > 0;
        if (!ok) return true;
      }
    }
    for (std::size_t i = 0; i < f.size(); ++i) {
      PartialMap r = f;
      r.erase(r.begin() + static_cast<std::ptrdiff_t>(i));
      if (!family.count(r)) return true;
    }
    return false;
  };

  PebbleResult res;
  res.rounds = 0;
  bool changed = true;
  while (changed) {
    ++res.rounds;
    changed = false;
    std::vector<PartialMap> doomed;
    for (const auto& f : family)
      if (unanswerable(f)) doomed.push_back(f);
    for (const auto& f : doomed) family.erase(f);
    if (!doomed.empty()) changed = true;
    if (!family.count(PartialMap{})) break;  // empty map died; inequivalent
  }

  res.equivalent = family.count(PartialMap{}) > 0;
  if (res.equivalent) {
    res.family.k = k;
    res.family.maps.assign(family.begin(), family.end());
    std::sort(res.family.maps.begin(), res.family.maps.end());
  }
  return res;
}

}  // namespace zolab
