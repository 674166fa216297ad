#ifndef ZOLAB_PEBBLE_HPP
#define ZOLAB_PEBBLE_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "zolab/structure.hpp"

namespace zolab {

/// Partial map from structure 1 to structure 2, sorted by source node.
using PartialMap = std::vector<std::pair<int, int>>;

/// Witness family for k-pebble equivalence: every member is a partial
/// isomorphism with at most k pebble pairs, and the family is closed under
/// the back-and-forth extension property (drop to any <= k-1 pebbles, then
/// cover any challenged element on either side).
struct PebbleFamily {
  int k = 0;
  std::vector<PartialMap> maps;
};

struct PebbleResult {
  bool equivalent = false;
  /// Pruning iterations until the family stabilized (or the empty map died).
  int rounds = 0;
  PebbleFamily family;  // surviving maps; nonempty iff equivalent
};

struct PebbleOptions {
  /// Upper bound on the number of candidate partial maps; the position count
  /// grows like (n1*n2)^k, so oversized inputs are rejected instead of
  /// silently thrashing.
  std::size_t max_positions = 2'000'000;
};

/// Greatest-fixpoint computation of the k-pebble equivalence game: start
/// from all partial isomorphisms of size <= k and prune maps with an
/// unanswerable challenge until stable.  Equivalent iff the empty map
/// survives.  Structures must share a vocabulary.
PebbleResult pebble_equivalent(const RelationalStructure& m1, const RelationalStructure& m2, int k,
                               const PebbleOptions& opts = {});

}  // namespace zolab

#endif
