#ifndef ZOLAB_PATHS_HPP
#define ZOLAB_PATHS_HPP

#include <optional>
#include <vector>

#include "zolab/eta.hpp"
#include "zolab/phi.hpp"

namespace zolab {

enum class PathKind { pre_path, path };

/// Node sequence a_{m1},...,a_{m2} following phi_{eta(l)} at step l.  For
/// kind == path the nodes are pairwise distinct and every intermediate node
/// is determined by the endpoints (singleton ancestor sets per level).
struct PathWitness {
  std::vector<int> nodes;  // length m2 - m1 + 1
  int m1 = 0;
  int m2 = 0;
  PathKind kind = PathKind::pre_path;
};

/// Layered forward search from a; revisits across levels are allowed.
/// Returns a witness sequence when b is reached at exactly step m2.
std::optional<std::vector<int>> pre_path_exists(const PhiSystem& phi, const EtaSequence& eta,
                                                int m1, int m2, int a, int b);

/// Is there an (eta,m)-path from a to b?  Checks the pre-path layering, the
/// per-level singleton-ancestor condition relative to (a, b), and node
/// distinctness; returns the witness if all hold.
std::optional<PathWitness> find_eta_path_pair(const PhiSystem& phi, const EtaSequence& eta, int m,
                                              int a, int b);

/// First (eta,m)-path found over all start nodes (ascending ids).
std::optional<PathWitness> find_eta_path(const PhiSystem& phi, const EtaSequence& eta, int m);

/// Maximal m <= eta.size() such that an (eta,m)-path exists, with a witness.
/// m = 0 always qualifies on a nonempty structure (single-node path).
struct LengthResult {
  int length = 0;
  std::optional<PathWitness> witness;
};
LengthResult length_eta(const PhiSystem& phi, const EtaSequence& eta);

/// Maximal m <= eta.size() such that a pre-(eta,0,m)-path exists anywhere.
int length_eta_prepath(const PhiSystem& phi, const EtaSequence& eta);

/// Full Def-style verification of a witness (pre-path steps; for paths also
/// the quantified intermediate-uniqueness condition for every endpoint pair
/// l1 < l2, not only l2 = m2, and distinctness).  Throws on violation.
void verify_path_witness(const PhiSystem& phi, const EtaSequence& eta, const PathWitness& w);

}  // namespace zolab

#endif
