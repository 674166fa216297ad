#include "zolab/paths.hpp"

#include <algorithm>
#include <set>

#include "zolab/error.hpp"

namespace zolab {

namespace {

void check_range(const PhiSystem& phi, const EtaSequence& eta, int m1, int m2, int a, int b) {
  if (m1 < 0 || m1 > m2 || static_cast<std::size_t>(m2) > eta.size())
    throw error("path indices out of range: [" + std::to_string(m1) + "," + std::to_string(m2) +
                "] with eta length " + std::to_string(eta.size()));
  if (a < 1 || a > phi.n() || b < 1 || b > phi.n()) throw error("path endpoint out of range");
}

/// Forward layers F[0..m2-m1] from a, following eta(m1..m2-1); deduped per
/// layer, revisits across layers permitted.
std::vector<std::vector<int>> forward_layers(const PhiSystem& phi, const EtaSequence& eta, int m1,
                                             int m2, int a) {
  std::vector<std::vector<int>> layers;
  layers.push_back({a});
  std::vector<char> mark(static_cast<std::size_t>(phi.n()) + 1, 0);
  for (int l = m1; l < m2; ++l) {
    std::vector<int> next;
    for (int u : layers.back())
      for (int v : phi.successors(eta.at(static_cast<std::size_t>(l)), u))
        if (!mark[static_cast<std::size_t>(v)]) {
          mark[static_cast<std::size_t>(v)] = 1;
          next.push_back(v);
        }
    for (int v : next) mark[static_cast<std::size_t>(v)] = 0;
    std::sort(next.begin(), next.end());
    layers.push_back(std::move(next));
    if (layers.back().empty()) break;
  }
  return layers;
}

/// Ancestor sets B[l] = {u in F[l] : u reaches b at step l2 following eta}
/// computed backwards; empty result vector means b not reachable.
std::vector<std::vector<int>> backward_intersect(const PhiSystem& phi, const EtaSequence& eta,
                                                 int m1, const std::vector<std::vector<int>>& fwd,
                                                 int l2, int b) {
  const std::size_t len = static_cast<std::size_t>(l2 - m1);
  std::vector<std::vector<int>> back(len + 1);
  if (fwd.size() <= len) return {};
  if (!std::binary_search(fwd[len].begin(), fwd[len].end(), b)) return {};
  back[len] = {b};
  for (std::size_t l = len; l-- > 0;) {
    std::set<int> preds;
    for (int v : back[l + 1])
      for (int u : phi.predecessors(eta.at(static_cast<std::size_t>(m1) + l), v))
        if (std::binary_search(fwd[l].begin(), fwd[l].end(), u)) preds.insert(u);
    back[l].assign(preds.begin(), preds.end());
    if (back[l].empty()) return {};  // cannot happen when b is in fwd[len]
  }
  return back;
}

std::optional<PathWitness> path_from_layers(const PhiSystem& phi, const EtaSequence& eta, int m,
                                            const std::vector<std::vector<int>>& fwd, int a, int b) {
  auto back = backward_intersect(phi, eta, 0, fwd, m, b);
  if (back.empty()) return std::nullopt;
  std::vector<int> nodes;
  nodes.reserve(static_cast<std::size_t>(m) + 1);
  for (const auto& level : back) {
    if (level.size() != 1) return std::nullopt;  // two ancestors at one level
    nodes.push_back(level[0]);
  }
  std::vector<int> sorted = nodes;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return std::nullopt;
  PathWitness w{std::move(nodes), 0, m, PathKind::path};
  (void)a;
  return w;
}

}  // namespace

std::optional<std::vector<int>> pre_path_exists(const PhiSystem& phi, const EtaSequence& eta,
                                                int m1, int m2, int a, int b) {
  check_range(phi, eta, m1, m2, a, b);
  if (m1 == m2) {
    if (a == b) return std::vector<int>{a};
    return std::nullopt;
  }
  auto fwd = forward_layers(phi, eta, m1, m2, a);
  if (fwd.size() != static_cast<std::size_t>(m2 - m1) + 1) return std::nullopt;
  if (!std::binary_search(fwd.back().begin(), fwd.back().end(), b)) return std::nullopt;
  // Reconstruct one witness by walking predecessors.
  std::vector<int> nodes(static_cast<std::size_t>(m2 - m1) + 1);
  nodes.back() = b;
  for (std::size_t l = nodes.size() - 1; l-- > 0;) {
    int ell = eta.at(static_cast<std::size_t>(m1) + l);
    int next = nodes[l + 1];
    int pick = -1;
    for (int u : fwd[l])
      if (phi.holds(ell, u, next)) {
        pick = u;
        break;
      }
    if (pick < 0) throw error("internal: broken forward layering");
    nodes[l] = pick;
  }
  return nodes;
}

std::optional<PathWitness> find_eta_path_pair(const PhiSystem& phi, const EtaSequence& eta, int m,
                                              int a, int b) {
  check_range(phi, eta, 0, m, a, b);
  if (m == 0) {
    if (a != b) return std::nullopt;
    return PathWitness{{a}, 0, 0, PathKind::path};
  }
  auto fwd = forward_layers(phi, eta, 0, m, a);
  if (fwd.size() != static_cast<std::size_t>(m) + 1) return std::nullopt;
  return path_from_layers(phi, eta, m, fwd, a, b);
}

std::optional<PathWitness> find_eta_path(const PhiSystem& phi, const EtaSequence& eta, int m) {
  if (m < 0 || static_cast<std::size_t>(m) > eta.size()) throw error("path length out of range");
  for (int a = 1; a <= phi.n(); ++a) {
    if (m == 0) return PathWitness{{a}, 0, 0, PathKind::path};
    auto fwd = forward_layers(phi, eta, 0, m, a);
    if (fwd.size() != static_cast<std::size_t>(m) + 1) continue;
    for (int b : fwd.back()) {
      auto w = path_from_layers(phi, eta, m, fwd, a, b);
      if (w) return w;
    }
  }
  return std::nullopt;
}

LengthResult length_eta(const PhiSystem& phi, const EtaSequence& eta) {
  LengthResult best;
  if (phi.n() == 0) return best;
  best.length = 0;
  best.witness = PathWitness{{1}, 0, 0, PathKind::path};
  // Paths have distinct nodes, so m <= n-1; descend per start with early exit.
  const int ub = static_cast<int>(std::min<std::size_t>(eta.size(), static_cast<std::size_t>(phi.n() - 1)));
  for (int a = 1; a <= phi.n() && best.length < ub; ++a) {
    auto fwd = forward_layers(phi, eta, 0, ub, a);
    int reach = static_cast<int>(fwd.size()) - 1;
    while (reach > 0 && fwd[static_cast<std::size_t>(reach)].empty()) --reach;
    for (int m = reach; m > best.length; --m) {
      bool found = false;
      for (int b : fwd[static_cast<std::size_t>(m)]) {
        auto w = path_from_layers(phi, eta, m, fwd, a, b);
        if (w) {
          best.length = m;
          best.witness = std::move(w);
          found = true;
          break;
        }
      }
      if (found) break;
    }
  }
  return best;
}

int length_eta_prepath(const PhiSystem& phi, const EtaSequence& eta) {
  if (phi.n() == 0) return 0;
  // Sweep with all nodes as potential starts; stop when a layer dies.
  std::vector<char> cur(static_cast<std::size_t>(phi.n()) + 1, 1);
  int m = 0;
  while (static_cast<std::size_t>(m) < eta.size()) {
    std::vector<char> next(static_cast<std::size_t>(phi.n()) + 1, 0);
    bool any = false;
    for (int u = 1; u <= phi.n(); ++u)
      if (cur[static_cast<std::size_t>(u)])
        for (int v : phi.successors(eta.at(static_cast<std::size_t>(m)), u)) {
          next[static_cast<std::size_t>(v)] = 1;
          any = true;
        }
    if (!any) break;
    cur = std::move(next);
    ++m;
  }
  return m;
}

void verify_path_witness(const PhiSystem& phi, const EtaSequence& eta, const PathWitness& w) {
  if (w.nodes.size() != static_cast<std::size_t>(w.m2 - w.m1) + 1)
    throw error("path witness: wrong node count");
  for (int l = w.m1; l < w.m2; ++l) {
    int u = w.nodes[static_cast<std::size_t>(l - w.m1)];
    int v = w.nodes[static_cast<std::size_t>(l - w.m1) + 1];
    if (!phi.holds(eta.at(static_cast<std::size_t>(l)), u, v))
      throw error("path witness: step " + std::to_string(l) + " is not a phi-edge");
  }
  if (w.kind == PathKind::pre_path) return;
  // Distinctness.
  std::vector<int> sorted = w.nodes;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw error("path witness: repeated node in a path");
  // Intermediate uniqueness for every l2, not only l2 = m2.
  auto fwd = forward_layers(phi, eta, w.m1, w.m2, w.nodes.front());
  for (int l2 = w.m1 + 1; l2 <= w.m2; ++l2) {
    auto back = backward_intersect(phi, eta, w.m1, fwd, l2,
                                   w.nodes[static_cast<std::size_t>(l2 - w.m1)]);
    if (back.empty()) throw error("path witness: endpoint not reachable");
    for (int l1 = 0; l1 < l2 - w.m1; ++l1) {
      if (back[static_cast<std::size_t>(l1)].size() != 1 ||
          back[static_cast<std::size_t>(l1)][0] != w.nodes[static_cast<std::size_t>(l1)])
        throw error("path witness: level " + std::to_string(l1 + w.m1) +
                    " ancestor set is not the path node alone (l2 = " + std::to_string(l2) + ")");
    }
  }
}

}  // namespace zolab
