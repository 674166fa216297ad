#include "zolab/phi.hpp"

#include "zolab/error.hpp"

namespace zolab {

RelationPhi::RelationPhi(const RelationalStructure& m, std::string sym01, std::string sym2)
    : m_(m), sym01_(std::move(sym01)), sym2_(std::move(sym2)) {
  if (m_.relation(sym01_).arity() != 2 || m_.relation(sym2_).arity() != 2)
    throw error("RelationPhi requires binary relations");
}

const std::string& RelationPhi::sym(int ell) const {
  if (ell == 2) return sym2_;
  if (ell == 0 || ell == 1) return sym01_;
  throw error("phi index must be 0, 1 or 2");
}

bool RelationPhi::holds(int ell, int a, int b) const { return m_.holds2(sym(ell), a, b); }

std::vector<int> RelationPhi::successors(int ell, int a) const {
  return m_.relation(sym(ell)).out(a);
}

std::vector<int> RelationPhi::predecessors(int ell, int b) const {
  return m_.relation(sym(ell)).in(b);
}

}  // namespace zolab
