#ifndef ZOLAB_PHI_HPP
#define ZOLAB_PHI_HPP

#include <string>
#include <vector>

#include "zolab/structure.hpp"

namespace zolab {

/// Edge semantics for the formula triple (phi_0, phi_1, phi_2) over a fixed
/// structure.  Case B reads the two digraph relations directly; Case A
/// anchors witness-template embeddings (see templates.hpp).  Index ell is
/// 0, 1 or 2; phi_0 is the existence-question edge of the level machinery.
class PhiSystem {
 public:
  virtual ~PhiSystem() = default;
  virtual int n() const = 0;
  virtual bool holds(int ell, int a, int b) const = 0;
  virtual std::vector<int> successors(int ell, int a) const = 0;
  virtual std::vector<int> predecessors(int ell, int b) const = 0;
};

/// phi_ell(x,y) = R_ell(x,y) on a digraph structure; phi_0 = phi_1 = R1.
class RelationPhi : public PhiSystem {
 public:
  explicit RelationPhi(const RelationalStructure& m, std::string sym01 = "R1",
                       std::string sym2 = "R2");

  int n() const override { return m_.n(); }
  bool holds(int ell, int a, int b) const override;
  std::vector<int> successors(int ell, int a) const override;
  std::vector<int> predecessors(int ell, int b) const override;

 private:
  const std::string& sym(int ell) const;
  const RelationalStructure& m_;
  std::string sym01_, sym2_;
};

}  // namespace zolab

#endif
