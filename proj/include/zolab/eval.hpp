#ifndef ZOLAB_EVAL_HPP
#define ZOLAB_EVAL_HPP

#include <map>
#include <string>
#include <vector>

#include "zolab/formula.hpp"
#include "zolab/structure.hpp"

namespace zolab {

using VarAssignment = std::map<std::string, int>;

/// Tarskian evaluation of first-order + least-fixed-point formulas.
///
/// Existential quantifiers enumerate candidates through the structure's
/// adjacency indexes whenever the body contains a binary atom or an
/// already-decidable conjunct over the quantified variable; the psi path
/// formulas are exists-heavy and interactive-speed evaluation at n ~ 10^4
/// depends on this.  All entry points are pure functions of
/// (structure, formula, assignment) and safe to call concurrently.
class Evaluator {
 public:
  explicit Evaluator(const RelationalStructure& m) : m_(m) {}

  /// Throws if a free variable of `f` is missing from `asg`.
  bool eval(const Formula& f, const VarAssignment& asg) const;

  /// Enumerate assignments of `vars` (in the given order) satisfying `f`;
  /// free variables of `f` outside `vars` must be covered by `base`.
  std::vector<std::vector<int>> eval_set(const Formula& f, const std::vector<std::string>& vars,
                                         const VarAssignment& base = {}) const;

  /// Fixpoint relation of an lfp node under `asg` (covering parameters).
  std::vector<std::vector<int>> lfp_relation(const Formula& lfp_node,
                                             const VarAssignment& asg = {}) const;

 private:
  const RelationalStructure& m_;
};

// Operation-style wrappers.
bool eval_fo(const RelationalStructure& m, const Formula& f, const VarAssignment& asg);
bool eval_lfp(const RelationalStructure& m, const Formula& lfp_node, const VarAssignment& asg);
std::vector<std::vector<int>> eval_set(const RelationalStructure& m, const Formula& f,
                                       const std::vector<std::string>& vars,
                                       const VarAssignment& base = {});

}  // namespace zolab

#endif
