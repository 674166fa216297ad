#ifndef ZOLAB_INTERPRETATION_HPP
#define ZOLAB_INTERPRETATION_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zolab/formula.hpp"
#include "zolab/structure.hpp"

namespace zolab {

/// One defining formula per target predicate, with its ordered free-variable
/// tuple.  phi_eq (2 variables) defaults to plain equality when absent.
struct InterpretationScheme {
  Vocabulary source;
  Vocabulary target;
  struct Defining {
    FormulaPtr formula;
    std::vector<std::string> vars;  // length = arity of the target predicate
  };
  std::map<std::string, Defining> predicate_formulas;
  std::optional<Defining> eq_formula;

  void validate() const;  // free-variable and arity checks

  /// phi_R = R, phi_eq = equality: quotient by singletons.
  static InterpretationScheme identity(const Vocabulary& vocab);
};

struct InterpretedStructure {
  RelationalStructure structure;
  /// class_of[a] = universe element of the quotient containing source node a,
  /// or 0 when a is outside the field of phi_eq.
  std::vector<int> class_of;
};

/// Quotient construction of Def-style interpretations: universe = phi_eq
/// classes of {a : M |= phi_eq(a,a)}; a target relation holds on classes iff
/// its formula holds on some representatives.  Throws if phi_eq is not an
/// equivalence on its field or the resulting universe is empty.
InterpretedStructure apply_interpretation(const InterpretationScheme& scheme,
                                          const RelationalStructure& m);

}  // namespace zolab

#endif
