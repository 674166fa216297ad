#ifndef ZOLAB_FORMULA_HPP
#define ZOLAB_FORMULA_HPP

#include <memory>
#include <string>
#include <vector>

namespace zolab {

enum class FKind { atom, eq, neg, conj, disj, exists, forall, lfp };

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

/// Immutable formula node.  Conjunction and disjunction are n-ary; `lfp`
/// introduces a relation variable `pred` with bound tuple `lfp_vars`, body
/// `sub[0]` and applied terms `args`.  Terms are variable names throughout.
struct Formula {
  FKind kind;
  std::string pred;                   // atom: predicate or relation variable; lfp: relation variable
  std::vector<std::string> args;      // atom arguments / eq pair / lfp applied terms
  std::vector<FormulaPtr> sub;        // children
  std::string var;                    // exists/forall bound variable
  std::vector<std::string> lfp_vars;  // lfp bound tuple
  std::vector<std::string> free;      // sorted free variables (cached)
};

FormulaPtr f_atom(std::string pred, std::vector<std::string> args);
FormulaPtr f_eq(std::string a, std::string b);
FormulaPtr f_not(FormulaPtr f);
FormulaPtr f_and(std::vector<FormulaPtr> parts);  // empty conjunction = true
FormulaPtr f_or(std::vector<FormulaPtr> parts);   // empty disjunction = false
FormulaPtr f_exists(std::string var, FormulaPtr body);
FormulaPtr f_forall(std::string var, FormulaPtr body);
/// Throws unless `rel` occurs only positively in `body`.
FormulaPtr f_lfp(std::string rel, std::vector<std::string> bound, FormulaPtr body,
                 std::vector<std::string> applied);

/// True iff every occurrence of `rel` in `f` is under an even number of negations.
bool check_positive(const Formula& f, const std::string& rel);

/// Largest number of free variables over all subformulas; the L_{infty,k}
/// membership check is `max_subformula_free(f) <= k`.
int max_subformula_free(const Formula& f);

/// Concrete syntax, re-parsable by parse().
std::string to_string(const Formula& f);

}  // namespace zolab

#endif
