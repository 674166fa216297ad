#ifndef ZOLAB_PARSER_HPP
#define ZOLAB_PARSER_HPP

#include <string_view>

#include "zolab/formula.hpp"
#include "zolab/vocabulary.hpp"

namespace zolab {

/// Grammar: atoms `P(x,y)`, equality `x = y`, `!f`, `f & f`, `f | f`,
/// `exists x. f`, `forall x. f`, `[lfp R(x1,..,xk). f](t1,..,tk)`,
/// parentheses; `&` binds tighter than `|`; quantifiers extend as far right
/// as possible.  Predicate arities are resolved against `vocab` plus any
/// lfp-bound relation variables in scope.  Throws parse_error with the
/// offending byte offset.
FormulaPtr parse(std::string_view text, const Vocabulary& vocab);

}  // namespace zolab

#endif
