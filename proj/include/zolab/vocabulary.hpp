#ifndef ZOLAB_VOCABULARY_HPP
#define ZOLAB_VOCABULARY_HPP

#include <string>
#include <string_view>
#include <vector>

namespace zolab {

/// Structural constraint attached to a predicate by its vocabulary.
enum class PredClass {
  plain,                 // no constraint
  irreflexive,           // (a,a) forbidden
  symmetric_irreflexive  // undirected edge relation: closed under swap, loops forbidden
};

struct Predicate {
  std::string name;
  int arity = 0;
  PredClass cls = PredClass::plain;
};

class Vocabulary {
 public:
  Vocabulary() = default;
  Vocabulary(std::string name, std::vector<Predicate> preds);

  const std::string& name() const { return name_; }
  const std::vector<Predicate>& predicates() const { return preds_; }
  const Predicate* find(std::string_view pred) const;
  const Predicate& at(std::string_view pred) const;  // throws on unknown symbol

  bool operator==(const Vocabulary& o) const;

  /// {R/2}, R symmetric irreflexive.
  static Vocabulary graph();
  /// {R1/2, R2/2}, both irreflexive; antiparallel pairs allowed.
  static Vocabulary digraph();
  /// {P0/1, P1/1, Plus/3, Times/3, Less/2}; + and x are kept relational.
  static Vocabulary nat();
  /// Resolve one of the three built-ins by name ("graph", "digraph", "nat").
  static Vocabulary builtin(std::string_view name);

 private:
  std::string name_;
  std::vector<Predicate> preds_;
};

}  // namespace zolab

#endif
