#include "zolab/vocabulary.hpp"

#include <set>

#include "zolab/error.hpp"

namespace zolab {

Vocabulary::Vocabulary(std::string name, std::vector<Predicate> preds)
    : name_(std::move(name)), preds_(std::move(preds)) {
  std::set<std::string> seen;
  for (const auto& p : preds_) {
    if (p.name.empty()) throw error("vocabulary '" + name_ + "': empty predicate name");
    if (p.arity < 1)
      throw error("vocabulary '" + name_ + "': predicate " + p.name + " has arity < 1");
    if (!seen.insert(p.name).second)
      throw error("vocabulary '" + name_ + "': duplicate predicate " + p.name);
  }
}

const Predicate* Vocabulary::find(std::string_view pred) const {
  for (const auto& p : preds_)
    if (p.name == pred) return &p;
  return nullptr;
}

const Predicate& Vocabulary::at(std::string_view pred) const {
  const Predicate* p = find(pred);
  if (!p) throw error("unknown predicate '" + std::string(pred) + "' in vocabulary " + name_);
  return *p;
}

bool Vocabulary::operator==(const Vocabulary& o) const {
  if (name_ != o.name_ || preds_.size() != o.preds_.size()) return false;
  for (std::size_t i = 0; i < preds_.size(); ++i) {
    if (preds_[i].name != o.preds_[i].name || preds_[i].arity != o.preds_[i].arity ||
        preds_[i].cls != o.preds_[i].cls)
      return false;
  }
  return true;
}

Vocabulary Vocabulary::graph() {
  return Vocabulary("graph", {{"R", 2, PredClass::symmetric_irreflexive}});
}

Vocabulary Vocabulary::digraph() {
  return Vocabulary("digraph", {{"R1", 2, PredClass::irreflexive}, {"R2", 2, PredClass::irreflexive}});
}

Vocabulary Vocabulary::nat() {
  return Vocabulary("nat", {{"P0", 1, PredClass::plain},
                            {"P1", 1, PredClass::plain},
                            {"Plus", 3, PredClass::plain},
                            {"Times", 3, PredClass::plain},
                            {"Less", 2, PredClass::plain}});
}

Vocabulary Vocabulary::builtin(std::string_view name) {
  if (name == "graph") return graph();
  if (name == "digraph") return digraph();
  if (name == "nat") return nat();
  throw error("unknown vocabulary '" + std::string(name) + "'");
}

}  // namespace zolab
