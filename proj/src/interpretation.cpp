#include "zolab/interpretation.hpp"

#include <algorithm>

#include "zolab/error.hpp"
#include "zolab/eval.hpp"

namespace zolab {

void InterpretationScheme::validate() const {
  for (const auto& p : target.predicates()) {
    auto it = predicate_formulas.find(p.name);
    if (it == predicate_formulas.end())
      throw error("interpretation scheme missing formula for target predicate " + p.name);
    const Defining& d = it->second;
    if (static_cast<int>(d.vars.size()) != p.arity)
      throw error("interpretation scheme: formula for " + p.name + " must have " +
                  std::to_string(p.arity) + " free variables");
    std::vector<std::string> declared = d.vars;
    std::sort(declared.begin(), declared.end());
    if (d.formula->free != declared)
      throw error("interpretation scheme: free variables of formula for " + p.name +
                  " do not match the declared tuple");
  }
  if (eq_formula) {
    if (eq_formula->vars.size() != 2)
      throw error("interpretation scheme: phi_= must have exactly 2 free variables");
    std::vector<std::string> declared = eq_formula->vars;
    std::sort(declared.begin(), declared.end());
    if (eq_formula->formula->free != declared)
      throw error("interpretation scheme: free variables of phi_= do not match the declared tuple");
  }
}

InterpretationScheme InterpretationScheme::identity(const Vocabulary& vocab) {
  InterpretationScheme s;
  s.source = vocab;
  s.target = vocab;
  for (const auto& p : vocab.predicates()) {
    std::vector<std::string> vars;
    std::vector<std::string> args;
    for (int i = 0; i < p.arity; ++i) {
      vars.push_back("x" + std::to_string(i + 1));
      args.push_back(vars.back());
    }
    s.predicate_formulas[p.name] = {f_atom(p.name, args), vars};
  }
  return s;
}

InterpretedStructure apply_interpretation(const InterpretationScheme& scheme,
                                          const RelationalStructure& m) {
  if (!(scheme.source == m.vocab()))
    throw error("interpretation scheme source vocabulary does not match the structure");
  scheme.validate();
  const int n = m.n();
  Evaluator ev(m);

  // Field and pairwise phi_= truth.
  std::vector<char> in_field(static_cast<std::size_t>(n) + 1, 0);
  auto eq_holds = [&](int a, int b) {
    if (!scheme.eq_formula) return a == b;
    VarAssignment asg{{scheme.eq_formula->vars[0], a}, {scheme.eq_formula->vars[1], b}};
    return ev.eval(*scheme.eq_formula->formula, asg);
  };
  for (int a = 1; a <= n; ++a) in_field[static_cast<std::size_t>(a)] = eq_holds(a, a) ? 1 : 0;

  // Union classes; verify symmetry and transitivity on the field as we go.
  std::vector<int> parent(static_cast<std::size_t>(n) + 1);
  for (int a = 0; a <= n; ++a) parent[static_cast<std::size_t>(a)] = a;
  auto find = [&](int a) {
    while (parent[static_cast<std::size_t>(a)] != a) {
      parent[static_cast<std::size_t>(a)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(a)])];
      a = parent[static_cast<std::size_t>(a)];
    }
    return a;
  };
  std::vector<std::vector<char>> rel;
  if (scheme.eq_formula) {
    rel.assign(static_cast<std::size_t>(n) + 1, std::vector<char>(static_cast<std::size_t>(n) + 1, 0));
    for (int a = 1; a <= n; ++a)
      for (int b = 1; b <= n; ++b)
        if (in_field[static_cast<std::size_t>(a)] && in_field[static_cast<std::size_t>(b)])
          rel[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = eq_holds(a, b) ? 1 : 0;
    for (int a = 1; a <= n; ++a) {
      if (!in_field[static_cast<std::size_t>(a)]) continue;
      for (int b = 1; b <= n; ++b) {
        if (!in_field[static_cast<std::size_t>(b)]) continue;
        if (rel[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] != rel[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)])
          throw error("phi_= is not symmetric on its field");
        if (rel[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]) {
          for (int c = 1; c <= n; ++c) {
            if (!in_field[static_cast<std::size_t>(c)]) continue;
            if (rel[static_cast<std::size_t>(b)][static_cast<std::size_t>(c)] && !rel[static_cast<std::size_t>(a)][static_cast<std::size_t>(c)])
              throw error("phi_= is not transitive on its field");
          }
          if (find(a) != find(b)) parent[static_cast<std::size_t>(find(a))] = find(b);
        }
      }
    }
  }

  // Class ids in order of smallest representative.
  std::vector<int> class_of(static_cast<std::size_t>(n) + 1, 0);
  std::vector<std::vector<int>> members;
  std::map<int, int> root_to_class;
  for (int a = 1; a <= n; ++a) {
    if (!in_field[static_cast<std::size_t>(a)]) continue;
    int r = find(a);
    auto it = root_to_class.find(r);
    int cls;
    if (it == root_to_class.end()) {
      members.push_back({});
      cls = static_cast<int>(members.size());
      root_to_class[r] = cls;
    } else {
      cls = it->second;
    }
    class_of[static_cast<std::size_t>(a)] = cls;
    members[static_cast<std::size_t>(cls - 1)].push_back(a);
  }
  const int nn = static_cast<int>(members.size());
  if (nn == 0) throw error("interpretation produced an empty universe");

  // Target relations under some-representatives semantics.
  std::map<std::string, std::vector<std::vector<int>>> rels;
  for (const auto& p : scheme.target.predicates()) {
    const auto& def = scheme.predicate_formulas.at(p.name);
    auto tuples = ev.eval_set(*def.formula, def.vars);
    std::vector<std::vector<int>> projected;
    for (const auto& t : tuples) {
      std::vector<int> ct(t.size());
      bool ok = true;
      for (std::size_t i = 0; i < t.size(); ++i) {
        ct[i] = class_of[static_cast<std::size_t>(t[i])];
        if (ct[i] == 0) { ok = false; break; }  // representative outside the field
      }
      if (ok) projected.push_back(std::move(ct));
    }
    rels[p.name] = std::move(projected);
  }
  return {make_structure(scheme.target, nn, std::move(rels)), std::move(class_of)};
}

}  // namespace zolab
