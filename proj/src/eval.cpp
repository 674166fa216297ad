#include "zolab/eval.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

#include "zolab/error.hpp"

namespace zolab {

namespace {

using TupleSet = std::set<std::vector<int>>;

/// Stack-discipline variable binding; later bindings shadow earlier ones.
class Env {
 public:
  explicit Env(const VarAssignment& base) {
    for (const auto& [k, v] : base) vars_.emplace_back(k, v);
  }
  int get(const std::string& name) const {
    for (auto it = vars_.rbegin(); it != vars_.rend(); ++it)
      if (it->first == name) return it->second;
    throw error("unassigned free variable '" + name + "'");
  }
  bool has(const std::string& name) const {
    for (auto it = vars_.rbegin(); it != vars_.rend(); ++it)
      if (it->first == name) return true;
    return false;
  }
  void push(const std::string& name, int v) { vars_.emplace_back(name, v); }
  void pop() { vars_.pop_back(); }

  void push_rel(const std::string& name, int arity, const TupleSet* data) {
    rels_.push_back({name, arity, data});
  }
  void pop_rel() { rels_.pop_back(); }
  const TupleSet* find_rel(const std::string& name) const {
    for (auto it = rels_.rbegin(); it != rels_.rend(); ++it)
      if (it->name == name) return it->data;
    return nullptr;
  }
  bool rels_active() const { return !rels_.empty(); }

 private:
  struct RelBinding {
    std::string name;
    int arity;
    const TupleSet* data;
  };
  std::vector<std::pair<std::string, int>> vars_;
  std::vector<RelBinding> rels_;
};

class Engine {
 public:
  explicit Engine(const RelationalStructure& m) : m_(m), n_(m.n()) {}

  bool eval(const Formula& f, Env& env) {
    switch (f.kind) {
      case FKind::atom: {
        std::vector<int> t;
        t.reserve(f.args.size());
        for (const auto& a : f.args) t.push_back(env.get(a));
        if (const TupleSet* rv = env.find_rel(f.pred)) return rv->count(t) > 0;
        return m_.holds(f.pred, t);
      }
      case FKind::eq:
        return env.get(f.args[0]) == env.get(f.args[1]);
      case FKind::neg:
        return !eval(*f.sub[0], env);
      case FKind::conj:
        for (const auto& s : f.sub)
          if (!eval(*s, env)) return false;
        return true;
      case FKind::disj:
        for (const auto& s : f.sub)
          if (eval(*s, env)) return true;
        return false;
      case FKind::exists: {
        std::vector<int> cands;
        bool guided = candidates(f.var, *f.sub[0], env, cands);
        if (guided) {
          for (int c : cands) {
            env.push(f.var, c);
            bool ok = eval(*f.sub[0], env);
            env.pop();
            if (ok) return true;
          }
          return false;
        }
        for (int c = 1; c <= n_; ++c) {
          env.push(f.var, c);
          bool ok = eval(*f.sub[0], env);
          env.pop();
          if (ok) return true;
        }
        return false;
      }
      case FKind::forall:
        for (int c = 1; c <= n_; ++c) {
          env.push(f.var, c);
          bool ok = eval(*f.sub[0], env);
          env.pop();
          if (!ok) return false;
        }
        return true;
      case FKind::lfp: {
        TupleSet fix = fixpoint(f, env);
        std::vector<int> t;
        t.reserve(f.args.size());
        for (const auto& a : f.args) t.push_back(env.get(a));
        return fix.count(t) > 0;
      }
    }
    throw error("corrupt formula node");
  }

  /// Least fixed point by stage iteration from the empty relation.  The
  /// stage sequence must be inclusion-increasing; violated monotonicity
  /// means the positivity invariant was bypassed, so it is checked here.
  TupleSet fixpoint(const Formula& f, Env& env) {
    const int arity = static_cast<int>(f.lfp_vars.size());
    TupleSet cur;
    for (;;) {
      TupleSet next;
      std::vector<int> t(static_cast<std::size_t>(arity), 1);
      if (n_ == 0) break;
      for (;;) {
        for (int i = 0; i < arity; ++i) env.push(f.lfp_vars[static_cast<std::size_t>(i)], t[static_cast<std::size_t>(i)]);
        env.push_rel(f.pred, arity, &cur);
        bool ok = eval(*f.sub[0], env);
        env.pop_rel();
        for (int i = 0; i < arity; ++i) env.pop();
        if (ok) next.insert(t);
        int pos = arity - 1;
        while (pos >= 0 && t[static_cast<std::size_t>(pos)] == n_) t[static_cast<std::size_t>(pos--)] = 1;
        if (pos < 0) break;
        ++t[static_cast<std::size_t>(pos)];
      }
      if (!std::includes(next.begin(), next.end(), cur.begin(), cur.end()))
        throw error("lfp stage sequence not monotone (positivity violated)");
      if (next.size() == cur.size()) break;
      cur = std::move(next);
    }
    return cur;
  }

  /// Candidate enumeration for an existential over `var`.  Returns false if
  /// no guide applies (caller scans the whole universe).
  bool candidates(const std::string& var, const Formula& body, Env& env, std::vector<int>& out) {
    const Formula* single = &body;
    std::vector<const Formula*> conjuncts;
    if (body.kind == FKind::conj)
      for (const auto& s : body.sub) conjuncts.push_back(s.get());
    else
      conjuncts.push_back(single);

    // 1. equality pin: v = t or t = v with t assigned.
    for (const Formula* c : conjuncts) {
      if (c->kind != FKind::eq) continue;
      const std::string &a = c->args[0], &b = c->args[1];
      if (a == var && b != var && env.has(b)) {
        out = {env.get(b)};
        return true;
      }
      if (b == var && a != var && env.has(a)) {
        out = {env.get(a)};
        return true;
      }
    }
    // 2. binary atom over a stored relation: follow adjacency.
    for (const Formula* c : conjuncts) {
      if (c->kind != FKind::atom || c->args.size() != 2) continue;
      if (env.find_rel(c->pred)) continue;
      const std::string &a = c->args[0], &b = c->args[1];
      if (a == var && b != var && env.has(b)) {
        out = m_.relation(c->pred).in(env.get(b));
        return true;
      }
      if (b == var && a != var && env.has(a)) {
        out = m_.relation(c->pred).out(env.get(a));
        return true;
      }
    }
    // 3. decidable-conjunct set guide: some conjunct mentions var and all its
    //    other free variables are assigned; enumerate its satisfying values.
    if (!env.rels_active()) {
      for (const Formula* c : conjuncts) {
        if (c->kind == FKind::neg || c->kind == FKind::forall || c->kind == FKind::lfp) continue;
        if (std::find(c->free.begin(), c->free.end(), var) == c->free.end()) continue;
        bool closed = true;
        for (const auto& v : c->free)
          if (v != var && !env.has(v)) {
            closed = false;
            break;
          }
        if (!closed) continue;
        if (set_query(*c, var, env, out)) return true;
      }
    }
    return false;
  }

  /// out := sorted values of `var` satisfying `f` under env (all other free
  /// variables assigned).  Returns false where no better-than-scan strategy
  /// exists; correctness then falls back to the caller's full scan.
  bool set_query(const Formula& f, const std::string& var, Env& env, std::vector<int>& out) {
    auto key = memo_key(f, var, env);
    auto hit = memo_.find(key);
    if (hit != memo_.end()) {
      out = hit->second;
      return true;
    }
    bool ok = set_query_raw(f, var, env, out);
    if (ok) {
      std::sort(out.begin(), out.end());
      out.erase(std::unique(out.begin(), out.end()), out.end());
      memo_.emplace(std::move(key), out);
    }
    return ok;
  }

 private:
  std::string memo_key(const Formula& f, const std::string& var, Env& env) {
    std::string k = std::to_string(reinterpret_cast<std::uintptr_t>(&f));
    k += '|';
    k += var;
    for (const auto& v : f.free)
      if (v != var) {
        k += '|';
        k += v;
        k += '=';
        k += std::to_string(env.get(v));
      }
    return k;
  }

  bool set_query_raw(const Formula& f, const std::string& var, Env& env, std::vector<int>& out) {
    out.clear();
    switch (f.kind) {
      case FKind::eq: {
        const std::string &a = f.args[0], &b = f.args[1];
        if (a == var && b == var) {
          out.resize(static_cast<std::size_t>(n_));
          for (int i = 1; i <= n_; ++i) out[static_cast<std::size_t>(i - 1)] = i;
          return true;
        }
        if (a == var) out = {env.get(b)};
        else if (b == var) out = {env.get(a)};
        else return false;
        return true;
      }
      case FKind::atom: {
        if (env.find_rel(f.pred)) return false;
        const Relation& r = m_.relation(f.pred);
        if (f.args.size() == 2) {
          const std::string &a = f.args[0], &b = f.args[1];
          if (a == var && b == var) {
            for (const auto& t : r.tuples())
              if (t[0] == t[1]) out.push_back(t[0]);
            return true;
          }
          if (b == var) {
            out = r.out(env.get(a));
            return true;
          }
          if (a == var) {
            out = r.in(env.get(b));
            return true;
          }
          return false;
        }
        // General arity: filter the tuple list on the assigned positions.
        std::vector<int> pattern(f.args.size(), 0);
        int vpos = -1;
        for (std::size_t i = 0; i < f.args.size(); ++i) {
          if (f.args[i] == var) vpos = static_cast<int>(i);
          else pattern[i] = env.get(f.args[i]);
        }
        if (vpos < 0) return false;
        for (const auto& t : r.tuples()) {
          bool match = true;
          for (std::size_t i = 0; i < t.size(); ++i) {
            if (static_cast<int>(i) == vpos) continue;
            if (f.args[i] == var) {  // var appears twice
              if (t[i] != t[static_cast<std::size_t>(vpos)]) { match = false; break; }
            } else if (t[i] != pattern[i]) { match = false; break; }
          }
          if (match) out.push_back(t[static_cast<std::size_t>(vpos)]);
        }
        return true;
      }
      case FKind::conj: {
        // Guide with the first enumerable conjunct, filter with the rest.
        for (std::size_t g = 0; g < f.sub.size(); ++g) {
          const Formula& c = *f.sub[g];
          if (std::find(c.free.begin(), c.free.end(), var) == c.free.end()) continue;
          std::vector<int> base;
          if (!set_query(c, var, env, base)) continue;
          for (int cand : base) {
            env.push(var, cand);
            bool ok = true;
            for (std::size_t i = 0; i < f.sub.size() && ok; ++i)
              if (i != g) ok = eval(*f.sub[i], env);
            env.pop();
            if (ok) out.push_back(cand);
          }
          return true;
        }
        return false;
      }
      case FKind::disj: {
        for (const auto& d : f.sub) {
          std::vector<int> part;
          if (std::find(d->free.begin(), d->free.end(), var) == d->free.end()) {
            // var-free disjunct: if it holds, every node qualifies.
            if (eval(*d, env)) {
              out.resize(static_cast<std::size_t>(n_));
              for (int i = 1; i <= n_; ++i) out[static_cast<std::size_t>(i - 1)] = i;
              return true;
            }
            continue;
          }
          if (!set_query(*d, var, env, part)) return false;
          out.insert(out.end(), part.begin(), part.end());
        }
        return true;
      }
      case FKind::exists: {
        const Formula& body = *f.sub[0];
        if (f.var == var) return false;  // shadowed; nothing to enumerate
        std::vector<int> ucands;
        bool guided = witness_candidates(f.var, body, var, env, ucands);
        if (!guided) return false;
        for (int u : ucands) {
          env.push(f.var, u);
          std::vector<int> part;
          bool ok = set_query(body, var, env, part);
          env.pop();
          if (!ok) return false;
          out.insert(out.end(), part.begin(), part.end());
        }
        return true;
      }
      default:
        return false;
    }
  }

  /// Candidates for an inner existential variable `u` ignoring conjuncts that
  /// mention the still-unassigned target `var`.
  bool witness_candidates(const std::string& u, const Formula& body, const std::string& var,
                          Env& env, std::vector<int>& out) {
    std::vector<const Formula*> conjuncts;
    if (body.kind == FKind::conj)
      for (const auto& s : body.sub) conjuncts.push_back(s.get());
    else
      conjuncts.push_back(&body);
    for (const Formula* c : conjuncts) {
      if (std::find(c->free.begin(), c->free.end(), var) != c->free.end()) continue;
      if (c->kind == FKind::eq) {
        const std::string &a = c->args[0], &b = c->args[1];
        if (a == u && b != u && env.has(b)) { out = {env.get(b)}; return true; }
        if (b == u && a != u && env.has(a)) { out = {env.get(a)}; return true; }
      }
      if (c->kind == FKind::atom && c->args.size() == 2 && !env.find_rel(c->pred)) {
        const std::string &a = c->args[0], &b = c->args[1];
        if (a == u && b != u && env.has(b)) { out = m_.relation(c->pred).in(env.get(b)); return true; }
        if (b == u && a != u && env.has(a)) { out = m_.relation(c->pred).out(env.get(a)); return true; }
      }
    }
    return false;
  }

  const RelationalStructure& m_;
  int n_;
  std::unordered_map<std::string, std::vector<int>> memo_;
};

}  // namespace

bool Evaluator::eval(const Formula& f, const VarAssignment& asg) const {
  for (const auto& v : f.free)
    if (!asg.count(v)) throw error("unassigned free variable '" + v + "'");
  Engine eng(m_);
  Env env(asg);
  return eng.eval(f, env);
}

std::vector<std::vector<int>> Evaluator::eval_set(const Formula& f,
                                                  const std::vector<std::string>& vars,
                                                  const VarAssignment& base) const {
  for (const auto& v : f.free)
    if (!base.count(v) && std::find(vars.begin(), vars.end(), v) == vars.end())
      throw error("unassigned free variable '" + v + "'");
  Engine eng(m_);
  std::vector<std::vector<int>> result;
  std::vector<int> tuple(vars.size());
  VarAssignment asg = base;
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == vars.size()) {
      Env env(asg);
      if (eng.eval(f, env)) result.push_back(tuple);
      return;
    }
    for (int c = 1; c <= m_.n(); ++c) {
      tuple[i] = c;
      asg[vars[i]] = c;
      self(self, i + 1);
    }
    asg.erase(vars[i]);
  };
  rec(rec, 0);
  return result;
}

std::vector<std::vector<int>> Evaluator::lfp_relation(const Formula& lfp_node,
                                                      const VarAssignment& asg) const {
  if (lfp_node.kind != FKind::lfp) throw error("lfp_relation: not an lfp node");
  Engine eng(m_);
  Env env(asg);
  auto fix = eng.fixpoint(lfp_node, env);
  return {fix.begin(), fix.end()};
}

bool eval_fo(const RelationalStructure& m, const Formula& f, const VarAssignment& asg) {
  return Evaluator(m).eval(f, asg);
}

bool eval_lfp(const RelationalStructure& m, const Formula& lfp_node, const VarAssignment& asg) {
  return Evaluator(m).eval(lfp_node, asg);
}

std::vector<std::vector<int>> eval_set(const RelationalStructure& m, const Formula& f,
                                       const std::vector<std::string>& vars,
                                       const VarAssignment& base) {
  return Evaluator(m).eval_set(f, vars, base);
}

}  // namespace zolab
