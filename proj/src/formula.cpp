#include "zolab/formula.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "zolab/error.hpp"

namespace zolab {

namespace {

std::vector<std::string> sorted_unique(std::vector<std::string> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::vector<std::string> minus(const std::vector<std::string>& v, const std::string& x) {
  std::vector<std::string> r;
  for (const auto& s : v)
    if (s != x) r.push_back(s);
  return r;
}

}  // namespace

FormulaPtr f_atom(std::string pred, std::vector<std::string> args) {
  auto f = std::make_shared<Formula>();
  f->kind = FKind::atom;
  f->pred = std::move(pred);
  f->args = std::move(args);
  f->free = sorted_unique(f->args);
  return f;
}

FormulaPtr f_eq(std::string a, std::string b) {
  auto f = std::make_shared<Formula>();
  f->kind = FKind::eq;
  f->args = {std::move(a), std::move(b)};
  f->free = sorted_unique(f->args);
  return f;
}

FormulaPtr f_not(FormulaPtr body) {
  auto f = std::make_shared<Formula>();
  f->kind = FKind::neg;
  f->free = body->free;
  f->sub = {std::move(body)};
  return f;
}

static FormulaPtr nary(FKind kind, std::vector<FormulaPtr> parts) {
  auto f = std::make_shared<Formula>();
  f->kind = kind;
  std::vector<std::string> fv;
  for (const auto& p : parts) fv.insert(fv.end(), p->free.begin(), p->free.end());
  f->free = sorted_unique(std::move(fv));
  f->sub = std::move(parts);
  return f;
}

FormulaPtr f_and(std::vector<FormulaPtr> parts) { return nary(FKind::conj, std::move(parts)); }
FormulaPtr f_or(std::vector<FormulaPtr> parts) { return nary(FKind::disj, std::move(parts)); }

static FormulaPtr quant(FKind kind, std::string var, FormulaPtr body) {
  auto f = std::make_shared<Formula>();
  f->kind = kind;
  f->free = minus(body->free, var);
  f->var = std::move(var);
  f->sub = {std::move(body)};
  return f;
}

FormulaPtr f_exists(std::string var, FormulaPtr body) {
  return quant(FKind::exists, std::move(var), std::move(body));
}
FormulaPtr f_forall(std::string var, FormulaPtr body) {
  return quant(FKind::forall, std::move(var), std::move(body));
}

FormulaPtr f_lfp(std::string rel, std::vector<std::string> bound, FormulaPtr body,
                 std::vector<std::string> applied) {
  if (bound.size() != applied.size())
    throw error("lfp: bound tuple and applied terms differ in length");
  if (bound.empty()) throw error("lfp: relation variable must have arity >= 1");
  if (!check_positive(*body, rel))
    throw error("relation variable " + rel + " occurs negatively under lfp");
  auto f = std::make_shared<Formula>();
  f->kind = FKind::lfp;
  f->pred = std::move(rel);
  f->lfp_vars = std::move(bound);
  std::vector<std::string> fv = body->free;
  for (const auto& v : f->lfp_vars) fv = minus(fv, v);
  fv.insert(fv.end(), applied.begin(), applied.end());
  f->free = sorted_unique(std::move(fv));
  f->args = std::move(applied);
  f->sub = {std::move(body)};
  return f;
}

namespace {

// polarity: true while under an even number of negations.
bool positive_rec(const Formula& f, const std::string& rel, bool polarity) {
  switch (f.kind) {
    case FKind::atom:
      return f.pred != rel || polarity;
    case FKind::eq:
      return true;
    case FKind::neg:
      return positive_rec(*f.sub[0], rel, !polarity);
    case FKind::lfp:
      if (f.pred == rel) return true;  // inner binder shadows
      return positive_rec(*f.sub[0], rel, polarity);
    default:
      for (const auto& s : f.sub)
        if (!positive_rec(*s, rel, polarity)) return false;
      return true;
  }
}

}  // namespace

bool check_positive(const Formula& f, const std::string& rel) { return positive_rec(f, rel, true); }

int max_subformula_free(const Formula& f) {
  int m = static_cast<int>(f.free.size());
  for (const auto& s : f.sub) m = std::max(m, max_subformula_free(*s));
  return m;
}

namespace {

void print(const Formula& f, std::ostream& os) {
  switch (f.kind) {
    case FKind::atom:
      os << f.pred << '(';
      for (std::size_t i = 0; i < f.args.size(); ++i) os << (i ? "," : "") << f.args[i];
      os << ')';
      break;
    case FKind::eq:
      os << f.args[0] << " = " << f.args[1];
      break;
    case FKind::neg:
      os << '!';
      if (f.sub[0]->kind == FKind::eq) {
        print(*f.sub[0], os);  // `!x = y` parses as !(x = y)
      } else {
        os << '(';
        print(*f.sub[0], os);
        os << ')';
      }
      break;
    case FKind::conj:
    case FKind::disj: {
      if (f.sub.empty()) {
        // Empty conjunction/disjunction: emit a tautology/contradiction over a dummy variable.
        os << (f.kind == FKind::conj ? "(x0 = x0)" : "!(x0 = x0)");
        break;
      }
      const char* op = f.kind == FKind::conj ? " & " : " | ";
      os << '(';
      for (std::size_t i = 0; i < f.sub.size(); ++i) {
        if (i) os << op;
        print(*f.sub[i], os);
      }
      os << ')';
      break;
    }
    case FKind::exists:
    case FKind::forall:
      os << (f.kind == FKind::exists ? "exists " : "forall ") << f.var << ". (";
      print(*f.sub[0], os);
      os << ')';
      break;
    case FKind::lfp:
      os << "[lfp " << f.pred << '(';
      for (std::size_t i = 0; i < f.lfp_vars.size(); ++i) os << (i ? "," : "") << f.lfp_vars[i];
      os << "). ";
      print(*f.sub[0], os);
      os << "](";
      for (std::size_t i = 0; i < f.args.size(); ++i) os << (i ? "," : "") << f.args[i];
      os << ')';
      break;
  }
}

}  // namespace

std::string to_string(const Formula& f) {
  std::ostringstream os;
  print(f, os);
  return os.str();
}

}  // namespace zolab
