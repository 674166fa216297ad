#include "zolab/parser.hpp"

#include <cctype>
#include <map>

#include "zolab/error.hpp"

namespace zolab {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const Vocabulary& vocab) : text_(text), vocab_(vocab) {}

  FormulaPtr run() {
    FormulaPtr f = formula();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing input");
    return f;
  }

 private:
  std::string_view text_;
  const Vocabulary& vocab_;
  std::size_t pos_ = 0;
  std::map<std::string, int> rel_vars_;  // lfp relation variables in scope -> arity

  [[noreturn]] void fail(const std::string& msg) { throw parse_error(pos_, msg); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool eat(char c) {
    if (peek(c)) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }

  bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
  bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

  std::string ident() {
    skip_ws();
    if (pos_ >= text_.size() || !ident_start(text_[pos_])) fail("expected identifier");
    std::size_t start = pos_;
    while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  bool peek_keyword(std::string_view kw) {
    skip_ws();
    if (text_.substr(pos_, kw.size()) != kw) return false;
    std::size_t after = pos_ + kw.size();
    return after >= text_.size() || !ident_char(text_[after]);
  }

  std::vector<std::string> ident_list_paren() {
    expect('(');
    std::vector<std::string> out;
    out.push_back(ident());
    while (eat(',')) out.push_back(ident());
    expect(')');
    return out;
  }

  FormulaPtr formula() { return disjunction(); }

  FormulaPtr disjunction() {
    std::vector<FormulaPtr> parts{conjunction()};
    while (eat('|')) parts.push_back(conjunction());
    return parts.size() == 1 ? parts[0] : f_or(std::move(parts));
  }

  FormulaPtr conjunction() {
    std::vector<FormulaPtr> parts{unary()};
    while (eat('&')) parts.push_back(unary());
    return parts.size() == 1 ? parts[0] : f_and(std::move(parts));
  }

  FormulaPtr unary() {
    if (eat('!')) return f_not(unary());
    if (peek_keyword("exists") || peek_keyword("forall")) return quantified();
    return primary();
  }

  FormulaPtr quantified() {
    bool ex = peek_keyword("exists");
    pos_ += ex ? 6 : 6;
    std::string v = ident();
    expect('.');
    FormulaPtr body = formula();
    return ex ? f_exists(std::move(v), std::move(body)) : f_forall(std::move(v), std::move(body));
  }

  FormulaPtr primary() {
    skip_ws();
    if (eat('(')) {
      FormulaPtr f = formula();
      expect(')');
      return f;
    }
    if (peek('[')) return lfp();
    std::size_t at = pos_;
    std::string name = ident();
    if (peek('(')) {
      auto args = ident_list_paren();
      int arity;
      auto rv = rel_vars_.find(name);
      if (rv != rel_vars_.end()) {
        arity = rv->second;
      } else {
        const Predicate* p = vocab_.find(name);
        if (!p) {
          pos_ = at;
          fail("unknown predicate '" + name + "'");
        }
        arity = p->arity;
      }
      if (static_cast<int>(args.size()) != arity) {
        pos_ = at;
        fail("arity mismatch: " + name + " expects " + std::to_string(arity) + " arguments, got " +
             std::to_string(args.size()));
      }
      return f_atom(std::move(name), std::move(args));
    }
    if (eat('=')) return f_eq(std::move(name), ident());
    fail("expected '(' or '=' after identifier");
  }

  FormulaPtr lfp() {
    expect('[');
    skip_ws();
    if (!peek_keyword("lfp")) fail("expected 'lfp'");
    pos_ += 3;
    std::size_t at = pos_;
    std::string rel = ident();
    auto bound = ident_list_paren();
    expect('.');
    if (rel_vars_.count(rel)) fail("relation variable '" + rel + "' already in scope");
    rel_vars_[rel] = static_cast<int>(bound.size());
    FormulaPtr body = formula();
    rel_vars_.erase(rel);
    expect(']');
    auto applied = ident_list_paren();
    if (applied.size() != bound.size()) {
      pos_ = at;
      fail("lfp applied to " + std::to_string(applied.size()) + " terms but " + rel + " has arity " +
           std::to_string(bound.size()));
    }
    if (!check_positive(*body, rel)) {
      pos_ = at;
      fail("relation variable occurs negatively: " + rel);
    }
    return f_lfp(std::move(rel), std::move(bound), std::move(body), std::move(applied));
  }
};

}  // namespace

FormulaPtr parse(std::string_view text, const Vocabulary& vocab) {
  return Parser(text, vocab).run();
}

}  // namespace zolab
