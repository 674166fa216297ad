#ifndef ZOLAB_STRUCTURE_HPP
#define ZOLAB_STRUCTURE_HPP

#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "zolab/vocabulary.hpp"

namespace zolab {

/// Interpretation of one predicate: a set of tuples over {1..n}, kept in
/// lexicographic order.  Binary relations additionally carry out/in adjacency
/// indexes; the samplers produce far fewer than n^2 edges, so evaluation
/// must never scan the full square.
class Relation {
 public:
  Relation() = default;
  Relation(int arity, int n, std::vector<std::vector<int>> tuples);

  int arity() const { return arity_; }
  std::size_t size() const { return tuples_.size(); }
  const std::vector<std::vector<int>>& tuples() const { return tuples_; }
  bool contains(std::span<const int> t) const;

  // Binary relations only.
  const std::vector<int>& out(int v) const;
  const std::vector<int>& in(int v) const;

 private:
  int arity_ = 0;
  int n_ = 0;
  std::vector<std::vector<int>> tuples_;
  std::vector<std::vector<int>> out_, in_;
};

/// Finite relational structure with universe {1..n}.  Immutable after
/// construction; safe to share across concurrent readers.
class RelationalStructure {
 public:
  RelationalStructure(Vocabulary vocab, int n,
                      std::map<std::string, std::vector<std::vector<int>>> relations);

  const Vocabulary& vocab() const { return vocab_; }
  int n() const { return n_; }
  const Relation& relation(std::string_view pred) const;
  bool holds(std::string_view pred, std::span<const int> t) const {
    return relation(pred).contains(t);
  }
  bool holds2(std::string_view pred, int a, int b) const {
    int t[2] = {a, b};
    return relation(pred).contains(t);
  }

  /// Same vocabulary, same n, same tuple sets.  No isomorphism search.
  bool operator==(const RelationalStructure& o) const;

  /// Text format: `vocab <name>`, `n <size>`, one `<Pred> v1 .. vk` line per
  /// tuple in canonical (predicate declaration, then lexicographic) order;
  /// `#` starts a comment.  write o read = identity on canonical files.
  void write_text(std::ostream& os) const;
  static RelationalStructure read_text(std::istream& is);
  std::string to_text() const;

 private:
  Vocabulary vocab_;
  int n_ = 0;
  std::map<std::string, Relation> rels_;
};

/// Validating constructor wrapper; rejects out-of-range ids, arity
/// mismatches and loops in irreflexive relations.  Symmetric relations are
/// closed under swap, so {i,j} may be given in either orientation.
RelationalStructure make_structure(Vocabulary vocab, int n,
                                   std::map<std::string, std::vector<std::vector<int>>> relations);

RelationalStructure read_structure_file(const std::string& path);
void write_structure_file(const RelationalStructure& m, const std::string& path);

}  // namespace zolab

#endif
